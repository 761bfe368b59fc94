#include "graphdiv/cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphdiv/document.hpp"
#include "graphdiv/error.hpp"
#include "graphdiv/picard.hpp"
#include "graphdiv/rank.hpp"
#include "graphdiv/transforms.hpp"
#include "graphdiv/verify.hpp"

namespace graphdiv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json result;
  Json details = Json::object();
  std::string text;
  int exit = kExitOk;
};

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json coeffs_json(const Divisor& d) { return Json(std::vector<std::int64_t>(d.coeffs().begin(), d.coeffs().end())); }

Json ids_json(const Graph& g, std::span<const VertexIndex> vs) {
  Json out = Json::array();
  for (VertexIndex v : vs) out.push_back(g.vertex(v).id);
  return out;
}

std::string set_str(const Graph& g, std::span<const VertexIndex> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.vertex(vs[i]).id;
  return s + "}";
}

Json document_json(const Graph& g) { return Json::parse(GraphDocument::from_graph(g).serialize()); }

bool looks_literal(const std::string& s) {
  if (s.empty()) return true;
  const unsigned char c = static_cast<unsigned char>(s.front());
  return c == '(' || c == '[' || c == '-' || c == '+' || c == 0xE2 || std::isdigit(c) || std::isspace(c);
}

/// Shared state filled by CLI11 before the chosen handler runs.
struct Inputs {
  std::string graph_path;
  std::string divisor;
  std::string d1;
  std::string d2;
  std::string basepoint;
  std::string vertex;
  std::vector<std::string> edges;
  std::int64_t degree = 0;
  std::int64_t r = 0;
  bool witness = false;

  GraphDocument doc;
  Graph graph() const { return doc.graph(); }

  Divisor read_divisor(const Graph& g, const std::string& text) const {
    if (!looks_literal(text)) {
      if (const auto* named = doc.divisor(text)) return Divisor(g, *named);
      throw Error(ErrorCode::InvalidArgument, "no divisor named '" + text + "' in the document");
    }
    return Divisor(g, parse_divisor_literal(text));
  }

  std::vector<EdgeIndex> edge_list(const Graph& g) const {
    std::vector<EdgeIndex> out;
    for (const std::string& arg : edges) {
      std::stringstream ss(arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const bool named = tok.front() == 'e' || tok.front() == 'E';
        const std::string digits = named ? tok.substr(1) : tok;
        std::size_t used = 0;
        long long idx = -1;
        try {
          idx = std::stoll(digits, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != digits.size() || digits.empty() || idx < (named ? 1 : 0)) {
          throw Error(ErrorCode::UnknownEdge, "bad edge reference '" + tok + "'");
        }
        const auto e = static_cast<EdgeIndex>(named ? idx - 1 : idx);
        g.check_edge(e);
        out.push_back(e);
      }
    }
    return out;
  }
};

Outcome cmd_genus(Inputs& in) {
  const Graph g = in.graph();
  Outcome o;
  const std::int64_t gen = genus(g);
  o.result = gen;
  o.details = {{"b1", gen - g.total_weight()}, {"total_weight", g.total_weight()}};
  o.text = std::to_string(gen);
  return o;
}

Outcome cmd_canonical(Inputs& in) {
  const Graph g = in.graph();
  const Divisor k = canonical_divisor(g);
  Outcome o;
  o.result = coeffs_json(k);
  o.details = {{"degree", degree(k)}, {"genus", genus(g)}};
  o.text = k.str();
  return o;
}

Outcome cmd_rank(Inputs& in) {
  const Graph g = in.graph();
  const Divisor d = in.read_divisor(g, in.divisor);
  RankEngine engine(g);
  const RankResult r = engine.rank(d, in.witness);
  Outcome o;
  o.result = r.value;
  o.details = {{"degree", degree(d)}, {"genus", genus(g)}};
  o.text = std::to_string(r.value);
  if (r.witness) {
    const Graph& bullet = engine.model().bullet;
    VertexSet all(bullet.vertex_count());
    for (VertexIndex v = 0; v < all.size(); ++v) all[v] = v;
    o.details["witness"] = coeffs_json(*r.witness);
    o.details["witness_vertices"] = ids_json(bullet, all);
    o.text += "\nwitness " + r.witness->str();
  }
  return o;
}

Outcome cmd_reduce(Inputs& in) {
  const Graph g = in.graph();
  const Divisor d = in.read_divisor(g, in.divisor);
  const VertexIndex q = g.index_of(in.basepoint);
  const ReducedDivisor red = q_reduce(d, q);
  Outcome o;
  o.result = coeffs_json(red.divisor);
  o.details = {{"basepoint", g.vertex(q).id}, {"degree", degree(d)}};
  o.text = red.divisor.str();
  return o;
}

Outcome cmd_equiv(Inputs& in) {
  const Graph g = in.graph();
  const Divisor a = in.read_divisor(g, in.d1), b = in.read_divisor(g, in.d2);
  const bool same = is_equivalent(a, b);
  Outcome o;
  o.result = same;
  o.details = {{"d1", coeffs_json(a)}, {"d2", coeffs_json(b)}};
  o.text = same ? "equivalent" : "not equivalent";
  o.exit = same ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_pic(Inputs& in) {
  const PicardStructure pic = picard_structure(in.graph());
  Outcome o;
  Json factors = Json::array();
  std::string list;
  for (std::size_t i = 0; i < pic.invariant_factors.size(); ++i) {
    factors.push_back(big(pic.invariant_factors[i]));
    list += (i ? ", " : "") + pic.invariant_factors[i].str();
  }
  o.result = {{"invariant_factors", factors}, {"order", big(pic.order)}};
  o.text = "invariant factors [" + list + "]\norder " + pic.order.str();
  return o;
}

Outcome cmd_classes(Inputs& in) {
  const Graph g = in.graph();
  const auto reps = enumerate_classes(g, in.degree);
  Outcome o;
  o.result = Json::array();
  for (const Divisor& d : reps) {
    o.result.push_back(coeffs_json(d));
    o.text += (o.text.empty() ? "" : "\n") + d.str();
  }
  o.details = {{"degree", in.degree}, {"count", reps.size()}, {"basepoint", g.vertex(0).id}};
  return o;
}

Json contraction_details(const ContractionMap& cm) {
  Json map = Json::object();
  for (VertexIndex v = 0; v < cm.source.vertex_count(); ++v) {
    map[cm.source.vertex(v).id] = cm.target.vertex(cm.vertex_map[v]).id;
  }
  Json contracted = Json::array();
  for (EdgeIndex e : cm.contracted_edges) contracted.push_back("e" + std::to_string(e + 1));
  return {{"vertex_map", map}, {"contracted_edges", contracted}};
}

Outcome cmd_contract(Inputs& in) {
  const Graph g = in.graph();
  const ContractionMap cm = contract(g, in.edge_list(g));
  Outcome o;
  o.result = document_json(cm.target);
  o.details = contraction_details(cm);
  o.details["genus"] = genus(cm.target);
  o.text = GraphDocument::from_graph(cm.target).serialize();
  o.text.pop_back();
  return o;
}

Outcome cmd_pushforward(Inputs& in) {
  const Graph g = in.graph();
  const Divisor d = in.read_divisor(g, in.divisor);
  const ContractionMap cm = contract(g, in.edge_list(g));
  const Divisor image = push_forward(cm, d);
  Outcome o;
  o.result = coeffs_json(image);
  o.details = contraction_details(cm);
  VertexSet all(cm.target.vertex_count());
  for (VertexIndex v = 0; v < all.size(); ++v) all[v] = v;
  o.details["target_vertices"] = ids_json(cm.target, all);
  o.text = image.str();
  return o;
}

Outcome cmd_rr(Inputs& in) {
  const Graph g = in.graph();
  const RiemannRochReport rr = riemann_roch(g, in.read_divisor(g, in.divisor));
  Outcome o;
  o.result = rr.holds;
  o.details = {{"rank", rr.rank}, {"residual_rank", rr.residual_rank}, {"degree", rr.degree}, {"genus", rr.genus}};
  o.text = "r(d) = " + std::to_string(rr.rank) + ", r(k - d) = " + std::to_string(rr.residual_rank) +
           ", d - g + 1 = " + std::to_string(rr.degree - rr.genus + 1) + (rr.holds ? "\nholds" : "\nfails");
  o.exit = rr.holds ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_clifford(Inputs& in) {
  const Graph g = in.graph();
  const Divisor d = in.read_divisor(g, in.divisor);
  RankEngine engine(g);
  const bool ok = clifford_check(engine, d);
  const std::int64_t r = engine.rank(d).value;
  Outcome o;
  o.result = ok;
  o.details = {{"rank", r}, {"degree", degree(d)}};
  o.text = "r(d) = " + std::to_string(r) + ", d/2 = " + Rational(degree(d), 2).str() + (ok ? "\nholds" : "\nfails");
  o.exit = ok ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_kz(Inputs& in) {
  const Graph g = in.graph();
  const Divisor d = in.read_divisor(g, in.divisor);
  const VertexIndex v = g.index_of(in.vertex);
  const bool holds = kz_bound(g, d, v, in.r);
  Outcome o;
  o.result = holds;
  o.details = {{"vertex", g.vertex(v).id}, {"r", in.r}};
  if (holds) {
    o.details["rank_bound"] = in.r - 1;
    o.text = "hypotheses hold: rank <= " + std::to_string(in.r - 1);
  } else {
    o.text = "hypotheses fail";
    o.exit = kExitNegative;
  }
  return o;
}

Outcome cmd_balance(Inputs& in) {
  const Graph g = in.graph();
  const Divisor d = in.read_divisor(g, in.divisor);
  const BalanceReport report = balance_report(g, d);
  Outcome o;
  o.result = {{"semibalanced", report.semibalanced}, {"balanced", report.balanced}};
  Json rows = Json::array();
  std::string table;
  for (const BalanceCheck& row : balance_table(g, d)) {
    const bool ok = row.bound <= row.lhs;
    rows.push_back({{"subset", ids_json(g, row.subset)},
                    {"lhs", row.lhs.str()},
                    {"bound", row.bound.str()},
                    {"holds", ok}});
    table += set_str(g, row.subset) + " " + row.lhs.str() + " >= " + row.bound.str() + (ok ? "" : " FAILS") + "\n";
  }
  o.details["subsets"] = rows;
  if (report.violating_set) o.details["violating_set"] = ids_json(g, *report.violating_set);
  if (report.violating_vertex) o.details["violating_vertex"] = g.vertex(*report.violating_vertex).id;
  o.text = table + "semibalanced " + (report.semibalanced ? "yes" : "no") + "\nbalanced " +
           (report.balanced ? "yes" : "no");
  if (report.violating_set) o.text += "\nviolating set " + set_str(g, *report.violating_set);
  o.exit = report.semibalanced ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_semibalance_rep(Inputs& in) {
  const Graph g = in.graph();
  const Divisor d = in.read_divisor(g, in.divisor);
  const Divisor rep = find_semibalanced_representative(g, d);
  Outcome o;
  o.result = coeffs_json(rep);
  o.details = {{"degree", degree(rep)}, {"rank", rank(g, rep).value}};
  o.text = rep.str();
  return o;
}

Outcome cmd_bullet(Inputs& in) {
  const BulletModel m = bullet_model(in.graph());
  Outcome o;
  o.result = document_json(m.bullet);
  o.details = {{"genus", genus(m.bullet)}, {"added_vertices", m.bullet.vertex_count() - m.source.vertex_count()}};
  o.text = GraphDocument::from_graph(m.bullet).serialize();
  o.text.pop_back();
  return o;
}

Outcome cmd_verify(const VerifyOptions& opts) {
  const VerifyReport report = run_verify(opts);
  Outcome o;
  Json props = Json::array();
  std::ostringstream text;
  text << "graphs " << report.graphs << "\n";
  for (const PropertyResult& p : report.properties) {
    Json row = {{"name", p.name}, {"checked", p.checked}, {"failures", p.failures}};
    text << (p.failures == 0 ? "PASS " : "FAIL ") << p.name << " checked " << p.checked << " failures "
         << p.failures << "\n";
    if (p.counterexample) {
      row["counterexample"] = Json::parse(*p.counterexample);
      text << "  counterexample " << *p.counterexample << "\n";
    }
    props.push_back(row);
  }
  o.result = report.passed();
  o.details = {{"graphs", report.graphs}, {"properties", props}};
  o.text = text.str() + (report.passed() ? "all properties hold" : "violations found");
  o.exit = report.passed() ? kExitOk : kExitNegative;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisors, ranks and Picard groups on vertex-weighted multigraphs", "graphdiv"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  Inputs in;
  VerifyOptions vopts;
  std::string command;
  std::function<Outcome()> handler;

  auto sub = [&](const std::string& name, const std::string& help, Outcome (*fn)(Inputs&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("graph", in.graph_path, "Graph document (JSON)")->required();
    s->callback([&, name, fn] {
      command = name;
      handler = [&, fn] {
        in.doc = GraphDocument::load(in.graph_path);
        return fn(in);
      };
    });
    return s;
  };
  auto divisor_opt = [&](CLI::App* s) {
    s->add_option("--divisor,-d", in.divisor, "Divisor tuple such as \"(-2,3,-1)\" or a name from the document")
        ->required();
  };
  auto edges_opt = [&](CLI::App* s) {
    s->add_option("--edges", in.edges, "Edges as 0-based indices or e1, e2, ... (comma or space separated)")
        ->required()
        ->expected(1, -1);
  };

  sub("genus", "Genus b1 + total weight", cmd_genus);
  sub("canonical", "Canonical divisor", cmd_canonical);
  {
    CLI::App* s = sub("rank", "Rank of a divisor", cmd_rank);
    divisor_opt(s);
    s->add_flag("--witness", in.witness, "Also print a lexicographically least obstruction");
  }
  {
    CLI::App* s = sub("reduce", "q-reduced representative", cmd_reduce);
    divisor_opt(s);
    s->add_option("--basepoint,-q", in.basepoint, "Basepoint vertex id")->required();
  }
  {
    CLI::App* s = sub("equiv", "Linear equivalence of two divisors", cmd_equiv);
    s->add_option("--d1", in.d1, "First divisor")->required();
    s->add_option("--d2", in.d2, "Second divisor")->required();
  }
  sub("pic", "Invariant factors and order of the degree-0 Picard group", cmd_pic);
  sub("classes", "One reduced representative per divisor class of a degree", cmd_classes)
      ->add_option("--degree", in.degree, "Degree")
      ->required();
  edges_opt(sub("contract", "Contract a set of non-loop edges", cmd_contract));
  {
    CLI::App* s = sub("pushforward", "Push a divisor forward along a contraction", cmd_pushforward);
    divisor_opt(s);
    edges_opt(s);
  }
  divisor_opt(sub("rr-check", "Check r(d) - r(k - d) = d - g + 1", cmd_rr));
  divisor_opt(sub("clifford", "Check r(d) <= d/2 for 0 <= d <= 2g - 2", cmd_clifford));
  {
    CLI::App* s = sub("kz", "Check the subset hypotheses bounding the rank by r - 1", cmd_kz);
    divisor_opt(s);
    s->add_option("--vertex", in.vertex, "Vertex id")->required();
    s->add_option("--r", in.r, "Bound r")->required();
  }
  divisor_opt(sub("balance", "Semibalanced and balanced inequalities", cmd_balance));
  divisor_opt(sub("semibalance-rep", "Equivalent semibalanced divisor", cmd_semibalance_rep));
  sub("bullet", "Weightless loopless model", cmd_bullet);

  {
    CLI::App* s = app.add_subcommand("verify", "Run the property suites over the small-graph corpus");
    s->add_option("--max-vertices", vopts.corpus.max_vertices, "Vertex cap");
    s->add_option("--max-edges", vopts.corpus.max_edges, "Edge cap (loops included)");
    s->add_option("--max-weight", vopts.corpus.max_total_weight, "Total weight cap");
    s->add_option("--max-coeff", vopts.max_coeff, "Coefficient box half-width");
    s->add_option("--max-degree", vopts.max_degree, "Largest divisor degree fed to rank suites");
    s->add_option("--functions", vopts.random_functions, "Random functions per graph for the min-set suite");
    s->add_option("--seed", vopts.seed, "Random seed");
    s->add_option("--only", vopts.only, "Run only these suites")->delimiter(',');
    s->callback([&] {
      command = "verify";
      handler = [&] { return cmd_verify(vopts); };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Outcome o;
  try {
    o = handler();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (format == "json") {
    Json j;
    j["command"] = command;
    j["result"] = o.result;
    j["details"] = o.details;
    out << j.dump(2) << "\n";
  } else {
    out << o.text << "\n";
  }
  return o.exit;
}

}  // namespace graphdiv::cli
