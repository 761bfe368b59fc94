#include "graphdiv/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "graphdiv/document.hpp"
#include "graphdiv/error.hpp"
#include "graphdiv/oracles.hpp"
#include "graphdiv/picard.hpp"
#include "graphdiv/rank.hpp"
#include "graphdiv/transforms.hpp"

namespace graphdiv {

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "bullet-model",
      "intersection-identities",
      "canonical-degree",
      "complexity-oracle",
      "picard-order",
      "class-enumeration",
      "equivalence-oracles",
      "principal-divisors",
      "min-set",
      "riemann-roch",
      "degree-bound",
      "high-degree",
      "rank-invariance",
      "rank-definition",
      "clifford",
      "superadditivity",
      "degree-zero-dichotomy",
      "canonical-dichotomy",
      "kz-bound",
      "contraction-genus",
      "prin-pushforward",
      "pushforward-homomorphism",
      "bridge-rank",
      "nonbridge-complexity",
      "balance-implication",
      "semibalanced-representatives",
      "semicontinuity-fixtures",
  };
  return names;
}

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failures == 0; });
}

const PropertyResult* VerifyReport::find(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

void check_verify_caps(const VerifyOptions& opts) {
  auto cap = [](bool bad, const std::string& what) {
    if (bad) throw Error(ErrorCode::EnumerationCapExceeded, what);
  };
  cap(opts.corpus.max_vertices < 1 || opts.corpus.max_vertices > 5, "max vertices must lie in [1, 5]");
  cap(opts.corpus.max_edges > 8, "max edges must be at most 8");
  cap(opts.corpus.max_total_weight < 0 || opts.corpus.max_total_weight > 3, "max total weight must lie in [0, 3]");
  cap(opts.max_coeff < 0 || opts.max_coeff > 4, "max coefficient must lie in [0, 4]");
  for (const auto& name : opts.only) {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
    }
  }
}

namespace {

using Coeffs = std::vector<std::int64_t>;

class Recorder {
 public:
  explicit Recorder(const VerifyOptions& opts) {
    for (const auto& name : verify_suite_names()) {
      if (opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), name) != opts.only.end()) {
        enabled_.insert(name);
        results_[name].name = name;
      }
    }
  }

  bool on(const std::string& name) const { return enabled_.count(name) > 0; }

  void check(const std::string& name, bool ok, const Graph& g, const Coeffs* d, const std::function<std::string()>& detail) {
    auto& r = results_.at(name);
    ++r.checked;
    if (ok) return;
    ++r.failures;
    if (r.counterexample) return;
    nlohmann::ordered_json j;
    j["property"] = name;
    j["graph"] = nlohmann::ordered_json::parse(GraphDocument::from_graph(g).serialize());
    if (d) j["divisor"] = *d;
    j["detail"] = detail();
    r.counterexample = j.dump();
  }

  std::vector<PropertyResult> results() const {
    std::vector<PropertyResult> out;
    for (const auto& name : verify_suite_names())
      if (on(name)) out.push_back(results_.at(name));
    return out;
  }

 private:
  std::set<std::string> enabled_;
  std::map<std::string, PropertyResult> results_;
};

std::string str(const Coeffs& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::int64_t sum(const Coeffs& c) {
  std::int64_t s = 0;
  for (auto x : c) s += x;
  return s;
}

std::vector<VertexSet> all_subsets(std::size_t n) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet z;
    for (VertexIndex v = 0; v < n; ++v)
      if (mask >> v & 1U) z.push_back(v);
    out.push_back(std::move(z));
  }
  return out;
}

struct GraphContext {
  const Graph& g;
  const VerifyOptions& opts;
  Recorder& rec;
  std::mt19937_64& rng;
  std::int64_t genus;
  std::int64_t max_degree;
  RankEngine engine;
  std::vector<Coeffs> box;  // lexicographic

  GraphContext(const Graph& graph, const VerifyOptions& o, Recorder& r, std::mt19937_64& random)
      : g(graph),
        opts(o),
        rec(r),
        rng(random),
        genus(graphdiv::genus(graph)),
        max_degree(std::min(2 * genus, o.max_degree.value_or(2 * genus))),
        engine(graph) {
    for_each_in_box(g.vertex_count(), o.max_coeff, [&](const Coeffs& c) { box.push_back(c); });
  }

  bool in_window(const Coeffs& c) const {
    const std::int64_t deg = sum(c);
    return deg >= -2 && deg <= max_degree;
  }

  Divisor div(const Coeffs& c) const { return Divisor(g, c); }

  void check(const std::string& name, bool ok, const Coeffs* d, const std::function<std::string()>& detail) {
    rec.check(name, ok, g, d, detail);
  }

  Divisor random_principal(std::int64_t spread) {
    std::uniform_int_distribution<std::int64_t> pick(-spread, spread);
    Divisor p(g);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) p += pick(rng) * twister(g, v);
    return p;
  }
};

void structural_suites(GraphContext& cx) {
  const Graph& g = cx.g;
  const std::size_t n = g.vertex_count();

  if (cx.rec.on("bullet-model")) {
    const BulletModel m = bullet_model(g);
    std::int64_t loops = 0;
    for (VertexIndex v = 0; v < n; ++v) loops += g.loops_at(v);
    const bool ok = genus(m.bullet) == cx.genus && m.bullet.is_weightless() && m.bullet.is_loopless() &&
                    bullet_model(m.bullet).bullet.same_as(m.bullet) &&
                    m.bullet.vertex_count() == n + static_cast<std::size_t>(loops + g.total_weight());
    bool embedded = true;
    for (VertexIndex v = 0; v < n; ++v) embedded = embedded && m.embedding[v] == v && m.bullet.vertex(v).id == g.vertex(v).id;
    cx.check("bullet-model", ok && embedded, nullptr, [&] { return "bullet model lost genus or structure"; });
  }

  if (cx.rec.on("intersection-identities")) {
    VertexSet all(n);
    for (VertexIndex v = 0; v < n; ++v) all[v] = v;
    cx.check("intersection-identities", intersection(g, all, all) == 0, nullptr, [] { return "(V.V) != 0"; });
    for (const auto& z : all_subsets(n)) {
      const VertexSet zc = complement(g, z);
      std::int64_t crossing = 0;
      std::vector<char> in(n, 0);
      for (VertexIndex v : z) in[v] = 1;
      for (const Edge& e : g.edges())
        if (in[e.a] != in[e.b]) ++crossing;
      const bool ok = intersection(g, z, z) == -intersection(g, z, zc) && intersection(g, z, zc) == crossing;
      cx.check("intersection-identities", ok, nullptr, [&] { return "subset identity fails"; });
    }
  }

  if (cx.rec.on("canonical-degree")) {
    std::int64_t valencies = 0;
    for (VertexIndex v = 0; v < n; ++v) valencies += valency(g, v);
    const bool ok = degree(canonical_divisor(g)) == 2 * cx.genus - 2 &&
                    valencies == 2 * static_cast<std::int64_t>(g.edge_count());
    cx.check("canonical-degree", ok, nullptr, [] { return "deg k_G != 2g - 2"; });
  }

  const BigInt c = complexity(g);
  if (cx.rec.on("complexity-oracle")) {
    const std::uint64_t brute = oracle::spanning_trees(g);
    cx.check("complexity-oracle", c == brute, nullptr,
             [&] { return "matrix-tree " + c.str() + " vs enumeration " + std::to_string(brute); });
  }

  if (cx.rec.on("picard-order")) {
    const PicardStructure pic = picard_structure(g);
    bool chain = true;
    for (std::size_t i = 0; i + 1 < pic.invariant_factors.size(); ++i)
      chain = chain && pic.invariant_factors[i + 1] % pic.invariant_factors[i] == 0;
    BigInt product = 1;
    for (const auto& f : pic.invariant_factors) product *= f;
    cx.check("picard-order", chain && product == c && pic.order == c, nullptr,
             [&] { return "invariant factors multiply to " + product.str() + ", complexity " + c.str(); });
  }

  if (cx.rec.on("class-enumeration")) {
    const PrincipalLattice lattice(g);
    for (std::int64_t d = -1; d <= 2; ++d) {
      const auto classes = enumerate_classes(g, d);
      std::set<std::vector<BigInt>> keys;
      bool ok = classes.size() == c;
      for (const auto& rep : classes) {
        ok = ok && degree(rep) == d && is_q_reduced(rep, 0);
        keys.insert(lattice.class_key(rep));
      }
      ok = ok && keys.size() == classes.size();
      cx.check("class-enumeration", ok, nullptr,
               [&] { return "degree " + std::to_string(d) + ": " + std::to_string(classes.size()) + " classes"; });
    }
  }
}

using FiringCache = std::map<Coeffs, std::vector<std::uint32_t>>;

void equivalence_suite(GraphContext& cx, FiringCache& cache) {
  if (!cx.rec.on("equivalence-oracles")) return;
  const Graph& g = cx.g;
  const std::size_t n = g.vertex_count();
  // Firing moves only see the multiplicity matrix, so graphs differing in
  // loops or weights share one search.
  Coeffs shape;
  std::int64_t max_val = 0;
  for (VertexIndex v = 0; v < n; ++v) {
    std::int64_t val = 0;
    for (VertexIndex w = 0; w < n; ++w) {
      shape.push_back(g.multiplicity(v, w));
      val += g.multiplicity(v, w);
    }
    max_val = std::max(max_val, val);
  }
  auto it = cache.find(shape);
  if (it == cache.end()) {
    it = cache.emplace(shape, oracle::firing_components(g, cx.opts.max_coeff, 2 * max_val + 2)).first;
  }
  const auto& bfs = it->second;

  const PrincipalLattice lattice(g);
  const Reducer reducer(g, 0);
  // Group by degree; within a slice, the three labelings must induce the
  // same partition, i.e. the same set of equal pairs.
  std::map<std::int64_t, std::vector<std::size_t>> slices;
  for (std::size_t i = 0; i < cx.box.size(); ++i) slices[sum(cx.box[i])].push_back(i);

  std::vector<std::vector<BigInt>> keys(cx.box.size());
  std::vector<Coeffs> reduced(cx.box.size());
  for (std::size_t i = 0; i < cx.box.size(); ++i) {
    keys[i] = lattice.class_key(cx.div(cx.box[i]));
    reduced[i] = cx.box[i];
    reducer.reduce(reduced[i]);
  }
  for (const auto& [deg, members] : slices) {
    std::map<std::uint32_t, std::size_t> by_bfs;
    std::map<std::vector<BigInt>, std::size_t> by_key;
    std::map<Coeffs, std::size_t> by_reduced;
    for (std::size_t i : members) {
      const std::size_t a = by_bfs.emplace(bfs[i], i).first->second;
      const std::size_t b = by_key.emplace(keys[i], i).first->second;
      const std::size_t r = by_reduced.emplace(reduced[i], i).first->second;
      const bool ok = a == b && b == r;
      cx.check("equivalence-oracles", ok, &cx.box[i], [&] {
        return "class representatives disagree: bfs " + str(cx.box[a]) + ", lattice " + str(cx.box[b]) +
               ", reduced " + str(cx.box[r]);
      });
    }
  }

  // Pairwise API on a random sample.
  std::uniform_int_distribution<std::size_t> pick(0, cx.box.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t i = pick(cx.rng), j = pick(cx.rng);
    const bool same = sum(cx.box[i]) == sum(cx.box[j]) && bfs[i] == bfs[j];
    cx.check("equivalence-oracles", is_equivalent(cx.div(cx.box[i]), cx.div(cx.box[j])) == same, &cx.box[i],
             [&] { return "is_equivalent disagrees with firing search against " + str(cx.box[j]); });
  }
}

void function_suites(GraphContext& cx) {
  const Graph& g = cx.g;
  const std::size_t n = g.vertex_count();
  std::uniform_int_distribution<std::int64_t> value(-3, 3);
  auto random_function = [&] {
    Coeffs f(n);
    for (auto& x : f) x = value(cx.rng);
    return RationalFunction(g, f);
  };

  if (cx.rec.on("principal-divisors")) {
    for (VertexIndex v = 0; v < n; ++v) {
      Coeffs indicator(n, 0);
      indicator[v] = -1;
      cx.check("principal-divisors", principal_divisor(RationalFunction(g, indicator)) == twister(g, v), nullptr,
               [&] { return "t_v != div(-indicator) at vertex " + std::to_string(v); });
    }
    for (int t = 0; t < 100; ++t) {
      const RationalFunction f = random_function(), h = random_function();
      Coeffs shifted(f.values().begin(), f.values().end());
      for (auto& x : shifted) x += 7;
      const Divisor df = principal_divisor(f);
      const bool ok = degree(df) == 0 && principal_divisor(f + h) == df + principal_divisor(h) &&
                      principal_divisor(-f) == -df && principal_divisor(RationalFunction(g, shifted)) == df;
      Coeffs fv(f.values().begin(), f.values().end());
      cx.check("principal-divisors", ok, &fv, [] { return "div is not a degree-0 homomorphism"; });
    }
  }

  if (cx.rec.on("min-set")) {
    for (std::uint32_t t = 0; t < cx.opts.random_functions; ++t) {
      const RationalFunction f = random_function();
      const auto vals = f.values();
      const std::int64_t lo = *std::min_element(vals.begin(), vals.end());
      const std::int64_t hi = *std::max_element(vals.begin(), vals.end());
      if (lo == hi) continue;
      VertexSet z;
      for (VertexIndex v = 0; v < n; ++v)
        if (f[v] == lo) z.push_back(v);
      const Divisor df = principal_divisor(f);
      bool ok = restrict_sum(df, z) <= -intersection(g, z, complement(g, z));
      for (VertexIndex v : z) ok = ok && df[v] <= 0;
      Coeffs fv(vals.begin(), vals.end());
      cx.check("min-set", ok, &fv, [] { return "minimum set inequality fails"; });
    }
  }
}

void rank_suites(GraphContext& cx) {
  const Graph& g = cx.g;
  const std::size_t n = g.vertex_count();
  const Divisor k = canonical_divisor(g);
  auto rank_of = [&](const Divisor& d) { return cx.engine.rank(d).value; };

  std::vector<std::size_t> window;
  for (std::size_t i = 0; i < cx.box.size(); ++i)
    if (cx.in_window(cx.box[i])) window.push_back(i);

  const bool brute_ok = g.is_weightless() && g.is_loopless() ? true : cx.engine.model().bullet.vertex_count() <= 6;
  std::optional<oracle::BruteRank> brute;
  if (cx.rec.on("rank-definition") && brute_ok) brute.emplace(cx.engine.model().bullet);

  std::vector<std::pair<Coeffs, std::int64_t>> nonnegative;  // for superadditivity
  std::size_t sample = 0;
  for (std::size_t i : window) {
    const Coeffs& c = cx.box[i];
    const Divisor d = cx.div(c);
    const std::int64_t deg = degree(d);
    const std::int64_t r = rank_of(d);

    if (cx.rec.on("riemann-roch")) {
      const std::int64_t rk = rank_of(k - d);
      cx.check("riemann-roch", r - rk == deg - cx.genus + 1, &c, [&] {
        return "r(d) = " + std::to_string(r) + ", r(k - d) = " + std::to_string(rk) + ", g = " + std::to_string(cx.genus);
      });
    }
    if (cx.rec.on("degree-bound")) {
      cx.check("degree-bound", r <= std::max<std::int64_t>(-1, deg) && (deg >= 0 || r == -1), &c,
               [&] { return "rank " + std::to_string(r); });
    }
    if (cx.rec.on("high-degree") && deg >= 2 * cx.genus - 1) {
      cx.check("high-degree", r == deg - cx.genus, &c, [&] { return "rank " + std::to_string(r); });
    }
    if (cx.rec.on("clifford") && deg >= 0 && deg <= 2 * cx.genus - 2) {
      cx.check("clifford", clifford_check(cx.engine, d) && 2 * r <= deg, &c, [&] { return "rank " + std::to_string(r); });
    }
    if (cx.rec.on("degree-zero-dichotomy") && deg == 0) {
      const bool principal = is_equivalent(d, Divisor(g));
      const auto cls = degree_zero_classification(g, d);
      const bool ok = r <= 0 && (r == 0) == principal &&
                      (cls == DegreeZeroClass::PrincipalRank0) == principal;
      cx.check("degree-zero-dichotomy", ok, &c, [&] { return "rank " + std::to_string(r); });
    }
    if (cx.rec.on("canonical-dichotomy") && deg == 2 * cx.genus - 2) {
      const bool canonical = is_equivalent(d, k);
      cx.check("canonical-dichotomy", r <= cx.genus - 1 && (r == cx.genus - 1) == canonical, &c,
               [&] { return "rank " + std::to_string(r); });
    }
    if (cx.rec.on("kz-bound")) {
      for (VertexIndex v = 0; v < n; ++v)
        for (std::int64_t bound = 0; bound <= 2; ++bound)
          if (kz_bound(g, d, v, bound)) {
            cx.check("kz-bound", r <= bound - 1, &c, [&] {
              return "hypotheses hold at vertex " + std::to_string(v) + " with r = " + std::to_string(bound) +
                     " but rank is " + std::to_string(r);
            });
          }
    }
    if (std::abs(deg) <= 4 && (cx.rec.on("rank-invariance") || cx.rec.on("rank-definition"))) {
      const Divisor p = cx.random_principal(2);
      if (cx.rec.on("rank-invariance")) {
        const std::int64_t moved = rank_of(d + p);
        cx.check("rank-invariance", moved == r, &c, [&] {
          return "adding " + (p).str() + " changed rank from " + std::to_string(r) + " to " + std::to_string(moved);
        });
      }
      // The definitional search is exponential; sample every fifth divisor.
      if (cx.rec.on("rank-definition") && sample++ % 5 == 0) {
        const std::int64_t direct = cx.engine.rank_by_definition(d + p).value;
        bool ok = direct == r;
        std::int64_t lattice_rank = r;
        if (brute) {
          lattice_rank = brute->rank(cx.engine.embed(d + p));
          ok = ok && lattice_rank == r;
        }
        cx.check("rank-definition", ok, &c, [&] {
          return "memoized " + std::to_string(r) + ", definition " + std::to_string(direct) + ", lattice " +
                 std::to_string(lattice_rank);
        });
      }
    }
    if (r >= 0 && deg <= cx.genus + 1) nonnegative.emplace_back(c, r);
  }

  if (cx.rec.on("superadditivity") && !nonnegative.empty()) {
    const std::size_t stride = std::max<std::size_t>(1, nonnegative.size() / 30);
    for (std::size_t a = 0; a < nonnegative.size(); a += stride)
      for (std::size_t b = a; b < nonnegative.size(); b += stride) {
        const Divisor sum_d = cx.div(nonnegative[a].first) + cx.div(nonnegative[b].first);
        if (degree(sum_d) > std::min<std::int64_t>(kDefaultDegreeCap, cx.opts.max_degree.value_or(kDefaultDegreeCap))) continue;
        const std::int64_t joint = rank_of(sum_d);
        cx.check("superadditivity", nonnegative[a].second + nonnegative[b].second <= joint, &nonnegative[a].first,
                 [&] { return "paired with " + str(nonnegative[b].first) + ", joint rank " + std::to_string(joint); });
      }
  }
}

void contraction_suites(GraphContext& cx) {
  const Graph& g = cx.g;
  if (!(cx.rec.on("contraction-genus") || cx.rec.on("prin-pushforward") || cx.rec.on("pushforward-homomorphism") ||
        cx.rec.on("bridge-rank") || cx.rec.on("nonbridge-complexity")))
    return;
  const BigInt c = complexity(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) continue;
    const EdgeIndex single[] = {e};
    const ContractionMap cm = contract(g, single);
    auto tag = [&](const std::string& what) { return "edge " + std::to_string(e) + ": " + what; };

    if (cx.rec.on("contraction-genus")) {
      cx.check("contraction-genus", genus(cm.target) == cx.genus, nullptr, [&] { return tag("genus changed"); });
    }
    if (cx.rec.on("prin-pushforward")) {
      cx.check("prin-pushforward", verify_prin_pushforward(cm), nullptr, [&] { return tag("Prin not covered"); });
    }
    if (cx.rec.on("pushforward-homomorphism")) {
      bool ok = true;
      std::vector<char> hit(cm.target.vertex_count(), 0);
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const Divisor image = push_forward(cm, Divisor::vertex(g, v));
        ok = ok && image == Divisor::vertex(cm.target, cm.vertex_map[v]);
        hit[cm.vertex_map[v]] = 1;
      }
      ok = ok && std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
      for (int t = 0; t < 20 && ok; ++t) {
        const Divisor a = cx.random_principal(3), b = cx.div(cx.box[t * 7919 % cx.box.size()]);
        ok = push_forward(cm, a + b) == push_forward(cm, a) + push_forward(cm, b) &&
             degree(push_forward(cm, b)) == degree(b);
      }
      cx.check("pushforward-homomorphism", ok, nullptr, [&] { return tag("not a degree-preserving surjection"); });
    }

    const bool bridge = is_bridge(g, e);
    if (bridge && cx.rec.on("bridge-rank")) {
      RankEngine target(cm.target);
      for (const Coeffs& coeffs : cx.box) {
        const std::int64_t deg = sum(coeffs);
        if (std::abs(deg) > 4 || deg > cx.opts.max_degree.value_or(4)) continue;
        const Divisor d = cx.div(coeffs);
        const std::int64_t before = cx.engine.rank(d).value;
        const std::int64_t after = target.rank(push_forward(cm, d)).value;
        cx.check("bridge-rank", before == after, &coeffs, [&] {
          return tag("rank " + std::to_string(before) + " became " + std::to_string(after));
        });
      }
    }
    if (!bridge && cx.rec.on("nonbridge-complexity")) {
      const BigInt reduced = complexity(cm.target);
      const std::uint64_t avoiding = oracle::spanning_trees(g, e);
      const bool ok = reduced < c && c == reduced + avoiding && reduced == oracle::spanning_trees(cm.target);
      cx.check("nonbridge-complexity", ok, nullptr, [&] {
        return tag("c(G) = " + c.str() + ", c(G/e) = " + reduced.str() + ", avoiding = " + std::to_string(avoiding));
      });
    }
  }
}

void balance_suites(GraphContext& cx) {
  const Graph& g = cx.g;
  if (cx.genus < 2 || !is_semistable(g)) return;

  if (cx.rec.on("balance-implication")) {
    for (const Coeffs& c : cx.box) {
      if (!cx.in_window(c)) continue;
      const BalanceReport report = balance_report(g, cx.div(c));
      const bool ok = (!report.balanced || report.semibalanced) &&
                      report.semibalanced == !report.violating_set.has_value();
      cx.check("balance-implication", ok, &c, [] { return "balanced without semibalanced, or missing witness"; });
    }
  }

  if (cx.rec.on("semibalanced-representatives")) {
    for (std::int64_t d = 2 * cx.genus - 1; d <= 2 * cx.genus + 1; ++d) {
      if (cx.opts.max_degree && d > *cx.opts.max_degree) continue;
      for (const Divisor& rep : enumerate_classes(g, d)) {
        const Divisor found = find_semibalanced_representative(g, rep);
        const std::int64_t r = cx.engine.rank(found).value;
        const bool ok = balance_report(g, found).semibalanced && is_equivalent(found, rep) && r == d - cx.genus;
        const Coeffs rc(rep.coeffs().begin(), rep.coeffs().end());
        cx.check("semibalanced-representatives", ok, &rc,
                 [&] { return "representative " + found.str() + " has rank " + std::to_string(r); });
      }
    }
  }
}

void semicontinuity_fixtures(Recorder& rec) {
  if (!rec.on("semicontinuity-fixtures")) return;
  // Three vertices; e1, e2 join v1 v2, e3 joins v1 v3, e4 joins v2 v3.
  const Graph g = Graph::build({{"v1", 0}, {"v2", 0}, {"v3", 0}},
                               std::vector<std::pair<std::string, std::string>>{
                                   {"v1", "v2"}, {"v1", "v2"}, {"v1", "v3"}, {"v2", "v3"}});
  const EdgeIndex e4[] = {3};
  const ContractionMap cm = contract(g, e4);
  RankEngine before(g), after(cm.target);
  const std::vector<std::tuple<Coeffs, std::int64_t, std::int64_t>> cases = {
      {{-2, 3, -1}, 0, -1}, {{1, -1, 1}, -1, 0}, {{1, -1, 2}, 0, 1}};
  for (const auto& [c, r_source, r_target] : cases) {
    const Divisor d(g, c);
    const std::int64_t a = before.rank(d).value, b = after.rank(push_forward(cm, d)).value;
    rec.check("semicontinuity-fixtures", a == r_source && b == r_target, g, &c,
              [&, a = a, b = b] { return "ranks " + std::to_string(a) + " -> " + std::to_string(b); });
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  check_verify_caps(opts);
  Recorder rec(opts);
  const auto corpus = small_graph_corpus(opts.corpus);
  std::mt19937_64 rng(opts.seed);
  FiringCache firing;
  for (const Graph& g : corpus) {
    GraphContext cx(g, opts, rec, rng);
    structural_suites(cx);
    equivalence_suite(cx, firing);
    function_suites(cx);
    rank_suites(cx);
    contraction_suites(cx);
    balance_suites(cx);
  }
  semicontinuity_fixtures(rec);
  return {corpus.size(), rec.results()};
}

}  // namespace graphdiv
