// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "graphdiv/error.hpp"
#include "graphdiv/picard.hpp"
#include "graphdiv/rank.hpp"
#include "graphdiv/transforms.hpp"
#include "graphdiv/verify.hpp"
#include "support.hpp"

using namespace graphdiv;
using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

class Expect {
 public:
  void operator()(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.note = what;
    }
  }
  template <typename A, typename B>
  void eq(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) return;
    std::ostringstream s;
    s << what << ": got " << actual << ", expected " << expected;
    (*this)(false, s.str());
  }
  Outcome done(std::string note) {
    if (out_.ok) out_.note = std::move(note);
    return out_;
  }

 private:
  Outcome out_;
};

Outcome suites(const std::vector<std::string>& names, std::optional<std::int64_t> max_degree = std::nullopt) {
  VerifyOptions opts;
  opts.only = names;
  opts.max_degree = max_degree;
  const VerifyReport report = run_verify(opts);
  Expect expect;
  std::ostringstream note;
  note << report.graphs << " graphs;";
  for (const PropertyResult& p : report.properties) {
    note << " " << p.name << " " << p.checked << "/" << p.failures;
    expect(p.checked > 0, p.name + " checked nothing");
    expect(p.failures == 0, p.name + " failed: " + p.counterexample.value_or(""));
  }
  return expect.done(note.str() + " (checked/failures)");
}

Outcome check_failsc_fixtures() {
  Expect expect;
  const Graph g = failsc();
  const EdgeIndex e4[] = {3};
  const ContractionMap cm = contract(g, e4);
  const std::vector<std::tuple<Coeffs, Coeffs, std::int64_t, std::int64_t>> rows = {
      {{-2, 3, -1}, {-2, 2}, 0, -1}, {{1, -1, 1}, {1, 0}, -1, 0}, {{1, -1, 2}, {1, 1}, 0, 1}};
  for (const auto& [d, image, before, after] : rows) {
    const Divisor dd = div(g, d);
    const Divisor pushed = push_forward(cm, dd);
    expect(coeffs(pushed) == image, "push-forward of " + dd.str());
    expect.eq(rank(g, dd).value, before, "rank on G of " + dd.str());
    expect.eq(rank(cm.target, pushed).value, after, "rank on G/e4 of " + pushed.str());
  }
  return expect.done("ranks 0/-1, -1/0, 0/1 on G and G/e4");
}

Outcome check_genus2_case2() {
  Expect expect;
  const Graph b = binary(3);
  RankEngine engine(b);
  const std::vector<std::pair<Coeffs, std::int64_t>> table = {
      {{0, 0}, 0},  {{1, -1}, -1}, {{2, -2}, -1}, {{0, 1}, 0}, {{1, 0}, 0},
      {{2, -1}, -1}, {{0, 2}, 0},  {{1, 1}, 1},   {{2, 0}, 0}};
  for (const auto& [c, r] : table) expect.eq(engine.rank(div(b, c)).value, r, "rank of " + div(b, c).str());
  return expect.done("nine table entries exact");
}

Outcome check_genus2_case1() {
  Expect expect;
  const Graph g = genus2_case1();
  expect.eq(rank(g, div(g, {0, 1})).value, 0, "rank of (0,1)");
  expect.eq(rank(g, div(g, {0, 2})).value, 1, "rank of (0,2)");

  const BulletModel m = bullet_model(g);
  const Graph& b = m.bullet;
  expect(is_bridge(b, 0), "middle edge of the model is not a bridge");
  const EdgeIndex e[] = {0};
  const ContractionMap cm = contract(b, e);
  expect(picard_structure(b).invariant_factors == picard_structure(cm.target).invariant_factors,
         "Picard groups differ across the bridge");
  RankEngine source(b), target(cm.target);
  std::size_t checked = 0;
  for (std::int64_t d = 0; d <= 4; ++d) {
    for (const Divisor& rep : enumerate_classes(b, d)) {
      ++checked;
      const std::int64_t r1 = source.rank(rep).value, r2 = target.rank(push_forward(cm, rep)).value;
      expect(r1 == r2, "bridge contraction changed the rank of " + rep.str());
    }
  }
  expect.eq(source.rank(div(b, {0, 1, 0, 0})).value, 0, "rank of (0,1) on the model");
  expect.eq(source.rank(div(b, {0, 2, 0, 0})).value, 1, "rank of (0,2) on the model");
  return expect.done("ranks 0 and 1; " + std::to_string(checked) + " classes of degree 0..4 keep their rank across the bridge");
}

Outcome check_binary_graphs() {
  Expect expect;
  for (std::size_t g = 2; g <= 6; ++g) {
    const Graph b = binary(g + 1);
    expect.eq(rank(b, div(b, {1, 1})).value, 1, "genus " + std::to_string(g));
  }
  return expect.done("rank(1,1) = 1 for g = 2..6");
}

Outcome check_single_vertex() {
  Expect expect;
  std::size_t checked = 0;
  for (std::int64_t g = 0; g <= 6; ++g)
    for (std::int64_t h = 0; h <= g; ++h) {
      const Graph s = single(h, static_cast<std::size_t>(g - h));
      RankEngine engine(s);
      for (std::int64_t d = -2; d <= 14; ++d) {
        const std::int64_t expected = d < 0 ? -1 : d <= 2 * g - 2 ? d / 2 : d - g;
        ++checked;
        expect.eq(engine.rank(div(s, {d})).value, expected,
                  "g=" + std::to_string(g) + " h=" + std::to_string(h) + " d=" + std::to_string(d));
      }
    }
  return expect.done(std::to_string(checked) + " (g, h, d) triples");
}

Outcome check_picard() {
  Expect expect;
  expect(picard_structure(bullet_model(figure1()).bullet).invariant_factors == std::vector<BigInt>{2, 2},
         "Figure-1 model");
  expect(picard_structure(binary(3)).invariant_factors == std::vector<BigInt>{3}, "binary-3");
  for (std::size_t n = 3; n <= 8; ++n) {
    const Graph c = cycle(n);
    for (std::int64_t d = -2; d <= 3; ++d) {
      // (d, 0, ..., 0) and (d - 1, 0, ..., 1, ..., 0).
      std::vector<Divisor> listed;
      Coeffs first(n, 0);
      first[0] = d;
      listed.push_back(div(c, first));
      for (std::size_t i = 1; i < n; ++i) {
        Coeffs x(n, 0);
        x[0] = d - 1;
        x[i] = 1;
        listed.push_back(div(c, x));
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          expect(!is_equivalent(listed[i], listed[j]), "listed cycle representatives coincide");
      const auto reps = enumerate_classes(c, d);
      expect.eq(reps.size(), n, "classes on C" + std::to_string(n));
      for (const Divisor& r : reps) {
        int hits = 0;
        for (const Divisor& l : listed) hits += is_equivalent(r, l);
        expect(hits == 1, "class " + r.str() + " misses the listed representatives");
      }
    }
  }
  const Outcome corpus = suites({"complexity-oracle", "picard-order", "class-enumeration"});
  expect(corpus.ok, corpus.note);
  return expect.done("[2,2], [3], cycles 3..8 in degrees -2..3; " + corpus.note);
}

Outcome check_semibalanced() {
  Expect expect;
  const Graph b = binary(3);
  std::vector<std::string> golden;
  for (const BalanceCheck& row : balance_table(b, div(b, {3, -1}))) {
    golden.push_back(row.lhs.str() + ">=" + row.bound.str());
  }
  expect(golden == std::vector<std::string>{"0>=0", "3>=-1/2", "2>=2", "-1>=-1/2"}, "golden table for (3,-1)");
  const BalanceReport equality = balance_report(b, div(b, {1, 1}));
  expect(equality.semibalanced && equality.balanced, "(1,1) sits on the boundary and must pass");
  const BalanceReport off = balance_report(b, div(b, {5, 0}));
  expect(!off.semibalanced && off.violation && off.violation->bound.str() == "1", "(5,0) golden violation");
  const Outcome corpus = suites({"semibalanced-representatives", "balance-implication"});
  expect(corpus.ok, corpus.note);
  return expect.done("golden p/q rows; " + corpus.note);
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "failsc ranks before and after contracting e4", 1, check_failsc_fixtures},
      {2, "genus-2 binary table", 60, check_genus2_case2},
      {3, "genus-2 two weight-one vertices via the model", 60, check_genus2_case1},
      {4, "binary graphs g=2..6", 60, check_binary_graphs},
      {5, "single-vertex graphs", 10, check_single_vertex},
      {6, "Riemann-Roch on the corpus", 300, [] { return suites({"riemann-roch"}); }},
      {7, "Picard structure", 300, check_picard},
      {8, "equivalence oracles agree", 300, [] { return suites({"equivalence-oracles"}); }},
      {9, "contraction suite", 300,
       [] { return suites({"contraction-genus", "prin-pushforward", "bridge-rank", "nonbridge-complexity"}); }},
      {10, "property suites", 600,
       [] {
         return suites({"degree-bound", "rank-invariance", "clifford", "superadditivity", "degree-zero-dichotomy",
                        "canonical-dichotomy", "min-set", "kz-bound"});
       }},
      {11, "semibalanced suite", 300, check_semibalanced},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (o.ok && secs > c.budget_s) {
      o.ok = false;
      o.note += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " | " << o.note << " | "
              << std::fixed << std::setprecision(2) << secs << " s" << std::endl;
  }
  return all ? 0 : 1;
}
