#include <doctest.h>

#include <map>

#include "graphdiv/corpus.hpp"
#include "graphdiv/error.hpp"
#include "graphdiv/oracles.hpp"
#include "graphdiv/picard.hpp"
#include "support.hpp"

using namespace graphdiv;
using namespace testing;

namespace {

// Reducedness by trying every nonempty subset of V \ {q}: a subset can fire
// when every member keeps a nonnegative coefficient after sending one chip
// along each edge leaving the subset.
bool brute_is_reduced(const Graph& g, const Coeffs& c, VertexIndex q) {
  const std::size_t n = g.vertex_count();
  for (VertexIndex v = 0; v < n; ++v)
    if (v != q && c[v] < 0) return false;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (mask >> q & 1U) continue;
    bool fires = true;
    for (VertexIndex v = 0; v < n && fires; ++v) {
      if (!(mask >> v & 1U)) continue;
      std::int64_t out = 0;
      for (VertexIndex w = 0; w < n; ++w)
        if (!(mask >> w & 1U)) out += g.multiplicity(v, w);
      fires = c[v] >= out;
    }
    if (fires) return false;
  }
  return true;
}

std::size_t box_index(const Coeffs& c, std::int64_t bound) {
  std::size_t idx = 0;
  for (std::int64_t x : c) idx = idx * static_cast<std::size_t>(2 * bound + 1) + static_cast<std::size_t>(x + bound);
  return idx;
}

}  // namespace

TEST_CASE("q_reduce") {
  SUBCASE("cycle against the firing search") {
    const Graph g = cycle(3);
    const ReducedDivisor r = q_reduce(div(g, {0, 2, 0}), 0);
    CHECK(coeffs(r.divisor) == Coeffs{1, 0, 1});
    CHECK(r.basepoint == 0);
    // The firing search puts both in one class, and (1,0,1) is the only
    // reduced member of that class inside the box.
    const std::int64_t bound = 2;
    const auto labels = oracle::firing_components(g, bound, 4);
    const auto cls = labels[box_index({0, 2, 0}, bound)];
    CHECK(labels[box_index({1, 0, 1}, bound)] == cls);
    std::vector<Coeffs> reduced;
    for_each_in_box(3, bound, [&](const Coeffs& c) {
      if (labels[box_index(c, bound)] == cls && brute_is_reduced(g, c, 0)) reduced.push_back(c);
    });
    CHECK(reduced == std::vector<Coeffs>{{1, 0, 1}});
  }
  SUBCASE("fixed points") {
    const Graph g = failsc();
    CHECK(coeffs(q_reduce(div(g, {-2, 3, -1}), 0).divisor) == Coeffs{0, 0, 0});
    CHECK(coeffs(q_reduce(div(g, {-1, 1, 1}), 0).divisor) == Coeffs{-1, 1, 1});
    CHECK(is_q_reduced(div(g, {-1, 1, 1}), 0));
    CHECK_FALSE(is_q_reduced(div(g, {-2, 3, -1}), 0));
  }
  SUBCASE("other basepoints") {
    const Graph g = failsc();
    const Divisor d = div(g, {4, -3, 2});
    for (VertexIndex q = 0; q < 3; ++q) {
      const Divisor r = q_reduce(d, q).divisor;
      CHECK(is_q_reduced(r, q));
      CHECK(brute_is_reduced(g, coeffs(r), q));
      CHECK(is_equivalent(r, d));
    }
  }
}

TEST_CASE("is_equivalent") {
  const Graph g = failsc();
  CHECK(is_equivalent(div(g, {-2, 3, -1}), Divisor(g)));
  const Graph c = cycle(3);
  CHECK_FALSE(is_equivalent(div(c, {1, 0, 0}), div(c, {0, 1, 0})));
  CHECK(is_equivalent(div(c, {5, -2, 9}), div(c, {5, -2, 9})));
  CHECK_FALSE(is_equivalent(div(c, {1, 0, 0}), div(c, {1, 1, 0})));
  const Graph s = single(1, 2);
  CHECK(is_equivalent(div(s, {3}), div(s, {7 - 4})));
  try {
    is_equivalent(div(c, {0, 0, 0}), div(cycle(3), {0, 0, 0}));
    FAIL("expected GraphMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GraphMismatch);
  }
}

TEST_CASE("picard_structure") {
  const PicardStructure fig = picard_structure(bullet_model(figure1()).bullet);
  CHECK(fig.invariant_factors == std::vector<BigInt>{2, 2});
  CHECK(fig.order == 4);
  CHECK(picard_structure(figure1()).order == 1);

  const PicardStructure b = picard_structure(binary(3));
  CHECK(b.invariant_factors == std::vector<BigInt>{3});
  CHECK(b.order == 3);

  const PicardStructure tree = picard_structure(path(4));
  CHECK(tree.invariant_factors.empty());
  CHECK(tree.order == 1);

  // Pic^0 of the complete graph K4 is Z/4 + Z/4.
  const Graph k4 = make(plain(4), {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v2", "v3"}, {"v2", "v4"}, {"v3", "v4"}});
  CHECK(picard_structure(k4).invariant_factors == std::vector<BigInt>{4, 4});
}

TEST_CASE("enumerate_classes") {
  SUBCASE("cycle of length 3") {
    const Graph c = cycle(3);
    const auto reps = enumerate_classes(c, 1);
    REQUIRE(reps.size() == 3);
    for (const Coeffs& target : std::vector<Coeffs>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
      int hits = 0;
      for (const Divisor& r : reps) hits += is_equivalent(r, div(c, target));
      CHECK(hits == 1);
    }
  }
  SUBCASE("binary graph degree 0") {
    const Graph b = binary(3);
    const auto reps = enumerate_classes(b, 0);
    REQUIRE(reps.size() == 3);
    for (const Coeffs& target : std::vector<Coeffs>{{0, 0}, {1, -1}, {2, -2}}) {
      int hits = 0;
      for (const Divisor& r : reps) hits += is_equivalent(r, div(b, target));
      CHECK(hits == 1);
    }
  }
  SUBCASE("tree") {
    for (std::int64_t d = -3; d <= 3; ++d) {
      const auto reps = enumerate_classes(path(4), d);
      REQUIRE(reps.size() == 1);
      CHECK(coeffs(reps[0]) == Coeffs{d, 0, 0, 0});
    }
  }
  SUBCASE("cap") {
    try {
      enumerate_classes(cycle(3), 0, 2);
      FAIL("expected EnumerationCapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EnumerationCapExceeded);
    }
  }
  SUBCASE("sorted and reduced") {
    const auto reps = enumerate_classes(failsc(), 2);
    CHECK(std::is_sorted(reps.begin(), reps.end(),
                         [](const Divisor& a, const Divisor& b) { return coeffs(a) < coeffs(b); }));
    for (const Divisor& r : reps) CHECK(is_q_reduced(r, 0));
  }
}

TEST_CASE("property: reduction, lattice keys and the firing search agree") {
  const std::int64_t bound = 2;
  for (const Graph& g : small_graph_corpus({3, 4, 0})) {
    if (!g.is_loopless()) continue;
    const std::size_t n = g.vertex_count();
    const auto labels = oracle::firing_components(g, bound, 6);
    const PrincipalLattice lattice(g);
    std::map<Coeffs, std::uint32_t> label_of_form;
    std::map<std::uint32_t, Coeffs> form_of_label;
    for_each_in_box(n, bound, [&](const Coeffs& c) {
      const Divisor d = div(g, c);
      const Coeffs r = coeffs(q_reduce(d, 0).divisor);
      CHECK(brute_is_reduced(g, r, 0));
      CHECK(lattice.class_key(d) == lattice.class_key(div(g, r)));
      const std::uint32_t label = labels[box_index(c, bound)];
      CHECK(label_of_form.emplace(r, label).first->second == label);
      CHECK(form_of_label.emplace(label, r).first->second == r);
    });
    CHECK(enumerate_classes(g, 1).size() == oracle::spanning_trees(g));
  }
}
