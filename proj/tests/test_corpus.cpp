#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "graphdiv/corpus.hpp"
#include "graphdiv/oracles.hpp"
#include "support.hpp"

using namespace graphdiv;
using namespace testing;

namespace {

struct Shape {
  std::vector<std::int64_t> weights;
  std::vector<std::vector<std::int64_t>> mult;  // loops on the diagonal
};

Shape shape_of(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Shape s{std::vector<std::int64_t>(n), std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0))};
  for (VertexIndex v = 0; v < n; ++v) s.weights[v] = g.vertex(v).weight;
  for (const Edge& e : g.edges()) {
    ++s.mult[e.a][e.b];
    if (!e.is_loop()) ++s.mult[e.b][e.a];
  }
  return s;
}

bool isomorphic(const Shape& a, const Shape& b) {
  const std::size_t n = a.weights.size();
  if (b.weights.size() != n) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) {
      same = a.weights[i] == b.weights[p[i]];
      for (std::size_t j = 0; j < n && same; ++j) same = a.mult[i][j] == b.mult[p[i]][p[j]];
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Independent count: every labelled multigraph within the caps, kept when
// connected and not isomorphic to anything kept before.
std::size_t brute_count(std::size_t max_n, std::size_t max_m, std::int64_t max_w) {
  std::vector<Shape> kept;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::int64_t> m(slots.size(), 0);
    // Multiplicity vectors with total at most max_m.
    auto walk = [&](auto&& self, std::size_t k, std::size_t left) -> void {
      if (k == slots.size()) {
        std::vector<Edge> edges;
        for (std::size_t s = 0; s < slots.size(); ++s)
          for (std::int64_t c = 0; c < m[s]; ++c) edges.push_back({slots[s].first, slots[s].second});
        for_each_in_box(n, max_w, [&](const std::vector<std::int64_t>& raw) {
          std::vector<Vertex> vs;
          std::int64_t total = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (raw[i] < 0) return;
            total += raw[i];
            vs.push_back({"v" + std::to_string(i + 1), raw[i]});
          }
          if (total > max_w) return;
          Graph g = [&]() -> Graph {
            try {
              return Graph::build(vs, edges);
            } catch (const std::exception&) {
              return Graph::build({{"x", 0}}, std::vector<Edge>{});
            }
          }();
          if (g.vertex_count() != n) return;
          const Shape s = shape_of(g);
          for (const Shape& k : kept)
            if (isomorphic(k, s)) return;
          kept.push_back(s);
        });
        return;
      }
      for (std::size_t c = 0; c <= left; ++c) {
        m[k] = static_cast<std::int64_t>(c);
        self(self, k + 1, left - c);
      }
      m[k] = 0;
    };
    walk(walk, 0, max_m);
  }
  return kept.size();
}

}  // namespace

TEST_CASE("corpus matches an independent isomorphism-class count") {
  for (const auto& [n, m, w] : std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>{
           {1, 3, 2}, {2, 3, 1}, {3, 4, 0}, {3, 4, 2}, {4, 4, 1}}) {
    const auto corpus = small_graph_corpus({n, m, w});
    CHECK_MESSAGE(corpus.size() == brute_count(n, m, w), "caps " << n << " " << m << " " << w);
  }
}

TEST_CASE("corpus members respect the caps and are pairwise non-isomorphic") {
  const auto corpus = small_graph_corpus({4, 5, 1});
  std::vector<Shape> shapes;
  for (const Graph& g : corpus) {
    CHECK(g.vertex_count() <= 4);
    CHECK(g.edge_count() <= 5);
    CHECK(g.total_weight() <= 1);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) CHECK(g.vertex(v).id == "v" + std::to_string(v + 1));
    shapes.push_back(shape_of(g));
  }
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i + 1; j < shapes.size(); ++j)
      if (corpus[i].edge_count() == corpus[j].edge_count()) CHECK_FALSE(isomorphic(shapes[i], shapes[j]));
}

TEST_CASE("box and effective iteration orders") {
  std::vector<Coeffs> box;
  for_each_in_box(2, 1, [&](const Coeffs& c) { box.push_back(c); });
  CHECK(box.size() == 9);
  CHECK(box.front() == Coeffs{-1, -1});
  CHECK(box.back() == Coeffs{1, 1});
  CHECK(std::is_sorted(box.begin(), box.end()));

  std::vector<Coeffs> eff;
  oracle::for_each_effective(3, 2, [&](const Coeffs& c) { eff.push_back(c); });
  CHECK(eff == std::vector<Coeffs>{{0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}});
}

TEST_CASE("spanning tree oracle") {
  CHECK(oracle::spanning_trees(cycle(5)) == 5);
  CHECK(oracle::spanning_trees(failsc()) == 5);
  CHECK(oracle::spanning_trees(failsc(), 3) == 2);
  CHECK(oracle::spanning_trees(single(0, 2)) == 1);
}
