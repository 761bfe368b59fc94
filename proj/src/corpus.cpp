#include "graphdiv/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace graphdiv {

namespace {

struct Shape {
  std::size_t n;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> mult;  // n*n symmetric, diagonal = loops
};

bool connected(const Shape& s) {
  std::vector<char> seen(s.n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < s.n; ++w) {
      if (w != v && !seen[w] && s.mult[v * s.n + w] > 0) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == s.n;
}

/// Lexicographically least (weights, upper triangle) over all relabelings.
std::vector<std::int64_t> canonical_key(const Shape& s) {
  std::vector<std::size_t> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::int64_t> best, key;
  do {
    key.clear();
    for (std::size_t i = 0; i < s.n; ++i) key.push_back(s.weights[perm[i]]);
    for (std::size_t i = 0; i < s.n; ++i)
      for (std::size_t j = i; j < s.n; ++j) key.push_back(s.mult[perm[i] * s.n + perm[j]]);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_key(std::size_t n, const std::vector<std::int64_t>& key) {
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i + 1), key[i]});
  std::vector<Edge> edges;
  std::size_t at = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++at)
      for (std::int64_t k = 0; k < key[at]; ++k) edges.push_back({i, j});
  return Graph::build(std::move(vertices), std::move(edges));
}

}  // namespace

std::vector<Graph> small_graph_corpus(const CorpusOptions& opts) {
  // (edges, total weight, key) sorts each vertex count deterministically.
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= opts.max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::vector<std::int64_t>> weightings;
    std::vector<std::int64_t> w(n, 0);
    std::function<void(std::size_t, std::int64_t)> weigh = [&](std::size_t i, std::int64_t left) {
      if (i == n) {
        weightings.push_back(w);
        return;
      }
      for (std::int64_t c = 0; c <= left; ++c) {
        w[i] = c;
        weigh(i + 1, left - c);
      }
      w[i] = 0;
    };
    weigh(0, opts.max_total_weight);

    std::set<std::tuple<std::int64_t, std::int64_t, std::vector<std::int64_t>>> seen;
    Shape shape{n, {}, std::vector<std::int64_t>(n * n, 0)};
    std::function<void(std::size_t, std::int64_t, std::int64_t)> place = [&](std::size_t p, std::int64_t left,
                                                                            std::int64_t used) {
      if (p == pairs.size()) {
        if (!connected(shape)) return;
        for (const auto& weights : weightings) {
          shape.weights = weights;
          const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
          seen.emplace(used, total, canonical_key(shape));
        }
        return;
      }
      const auto [i, j] = pairs[p];
      for (std::int64_t c = 0; c <= left; ++c) {
        shape.mult[i * n + j] = shape.mult[j * n + i] = c;
        place(p + 1, left - c, used + c);
      }
      shape.mult[i * n + j] = shape.mult[j * n + i] = 0;
    };
    place(0, static_cast<std::int64_t>(opts.max_edges), 0);

    for (const auto& [edges, weight, key] : seen) out.push_back(from_key(n, key));
  }
  return out;
}

}  // namespace graphdiv
