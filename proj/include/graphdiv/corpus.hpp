#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphdiv/graph.hpp"

namespace graphdiv {

struct CorpusOptions {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 6;  // loops count as edges
  std::int64_t max_total_weight = 2;
};

/// Every connected multigraph (loops allowed) within the caps, with every
/// weight assignment of total weight up to the cap, one per isomorphism
/// class. Ordered by vertex count, edge count, total weight, then canonical
/// form. Vertices are named v1..vn.
std::vector<Graph> small_graph_corpus(const CorpusOptions& opts = {});

/// Calls fn on every integer vector of length n with entries in [-bound, bound],
/// in lexicographic order.
template <typename Fn>
void for_each_in_box(std::size_t n, std::int64_t bound, Fn&& fn) {
  std::vector<std::int64_t> c(n, -bound);
  for (;;) {
    fn(static_cast<const std::vector<std::int64_t>&>(c));
    std::size_t i = n;
    while (i > 0 && c[i - 1] == bound) c[--i] = -bound;
    if (i == 0) return;
    ++c[i - 1];
  }
}

}  // namespace graphdiv
