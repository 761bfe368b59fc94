#pragma once

// Brute-force reference computations. Each one reaches its answer by a
// route that shares no code with the production path it is compared
// against: edge-subset enumeration for tree counts, breadth-first search over
// single-vertex firings for equivalence, and lattice-key lookups over all
// effective divisors for rank.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphdiv/divisor.hpp"
#include "graphdiv/picard.hpp"

namespace graphdiv::oracle {

/// Spanning trees by enumerating (|V|-1)-subsets of non-loop edges.
std::uint64_t spanning_trees(const Graph& g, std::optional<EdgeIndex> avoid = std::nullopt);

/// Labels every divisor with coefficients in [-bound, bound] by its
/// connected component under single-vertex firing and borrowing moves that
/// stay inside [-bound - margin, bound + margin]. Labels are indexed like
/// for_each_in_box over [-bound, bound].
std::vector<std::uint32_t> firing_components(const Graph& g, std::int64_t bound, std::int64_t margin);

/// Rank straight from the definition, with class effectivity decided by
/// looking the lattice key up among the keys of all effective divisors of
/// the same degree. Needs a weightless loopless graph.
class BruteRank {
 public:
  explicit BruteRank(const Graph& g);
  bool class_effective(const Divisor& d);
  std::int64_t rank(const Divisor& d);

 private:
  const std::set<std::string>& effective_keys(std::int64_t deg);
  std::string key(const Divisor& d) const;

  Graph graph_;
  PrincipalLattice lattice_;
  std::map<std::int64_t, std::set<std::string>> keys_;
};

/// Calls fn on every effective divisor of degree k over n vertices, in
/// lexicographic order.
template <typename Fn>
void for_each_effective(std::size_t n, std::int64_t k, Fn&& fn) {
  if (n == 0 || k < 0) return;
  std::vector<std::int64_t> e(n, 0);
  auto walk = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      fn(static_cast<const std::vector<std::int64_t>&>(e));
      return;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      e[i] = c;
      self(self, i + 1, left - c);
    }
    e[i] = 0;
  };
  walk(walk, 0, k);
}

}  // namespace graphdiv::oracle
