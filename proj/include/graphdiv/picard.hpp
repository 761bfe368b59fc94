#pragma once

#include <cstdint>
#include <vector>

#include "graphdiv/divisor.hpp"
#include "graphdiv/numeric.hpp"

namespace graphdiv {

/// Precomputed chip-firing data for one graph: adjacency and a BFS order
/// from the basepoint. Reuse one instance when reducing many divisors.
class Reducer {
 public:
  Reducer(const Graph& g, VertexIndex basepoint);

  VertexIndex basepoint() const { return q_; }

  /// Rewrites coeffs in place into the q-reduced representative of its class.
  void reduce(std::vector<std::int64_t>& coeffs) const;

  /// Dhar burning from q: true iff every vertex burns. Assumes coeffs are
  /// nonnegative away from q.
  bool burns_completely(const std::vector<std::int64_t>& coeffs) const;

 private:
  std::int64_t adj(VertexIndex a, VertexIndex b) const { return adj_[a * n_ + b]; }
  /// Fires the vertex set `in` (mask) k times.
  void fire(std::vector<std::int64_t>& coeffs, const std::vector<char>& in, std::int64_t k) const;

  std::size_t n_;
  VertexIndex q_;
  std::vector<std::int64_t> adj_;
  std::vector<VertexIndex> bfs_order_;
};

struct ReducedDivisor {
  Divisor divisor;
  VertexIndex basepoint;
};

/// Unique q-reduced divisor linearly equivalent to d.
ReducedDivisor q_reduce(const Divisor& d, VertexIndex q);

/// Nonnegative off q and no nonempty subset of V \ {q} can fire.
bool is_q_reduced(const Divisor& d, VertexIndex q);

/// Membership of divisor differences in Prin(G), decided by solving
/// against the reduced intersection matrix over Q.
class PrincipalLattice {
 public:
  explicit PrincipalLattice(const Graph& g);

  bool contains(const Divisor& d) const;

  /// Class invariant: degree, then the rational firing script that would
  /// carry d onto degree(d) * v1, scaled by the determinant and taken modulo
  /// it. Two divisors are equivalent iff their keys are equal.
  std::vector<BigInt> class_key(const Divisor& d) const;

 private:
  Graph graph_;
  BigInt det_;                                 // |det| of the reduced matrix
  std::vector<std::vector<BigInt>> adjugate_;  // det_ times its inverse
};

/// Throws GraphMismatch for divisors on different graphs.
bool is_equivalent(const Divisor& d1, const Divisor& d2);

struct PicardStructure {
  Graph graph;
  std::vector<BigInt> invariant_factors;  // each > 1, each divides the next
  BigInt order;
};

PicardStructure picard_structure(const Graph& g);

inline constexpr std::uint64_t kDefaultClassCap = 1'000'000;

/// One representative per class of Pic^d: the v1-reduced forms, sorted
/// lexicographically. Throws EnumerationCapExceeded past `cap` classes.
std::vector<Divisor> enumerate_classes(const Graph& g, std::int64_t d, std::uint64_t cap = kDefaultClassCap);

}  // namespace graphdiv
