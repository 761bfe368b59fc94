#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "graphdiv/graph.hpp"

namespace graphdiv {

/// Integer combination of the vertices of one particular graph, stored in
/// vertex order. Arithmetic between divisors on different graph handles
/// throws GraphMismatch.
class Divisor {
 public:
  /// Zero divisor.
  explicit Divisor(Graph graph);
  /// Throws SizeMismatch unless coeffs has one entry per vertex.
  Divisor(Graph graph, std::vector<std::int64_t> coeffs);

  static Divisor vertex(const Graph& graph, VertexIndex v);

  const Graph& graph() const { return graph_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  std::int64_t operator[](VertexIndex v) const { return coeffs_[v]; }
  std::int64_t& operator[](VertexIndex v) { return coeffs_[v]; }

  bool is_effective() const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  Divisor operator-() const;
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(std::int64_t k, Divisor d);

  /// Same graph handle and same coefficients.
  friend bool operator==(const Divisor& a, const Divisor& b);

  /// "(c1,c2,...)".
  std::string str() const;

 private:
  void check_same_graph(const Divisor& other) const;

  Graph graph_;
  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Divisor& d);

/// Integer-valued function on the vertices of a graph.
class RationalFunction {
 public:
  RationalFunction(Graph graph, std::vector<std::int64_t> values);

  const Graph& graph() const { return graph_; }
  std::span<const std::int64_t> values() const { return values_; }
  std::int64_t operator[](VertexIndex v) const { return values_[v]; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);

 private:
  Graph graph_;
  std::vector<std::int64_t> values_;
};

std::int64_t degree(const Divisor& d);

/// sum over w != v of (f(v) - f(w)) (v.w).
std::int64_t order_at(const RationalFunction& f, VertexIndex v);

Divisor principal_divisor(const RationalFunction& f);

/// Column of intersection numbers ((v1.v), ..., (vn.v)); equals
/// div(-indicator of v).
Divisor twister(const Graph& g, VertexIndex v);

/// sum over v of (2 w(v) - 2 + val(v)) v.
Divisor canonical_divisor(const Graph& g);

/// d(Z).
std::int64_t restrict_sum(const Divisor& d, std::span<const VertexIndex> z);

}  // namespace graphdiv
