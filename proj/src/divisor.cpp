#include "graphdiv/divisor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "graphdiv/error.hpp"

namespace graphdiv {

Divisor::Divisor(Graph graph) : graph_(std::move(graph)), coeffs_(graph_.vertex_count(), 0) {}

Divisor::Divisor(Graph graph, std::vector<std::int64_t> coeffs)
    : graph_(std::move(graph)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != graph_.vertex_count()) {
    throw Error(ErrorCode::SizeMismatch, "divisor has " + std::to_string(coeffs_.size()) +
                                             " entries for " + std::to_string(graph_.vertex_count()) +
                                             " vertices");
  }
}

Divisor Divisor::vertex(const Graph& graph, VertexIndex v) {
  graph.check_vertex(v);
  Divisor d(graph);
  d.coeffs_[v] = 1;
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

void Divisor::check_same_graph(const Divisor& other) const {
  if (!graph_.same_as(other.graph_)) throw Error(ErrorCode::GraphMismatch, "divisors live on different graphs");
}

Divisor& Divisor::operator+=(const Divisor& other) {
  check_same_graph(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  check_same_graph(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Divisor operator*(std::int64_t k, Divisor d) {
  for (auto& c : d.coeffs_) c *= k;
  return d;
}

bool operator==(const Divisor& a, const Divisor& b) {
  return a.graph_.same_as(b.graph_) && a.coeffs_ == b.coeffs_;
}

std::string Divisor::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Divisor& d) { return os << d.str(); }

RationalFunction::RationalFunction(Graph graph, std::vector<std::int64_t> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (values_.size() != graph_.vertex_count()) {
    throw Error(ErrorCode::SizeMismatch, "rational function has " + std::to_string(values_.size()) +
                                             " values for " + std::to_string(graph_.vertex_count()) +
                                             " vertices");
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (!a.graph_.same_as(b.graph_)) throw Error(ErrorCode::GraphMismatch, "functions live on different graphs");
  RationalFunction out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] += b.values_[i];
  return out;
}

std::int64_t degree(const Divisor& d) {
  return std::accumulate(d.coeffs().begin(), d.coeffs().end(), std::int64_t{0});
}

std::int64_t order_at(const RationalFunction& f, VertexIndex v) {
  const Graph& g = f.graph();
  g.check_vertex(v);
  std::int64_t ord = 0;
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
    if (w != v) ord += (f[v] - f[w]) * g.multiplicity(v, w);
  }
  return ord;
}

Divisor principal_divisor(const RationalFunction& f) {
  Divisor d(f.graph());
  for (VertexIndex v = 0; v < d.size(); ++v) d[v] = order_at(f, v);
  return d;
}

Divisor twister(const Graph& g, VertexIndex v) {
  g.check_vertex(v);
  Divisor d(g);
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) d[w] = intersection(g, w, v);
  return d;
}

Divisor canonical_divisor(const Graph& g) {
  Divisor k(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) k[v] = 2 * g.vertex(v).weight - 2 + valency(g, v);
  return k;
}

std::int64_t restrict_sum(const Divisor& d, std::span<const VertexIndex> z) {
  std::int64_t total = 0;
  for (VertexIndex v : z) {
    d.graph().check_vertex(v);
    total += d[v];
  }
  return total;
}

}  // namespace graphdiv
