#include "graphdiv/picard.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "graphdiv/error.hpp"

namespace graphdiv {

Reducer::Reducer(const Graph& g, VertexIndex basepoint) : n_(g.vertex_count()), q_(basepoint) {
  g.check_vertex(basepoint);
  adj_.assign(n_ * n_, 0);
  for (VertexIndex a = 0; a < n_; ++a)
    for (VertexIndex b = 0; b < n_; ++b) adj_[a * n_ + b] = g.multiplicity(a, b);

  std::vector<char> seen(n_, 0);
  std::deque<VertexIndex> queue{q_};
  seen[q_] = 1;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    bfs_order_.push_back(v);
    for (VertexIndex w = 0; w < n_; ++w) {
      if (!seen[w] && adj(v, w) > 0) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
}

void Reducer::fire(std::vector<std::int64_t>& coeffs, const std::vector<char>& in, std::int64_t k) const {
  for (VertexIndex a = 0; a < n_; ++a) {
    if (!in[a]) continue;
    for (VertexIndex b = 0; b < n_; ++b) {
      if (in[b]) continue;
      const std::int64_t m = adj(a, b);
      if (m == 0) continue;
      coeffs[a] -= k * m;
      coeffs[b] += k * m;
    }
  }
}

bool Reducer::burns_completely(const std::vector<std::int64_t>& coeffs) const {
  std::vector<char> burnt(n_, 0);
  std::vector<std::int64_t> heat(n_, 0);
  std::vector<VertexIndex> stack{q_};
  burnt[q_] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexIndex b = stack.back();
    stack.pop_back();
    for (VertexIndex u = 0; u < n_; ++u) {
      if (burnt[u] || adj(b, u) == 0) continue;
      heat[u] += adj(b, u);
      if (heat[u] > coeffs[u]) {
        burnt[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

void Reducer::reduce(std::vector<std::int64_t>& coeffs) const {
  // Stage 1: walking the BFS order backwards, let the already-settled
  // prefix lend chips to each negative vertex. Vertices after the prefix
  // only gain, so earlier fixes are never undone.
  std::vector<char> in(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) in[bfs_order_[i]] = 1;
  for (std::size_t i = n_; i-- > 1;) {
    const VertexIndex v = bfs_order_[i];
    in[v] = 0;
    if (coeffs[v] >= 0) continue;
    std::int64_t links = 0;
    for (VertexIndex a = 0; a < n_; ++a)
      if (in[a]) links += adj(v, a);
    const std::int64_t k = (-coeffs[v] + links - 1) / links;
    fire(coeffs, in, k);
  }

  // Stage 2: Dhar's burning algorithm; fire the unburnt set as many times
  // as stays legal, until the fire from q spreads everywhere.
  std::vector<char> burnt(n_);
  std::vector<std::int64_t> heat(n_);
  std::vector<VertexIndex> stack;
  for (;;) {
    std::fill(burnt.begin(), burnt.end(), 0);
    std::fill(heat.begin(), heat.end(), 0);
    burnt[q_] = 1;
    stack.assign(1, q_);
    std::size_t count = 1;
    while (!stack.empty()) {
      const VertexIndex b = stack.back();
      stack.pop_back();
      for (VertexIndex u = 0; u < n_; ++u) {
        if (burnt[u] || adj(b, u) == 0) continue;
        heat[u] += adj(b, u);
        if (heat[u] > coeffs[u]) {
          burnt[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    if (count == n_) return;

    std::int64_t k = std::numeric_limits<std::int64_t>::max();
    std::vector<char> unburnt(n_);
    for (VertexIndex u = 0; u < n_; ++u) {
      unburnt[u] = !burnt[u];
      if (unburnt[u] && heat[u] > 0) k = std::min(k, coeffs[u] / heat[u]);
    }
    fire(coeffs, unburnt, k);
  }
}

ReducedDivisor q_reduce(const Divisor& d, VertexIndex q) {
  Reducer reducer(d.graph(), q);
  std::vector<std::int64_t> coeffs(d.coeffs().begin(), d.coeffs().end());
  reducer.reduce(coeffs);
  return {Divisor(d.graph(), std::move(coeffs)), q};
}

bool is_q_reduced(const Divisor& d, VertexIndex q) {
  d.graph().check_vertex(q);
  for (VertexIndex v = 0; v < d.size(); ++v)
    if (v != q && d[v] < 0) return false;
  Reducer reducer(d.graph(), q);
  return reducer.burns_completely(std::vector<std::int64_t>(d.coeffs().begin(), d.coeffs().end()));
}

namespace {

IntMatrix reduced_matrix(const Graph& g) {
  const IntMatrix m = intersection_matrix(g);
  const std::size_t n = m.size();
  IntMatrix r(n - 1, std::vector<std::int64_t>(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) r[i - 1][j - 1] = m[i][j];
  return r;
}

}  // namespace

PrincipalLattice::PrincipalLattice(const Graph& g) : graph_(g) {
  const IntMatrix m = reduced_matrix(g);
  const std::size_t n = m.size();
  if (n == 0) return;
  det_ = abs(determinant(m));
  adjugate_.assign(n, std::vector<BigInt>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> unit(n, 0);
    unit[j] = 1;
    const auto column = solve_rational(m, unit);
    for (std::size_t i = 0; i < n; ++i) {
      const BigRational scaled = column[i] * BigRational(det_);
      adjugate_[i][j] = boost::multiprecision::numerator(scaled);
    }
  }
}

std::vector<BigInt> PrincipalLattice::class_key(const Divisor& d) const {
  if (!d.graph().same_as(graph_)) throw Error(ErrorCode::GraphMismatch, "divisor on another graph");
  const std::size_t n = adjugate_.size();
  std::vector<BigInt> key;
  key.reserve(n + 1);
  key.emplace_back(degree(d));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt x = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (d[j + 1] != 0) x += adjugate_[i][j] * d[j + 1];
    x %= det_;
    if (x < 0) x += det_;
    key.push_back(std::move(x));
  }
  return key;
}

bool PrincipalLattice::contains(const Divisor& d) const {
  const auto key = class_key(d);
  return std::all_of(key.begin(), key.end(), [](const BigInt& x) { return x == 0; });
}

bool is_equivalent(const Divisor& d1, const Divisor& d2) {
  if (!d1.graph().same_as(d2.graph())) throw Error(ErrorCode::GraphMismatch, "divisors live on different graphs");
  const Divisor diff = d1 - d2;
  if (degree(diff) != 0) return false;
  const Graph& g = d1.graph();
  if (g.vertex_count() == 1) return true;
  std::vector<std::int64_t> rhs(diff.coeffs().begin() + 1, diff.coeffs().end());
  const auto x = solve_rational(reduced_matrix(g), rhs);
  return std::all_of(x.begin(), x.end(),
                     [](const BigRational& v) { return boost::multiprecision::denominator(v) == 1; });
}

PicardStructure picard_structure(const Graph& g) {
  PicardStructure out{g, {}, 1};
  if (g.vertex_count() == 1) return out;
  for (BigInt& f : smith_diagonal(reduced_matrix(g))) {
    out.order *= f;
    if (f > 1) out.invariant_factors.push_back(std::move(f));
  }
  return out;
}

std::vector<Divisor> enumerate_classes(const Graph& g, std::int64_t d, std::uint64_t cap) {
  const BigInt count = complexity(g);
  if (count > cap) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                "Pic^d has " + count.str() + " classes, cap is " + std::to_string(cap));
  }
  const std::size_t n = g.vertex_count();
  const VertexIndex q = 0;
  Reducer reducer(g, q);

  // Superstable configurations satisfy 0 <= c(v) < (number of edges at v).
  std::vector<std::int64_t> bound(n, 1);
  for (VertexIndex v = 1; v < n; ++v) bound[v] = -intersection(g, v, v);

  std::vector<Divisor> out;
  std::vector<std::int64_t> c(n, 0);
  for (;;) {
    std::int64_t sum = 0;
    for (VertexIndex v = 1; v < n; ++v) sum += c[v];
    c[q] = d - sum;
    if (reducer.burns_completely(c)) out.emplace_back(g, c);

    VertexIndex v = 1;
    while (v < n && ++c[v] == bound[v]) c[v++] = 0;
    if (v >= n) break;
  }
  std::sort(out.begin(), out.end(), [](const Divisor& a, const Divisor& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
  });
  return out;
}

}  // namespace graphdiv
