#include "graphdiv/rank.hpp"

#include <algorithm>
#include <functional>

#include "graphdiv/error.hpp"

namespace graphdiv {

std::size_t RankEngine::VectorHash::operator()(const std::vector<std::int64_t>& v) const noexcept {
  std::size_t h = v.size();
  for (std::int64_t x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

RankEngine::RankEngine(const Graph& g, std::int64_t degree_cap)
    : model_(bullet_model(g)), reducer_(model_.bullet, 0), degree_cap_(degree_cap) {}

std::vector<std::int64_t> RankEngine::embedded_coeffs(const Divisor& d) const {
  if (!d.graph().same_as(graph())) throw Error(ErrorCode::GraphMismatch, "divisor is not on the engine's graph");
  std::vector<std::int64_t> out(model_.bullet.vertex_count(), 0);
  for (VertexIndex v = 0; v < d.size(); ++v) out[model_.embedding[v]] = d[v];
  return out;
}

Divisor RankEngine::embed(const Divisor& d) const { return Divisor(model_.bullet, embedded_coeffs(d)); }

void RankEngine::check_degree(std::int64_t deg) const {
  if (deg > degree_cap_) {
    throw Error(ErrorCode::DegreeCapExceeded,
                "degree " + std::to_string(deg) + " exceeds the rank cap " + std::to_string(degree_cap_));
  }
}

std::int64_t RankEngine::rank_of_reduced(const std::vector<std::int64_t>& reduced) {
  // Reduced at q, so the class is effective iff the q entry is nonnegative.
  if (reduced[reducer_.basepoint()] < 0) return -1;
  if (auto it = memo_.find(reduced); it != memo_.end()) return it->second;

  std::int64_t deg = 0;
  for (std::int64_t c : reduced) deg += c;
  // r(d) >= k iff r(d - v) >= k - 1 for every vertex v.
  std::int64_t best = deg;
  std::vector<std::int64_t> next;
  for (VertexIndex v = 0; v < reduced.size() && best > 0; ++v) {
    next = reduced;
    --next[v];
    reducer_.reduce(next);
    best = std::min(best, rank_of_reduced(next) + 1);
  }
  memo_.emplace(reduced, best);
  return best;
}

bool RankEngine::effective_after_removing(const std::vector<std::int64_t>& base,
                                          const std::vector<std::int64_t>& e) {
  std::vector<std::int64_t> work(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) work[i] = base[i] - e[i];
  reducer_.reduce(work);
  return work[reducer_.basepoint()] >= 0;
}

std::optional<Divisor> RankEngine::first_failure(const std::vector<std::int64_t>& base, std::int64_t k) {
  const std::size_t n = base.size();
  std::vector<std::int64_t> e(n, 0);
  std::optional<Divisor> found;
  // Lexicographically increasing effective divisors of degree k.
  std::function<bool(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == n) {
      e[i] = left;
      if (!effective_after_removing(base, e)) {
        found.emplace(model_.bullet, e);
        return true;
      }
      return false;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      e[i] = c;
      if (walk(i + 1, left - c)) return true;
    }
    e[i] = 0;
    return false;
  };
  walk(0, k);
  return found;
}

RankResult RankEngine::rank(const Divisor& d, bool with_witness) {
  const std::int64_t deg = degree(d);
  if (deg < 0) return {-1, std::nullopt};
  check_degree(deg);
  const auto base = embedded_coeffs(d);
  auto reduced = base;
  reducer_.reduce(reduced);
  RankResult out{rank_of_reduced(reduced), std::nullopt};
  if (with_witness && out.value >= 0) out.witness = first_failure(base, out.value + 1);
  return out;
}

RankResult RankEngine::rank_by_definition(const Divisor& d) {
  const std::int64_t deg = degree(d);
  if (deg < 0) return {-1, std::nullopt};
  check_degree(deg);
  const auto base = embedded_coeffs(d);
  if (!effective_after_removing(base, std::vector<std::int64_t>(base.size(), 0))) return {-1, std::nullopt};
  for (std::int64_t k = 1;; ++k) {
    if (auto witness = first_failure(base, k)) return {k - 1, std::move(witness)};
  }
}

bool RankEngine::is_class_effective(const Divisor& d) {
  if (degree(d) < 0) return false;
  const auto base = embedded_coeffs(d);
  return effective_after_removing(base, std::vector<std::int64_t>(base.size(), 0));
}

namespace {

void require_weightless_loopless(const Graph& g) {
  if (!g.is_weightless() || !g.is_loopless()) {
    throw Error(ErrorCode::RequiresWeightlessLoopless, "graph has weights or loops; use rank() instead");
  }
}

}  // namespace

bool is_class_effective(const Divisor& d) {
  require_weightless_loopless(d.graph());
  if (degree(d) < 0) return false;
  return q_reduce(d, 0).divisor[0] >= 0;
}

RankResult rank_weightless(const Divisor& d, bool with_witness) {
  require_weightless_loopless(d.graph());
  RankEngine engine(d.graph());
  return engine.rank(d, with_witness);
}

RankResult rank(const Graph& g, const Divisor& d, bool with_witness) {
  RankEngine engine(g);
  return engine.rank(d, with_witness);
}

RiemannRochReport riemann_roch(const Graph& g, const Divisor& d) {
  RankEngine engine(g);
  return riemann_roch(engine, d);
}

RiemannRochReport riemann_roch(RankEngine& engine, const Divisor& d) {
  const Graph& g = engine.graph();
  RiemannRochReport report;
  report.degree = degree(d);
  report.genus = genus(g);
  report.rank = engine.rank(d).value;
  report.residual_rank = engine.rank(canonical_divisor(g) - d).value;
  report.holds = report.rank - report.residual_rank == report.degree - report.genus + 1;
  return report;
}

bool riemann_roch_check(const Graph& g, const Divisor& d) { return riemann_roch(g, d).holds; }

bool clifford_check(const Graph& g, const Divisor& d) {
  RankEngine engine(g);
  return clifford_check(engine, d);
}

bool clifford_check(RankEngine& engine, const Divisor& d) {
  const Graph& g = engine.graph();
  const std::int64_t deg = degree(d);
  const std::int64_t gen = genus(g);
  if (deg < 0 || deg > 2 * gen - 2) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(deg) + " outside [0, " + std::to_string(2 * gen - 2) + "]");
  }
  return 2 * engine.rank(d).value <= deg;
}

bool kz_bound(const Graph& g, const Divisor& d, VertexIndex v, std::int64_t r) {
  g.check_vertex(v);
  if (!d.graph().same_as(g)) throw Error(ErrorCode::GraphMismatch, "divisor is not on this graph");
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be nonnegative");
  if (d[v] >= r) return false;

  VertexSet others;
  for (VertexIndex u = 0; u < g.vertex_count(); ++u)
    if (u != v) others.push_back(u);
  if (others.size() > 24) throw Error(ErrorCode::InvalidArgument, "too many vertices for subset enumeration");

  const std::uint64_t subsets = std::uint64_t{1} << others.size();
  VertexSet z;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    z.clear();
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1U) z.push_back(others[i]);
    if (restrict_sum(d, z) >= intersection(g, z, complement(g, z))) return false;
  }
  return true;
}

DegreeZeroClass degree_zero_classification(const Graph& g, const Divisor& d) {
  if (!d.graph().same_as(g)) throw Error(ErrorCode::GraphMismatch, "divisor is not on this graph");
  if (degree(d) != 0) throw Error(ErrorCode::DegreeNotZero, "degree is " + std::to_string(degree(d)));
  return is_equivalent(d, Divisor(g)) ? DegreeZeroClass::PrincipalRank0 : DegreeZeroClass::NonprincipalRankNeg;
}

}  // namespace graphdiv
