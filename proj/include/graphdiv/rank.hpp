#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "graphdiv/divisor.hpp"
#include "graphdiv/picard.hpp"

namespace graphdiv {

struct RankResult {
  std::int64_t value = -1;
  /// Lexicographically least effective divisor of degree value + 1 on the
  /// weightless loopless model whose removal leaves a non-effective class.
  /// Only filled for value >= 0 when requested.
  std::optional<Divisor> witness;
};

inline constexpr std::int64_t kDefaultDegreeCap = 30;

/// Rank computations on one graph, through its weightless loopless model.
/// Caches ranks by q-reduced class, so reuse an engine for many divisors
/// on the same graph. Not safe for concurrent use of a single instance.
class RankEngine {
 public:
  explicit RankEngine(const Graph& g, std::int64_t degree_cap = kDefaultDegreeCap);

  const Graph& graph() const { return model_.source; }
  const BulletModel& model() const { return model_; }

  /// Push-forward along the vertex embedding, zeros on the new vertices.
  Divisor embed(const Divisor& d) const;

  RankResult rank(const Divisor& d, bool with_witness = false);

  /// Direct evaluation of the definition: effective e of increasing degree,
  /// stopping at the first one that cannot be absorbed. Slower; used as a
  /// cross-check for rank().
  RankResult rank_by_definition(const Divisor& d);

  bool is_class_effective(const Divisor& d);

 private:
  struct VectorHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
  };

  std::vector<std::int64_t> embedded_coeffs(const Divisor& d) const;
  void check_degree(std::int64_t deg) const;
  std::int64_t rank_of_reduced(const std::vector<std::int64_t>& reduced);
  bool effective_after_removing(const std::vector<std::int64_t>& base, const std::vector<std::int64_t>& e);
  std::optional<Divisor> first_failure(const std::vector<std::int64_t>& base, std::int64_t k);

  BulletModel model_;
  Reducer reducer_;
  std::int64_t degree_cap_;
  std::unordered_map<std::vector<std::int64_t>, std::int64_t, VectorHash> memo_;
};

/// True iff some effective divisor is equivalent to d. Requires a weightless
/// loopless graph (RequiresWeightlessLoopless).
bool is_class_effective(const Divisor& d);

/// Rank on a weightless loopless graph (RequiresWeightlessLoopless).
RankResult rank_weightless(const Divisor& d, bool with_witness = false);

/// Rank on any graph, defined through the weightless loopless model.
RankResult rank(const Graph& g, const Divisor& d, bool with_witness = false);

struct RiemannRochReport {
  std::int64_t rank = 0;
  std::int64_t residual_rank = 0;  // rank of k_G - d
  std::int64_t degree = 0;
  std::int64_t genus = 0;
  bool holds = false;
};

RiemannRochReport riemann_roch(const Graph& g, const Divisor& d);
RiemannRochReport riemann_roch(RankEngine& engine, const Divisor& d);
bool riemann_roch_check(const Graph& g, const Divisor& d);

/// rank(d) <= degree(d)/2. Throws DegreeOutOfRange unless 0 <= deg <= 2g-2.
bool clifford_check(const Graph& g, const Divisor& d);
bool clifford_check(RankEngine& engine, const Divisor& d);

/// Whether the hypotheses of the subset bound hold: d(v) < r and
/// d(Z) < (Z.Z^c) for every nonempty Z inside V \ {v}. When they do,
/// rank(d) <= r - 1.
bool kz_bound(const Graph& g, const Divisor& d, VertexIndex v, std::int64_t r);

enum class DegreeZeroClass { PrincipalRank0, NonprincipalRankNeg };

DegreeZeroClass degree_zero_classification(const Graph& g, const Divisor& d);

}  // namespace graphdiv
