#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphdiv/divisor.hpp"
#include "graphdiv/graph.hpp"
#include "graphdiv/numeric.hpp"

namespace graphdiv {

/// Sums coefficients over each fiber of the contraction.
Divisor push_forward(const ContractionMap& cm, const Divisor& d);

/// For a single-edge contraction: every twister of the target is the
/// push-forward of the fiber-sum of source twisters. Throws
/// MultiEdgeContraction otherwise.
bool verify_prin_pushforward(const ContractionMap& cm);

/// rank(source, d) == rank(target, push_forward(d)) for a bridge
/// contraction. Throws MultiEdgeContraction or NotABridge.
bool bridge_rank_preservation(const ContractionMap& cm, const Divisor& d);

/// One evaluated instance of d(Z) >= k(Z) d / (2g-2) - (Z.Z^c) / 2.
struct BalanceCheck {
  VertexSet subset;
  Rational lhs;    // d(Z)
  Rational bound;  // right-hand side
};

struct BalanceReport {
  Divisor divisor;
  bool semibalanced = false;
  bool balanced = false;
  /// Lexicographically least subset violating the inequality, or the
  /// offending weight-zero valency-two vertex as a singleton.
  std::optional<VertexSet> violating_set;
  /// The failing inequality, when the violation is a subset inequality.
  std::optional<BalanceCheck> violation;
  /// Weight-zero valency-two vertex whose coefficient breaks the rules.
  std::optional<VertexIndex> violating_vertex;
};

/// Every weight-zero vertex has valency at least two.
bool is_semistable(const Graph& g);

/// Throws NotSemistable or GenusTooSmall (genus < 2).
BalanceReport balance_report(const Graph& g, const Divisor& d);

/// Every subset inequality, in lexicographic subset order (empty set first).
std::vector<BalanceCheck> balance_table(const Graph& g, const Divisor& d);

struct SemibalancedSearch {
  /// Translation multipliers live in [-box, box]; 0 picks the default
  /// degree + genus + 2.
  std::int64_t box = 0;
  int retries = 4;
};

/// A semibalanced divisor equivalent to d, found among d + sum c_v t_v
/// (v != v1) in growing sup-norm shells, lexicographic within a shell. Throws
/// SearchExhausted once the doubled box still has none.
Divisor find_semibalanced_representative(const Graph& g, const Divisor& d, SemibalancedSearch opts = {});

}  // namespace graphdiv
