#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphdiv/corpus.hpp"

namespace graphdiv {

struct VerifyOptions {
  CorpusOptions corpus;
  /// Divisor coefficients range over [-max_coeff, max_coeff].
  std::int64_t max_coeff = 3;
  /// Upper limit on divisor degrees fed to rank-based suites.
  std::optional<std::int64_t> max_degree;
  std::uint32_t random_functions = 1000;
  std::uint64_t seed = 20240601;
  /// Suite names to run; empty runs everything.
  std::vector<std::string> only;
};

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// JSON object for the first failure in corpus order (smallest graph,
  /// then lexicographically least divisor).
  std::optional<std::string> counterexample;
};

struct VerifyReport {
  std::size_t graphs = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
  const PropertyResult* find(const std::string& name) const;
};

/// Suite names in execution order.
const std::vector<std::string>& verify_suite_names();

/// Caps: 5 vertices, 8 edges, total weight 3, coefficients 4. Beyond them
/// throws EnumerationCapExceeded.
void check_verify_caps(const VerifyOptions& opts);

VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace graphdiv
