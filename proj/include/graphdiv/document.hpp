#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphdiv/graph.hpp"

namespace graphdiv {

/// JSON form of a graph plus optional named divisors:
///
///   {"vertices": [{"id": "v1", "weight": 0}, ...],
///    "edges": [["v1", "v2"], ...],
///    "divisors": {"d": [-2, 3, -1]}}
///
/// Divisor arrays follow vertex order. Loops repeat the id.
struct GraphDocument {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> divisors;

  /// Throws ParseError on malformed input.
  static GraphDocument parse(std::string_view text);
  static GraphDocument load(const std::string& path);
  static GraphDocument from_graph(const Graph& g);

  /// Two-space indented JSON with a trailing newline.
  std::string serialize() const;

  Graph graph() const;

  /// Named divisor, or nullptr.
  const std::vector<std::int64_t>* divisor(std::string_view name) const;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

inline bool operator==(const Vertex& a, const Vertex& b) { return a.id == b.id && a.weight == b.weight; }

/// Parses "(-2,3,-1)" (also accepting U+2212 minus signs, brackets, or no
/// delimiters at all). Throws ParseError.
std::vector<std::int64_t> parse_divisor_literal(std::string_view text);

}  // namespace graphdiv
