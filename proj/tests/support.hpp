#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphdiv/divisor.hpp"
#include "graphdiv/document.hpp"
#include "graphdiv/graph.hpp"

namespace testing {

using graphdiv::Divisor;
using graphdiv::Graph;
using Coeffs = std::vector<std::int64_t>;
using EdgeIds = std::vector<std::pair<std::string, std::string>>;

inline Graph make(std::vector<graphdiv::Vertex> vs, const EdgeIds& es) { return Graph::build(std::move(vs), es); }

inline std::vector<graphdiv::Vertex> plain(std::size_t n) {
  std::vector<graphdiv::Vertex> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back({"v" + std::to_string(i), 0});
  return vs;
}

// v1 v2 v3; e1, e2 join v1 v2; e3 joins v1 v3; e4 joins v2 v3.
inline Graph failsc() { return make(plain(3), {{"v1", "v2"}, {"v1", "v2"}, {"v1", "v3"}, {"v2", "v3"}}); }

inline Graph binary(std::size_t edges) { return make(plain(2), EdgeIds(edges, {"v1", "v2"})); }

inline Graph cycle(std::size_t n) {
  EdgeIds es;
  for (std::size_t i = 1; i <= n; ++i) es.emplace_back("v" + std::to_string(i), "v" + std::to_string(i % n + 1));
  return make(plain(n), es);
}

inline Graph path(std::size_t n) {
  EdgeIds es;
  for (std::size_t i = 1; i < n; ++i) es.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  return make(plain(n), es);
}

// One vertex of weight h carrying `loops` loops.
inline Graph single(std::int64_t h, std::size_t loops) { return make({{"v", h}}, EdgeIds(loops, {"v", "v"})); }

// v (weight 1) joined to w, which carries a loop.
inline Graph figure1() { return make({{"v", 1}, {"w", 0}}, {{"v", "w"}, {"w", "w"}}); }

inline Graph genus2_case1() { return make({{"v1", 1}, {"v2", 1}}, {{"v1", "v2"}}); }

inline Divisor div(const Graph& g, Coeffs c) { return Divisor(g, std::move(c)); }

inline Coeffs coeffs(const Divisor& d) { return Coeffs(d.coeffs().begin(), d.coeffs().end()); }

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline Graph load(const std::string& name) { return graphdiv::GraphDocument::load(fixture(name)).graph(); }

}  // namespace testing
