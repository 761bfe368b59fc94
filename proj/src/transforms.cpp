#include "graphdiv/transforms.hpp"

#include <algorithm>
#include <functional>

#include "graphdiv/error.hpp"
#include "graphdiv/rank.hpp"

namespace graphdiv {

Divisor push_forward(const ContractionMap& cm, const Divisor& d) {
  if (!d.graph().same_as(cm.source)) throw Error(ErrorCode::GraphMismatch, "divisor is not on the contraction source");
  Divisor out(cm.target);
  for (VertexIndex v = 0; v < d.size(); ++v) out[cm.vertex_map[v]] += d[v];
  return out;
}

namespace {

void require_single_edge(const ContractionMap& cm) {
  if (cm.contracted_edges.size() != 1) {
    throw Error(ErrorCode::MultiEdgeContraction,
                "expected one contracted edge, got " + std::to_string(cm.contracted_edges.size()));
  }
}

}  // namespace

bool verify_prin_pushforward(const ContractionMap& cm) {
  require_single_edge(cm);
  const Graph& source = cm.source;
  const Graph& target = cm.target;
  for (VertexIndex t = 0; t < target.vertex_count(); ++t) {
    Divisor fiber_sum(source);
    for (VertexIndex v = 0; v < source.vertex_count(); ++v)
      if (cm.vertex_map[v] == t) fiber_sum += twister(source, v);
    if (push_forward(cm, fiber_sum) != twister(target, t)) return false;
  }
  return true;
}

bool bridge_rank_preservation(const ContractionMap& cm, const Divisor& d) {
  require_single_edge(cm);
  if (!is_bridge(cm.source, cm.contracted_edges.front())) {
    throw Error(ErrorCode::NotABridge, "edge " + std::to_string(cm.contracted_edges.front()) + " is not a bridge");
  }
  return rank(cm.source, d).value == rank(cm.target, push_forward(cm, d)).value;
}

bool is_semistable(const Graph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.vertex(v).weight == 0 && valency(g, v) < 2) return false;
  return true;
}

namespace {

/// Subset data for the balance inequality, in lexicographic subset order.
struct SubsetTable {
  struct Row {
    VertexSet subset;
    std::uint64_t mask = 0;
    std::int64_t canonical = 0;  // k(Z)
    std::int64_t boundary = 0;   // (Z.Z^c)
  };

  SubsetTable(const Graph& g) : genus(graphdiv::genus(g)), k(canonical_divisor(g)) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw Error(ErrorCode::InvalidArgument, "too many vertices for subset enumeration");
    VertexSet current;
    std::function<void(VertexIndex)> walk = [&](VertexIndex from) {
      Row row;
      row.subset = current;
      for (VertexIndex v : current) row.mask |= std::uint64_t{1} << v;
      row.canonical = restrict_sum(k, current);
      row.boundary = intersection(g, current, complement(g, current));
      rows.push_back(std::move(row));
      for (VertexIndex v = from; v < n; ++v) {
        current.push_back(v);
        walk(v + 1);
        current.pop_back();
      }
    };
    walk(0);
  }

  Rational bound(const Row& row, std::int64_t deg) const {
    return Rational(row.canonical * deg, 2 * genus - 2) - Rational(row.boundary, 2);
  }

  /// d(Z) * 2(2g-2) >= 2 k(Z) d - (2g-2)(Z.Z^c), cross-multiplied.
  bool holds(const Row& row, std::int64_t dz, std::int64_t deg) const {
    const __int128 lhs = static_cast<__int128>(dz) * 2 * (2 * genus - 2);
    const __int128 rhs = static_cast<__int128>(2) * row.canonical * deg -
                         static_cast<__int128>(2 * genus - 2) * row.boundary;
    return lhs >= rhs;
  }

  std::int64_t genus;
  Divisor k;
  std::vector<Row> rows;
};

void require_balance_preconditions(const Graph& g) {
  if (!is_semistable(g)) throw Error(ErrorCode::NotSemistable, "a weight-zero vertex has valency below 2");
  if (genus(g) < 2) throw Error(ErrorCode::GenusTooSmall, "genus " + std::to_string(genus(g)) + " < 2");
}

std::int64_t subset_sum(const Divisor& d, std::uint64_t mask) {
  std::int64_t total = 0;
  for (VertexIndex v = 0; v < d.size(); ++v)
    if (mask >> v & 1U) total += d[v];
  return total;
}

BalanceReport evaluate(const Graph& g, const SubsetTable& table, const Divisor& d) {
  BalanceReport report{d, false, false, std::nullopt, std::nullopt, std::nullopt};
  const std::int64_t deg = degree(d);
  for (const auto& row : table.rows) {
    const std::int64_t dz = subset_sum(d, row.mask);
    if (!table.holds(row, dz, deg)) {
      report.violating_set = row.subset;
      report.violation = BalanceCheck{row.subset, Rational(dz), table.bound(row, deg)};
      break;
    }
  }
  std::optional<VertexIndex> negative, unbalanced;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).weight != 0 || valency(g, v) != 2) continue;
    if (d[v] < 0 && !negative) negative = v;
    if (d[v] != 1 && !unbalanced) unbalanced = v;
  }
  report.semibalanced = !report.violating_set && !negative;
  report.balanced = report.semibalanced && !unbalanced;
  if (!report.violating_set && negative) {
    report.violating_vertex = negative;
    report.violating_set = VertexSet{*negative};
  } else if (report.semibalanced && unbalanced) {
    report.violating_vertex = unbalanced;
  }
  return report;
}

}  // namespace

BalanceReport balance_report(const Graph& g, const Divisor& d) {
  if (!d.graph().same_as(g)) throw Error(ErrorCode::GraphMismatch, "divisor is not on this graph");
  require_balance_preconditions(g);
  return evaluate(g, SubsetTable(g), d);
}

std::vector<BalanceCheck> balance_table(const Graph& g, const Divisor& d) {
  if (!d.graph().same_as(g)) throw Error(ErrorCode::GraphMismatch, "divisor is not on this graph");
  require_balance_preconditions(g);
  const SubsetTable table(g);
  const std::int64_t deg = degree(d);
  std::vector<BalanceCheck> out;
  for (const auto& row : table.rows) out.push_back({row.subset, Rational(subset_sum(d, row.mask)), table.bound(row, deg)});
  return out;
}

Divisor find_semibalanced_representative(const Graph& g, const Divisor& d, SemibalancedSearch opts) {
  if (!d.graph().same_as(g)) throw Error(ErrorCode::GraphMismatch, "divisor is not on this graph");
  require_balance_preconditions(g);
  const SubsetTable table(g);
  const std::size_t n = g.vertex_count();
  std::int64_t box = opts.box > 0 ? opts.box : std::max<std::int64_t>(1, degree(d) + genus(g) + 2);
  for (int i = 0; i < opts.retries; ++i) box *= 2;

  std::vector<Divisor> generators;
  for (VertexIndex v = 1; v < n; ++v) generators.push_back(twister(g, v));

  // Shells of growing sup-norm; shell 0 is d itself.
  std::vector<std::int64_t> c(generators.size());
  for (std::int64_t shell = 0; shell <= box; ++shell) {
    if (shell > 0 && generators.empty()) break;
    std::fill(c.begin(), c.end(), -shell);
    for (;;) {
      const bool on_shell = generators.empty() ||
                            std::any_of(c.begin(), c.end(), [&](std::int64_t x) { return x == shell || x == -shell; });
      if (on_shell) {
        Divisor candidate = d;
        for (std::size_t i = 0; i < generators.size(); ++i)
          if (c[i] != 0) candidate += c[i] * generators[i];
        if (evaluate(g, table, candidate).semibalanced) return candidate;
      }
      std::size_t i = c.size();
      while (i > 0 && c[i - 1] == shell) c[--i] = -shell;
      if (i == 0) break;
      ++c[i - 1];
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no semibalanced representative with multipliers in [-" + std::to_string(box) + ", " +
                  std::to_string(box) + "]");
}

}  // namespace graphdiv
