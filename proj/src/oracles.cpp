#include "graphdiv/oracles.hpp"

#include <deque>
#include <numeric>

#include "graphdiv/corpus.hpp"
#include "graphdiv/error.hpp"

namespace graphdiv::oracle {

std::uint64_t spanning_trees(const Graph& g, std::optional<EdgeIndex> avoid) {
  const std::size_t n = g.vertex_count();
  std::vector<EdgeIndex> usable;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!g.edge(e).is_loop() && e != avoid) usable.push_back(e);
  if (n == 1) return 1;
  if (usable.size() < n - 1) return 0;
  if (usable.size() > 30) throw Error(ErrorCode::InvalidArgument, "too many edges for subset enumeration");

  std::uint64_t count = 0;
  std::vector<char> pick(usable.size(), 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(n - 1), pick.end(), 1);
  std::vector<std::size_t> parent(n);
  do {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    bool acyclic = true;
    for (std::size_t i = 0; i < usable.size() && acyclic; ++i) {
      if (!pick[i]) continue;
      const std::size_t a = find(g.edge(usable[i]).a), b = find(g.edge(usable[i]).b);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (acyclic) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

std::vector<std::uint32_t> firing_components(const Graph& g, std::int64_t bound, std::int64_t margin) {
  const std::size_t n = g.vertex_count();
  const std::int64_t outer = bound + margin;
  const std::int64_t side = 2 * outer + 1;
  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) states *= static_cast<std::size_t>(side);
  if (states > 50'000'000) throw Error(ErrorCode::InvalidArgument, "firing search space too large");

  auto encode = [&](const std::vector<std::int64_t>& c) {
    std::size_t idx = 0;
    for (std::int64_t x : c) idx = idx * side + static_cast<std::size_t>(x + outer);
    return idx;
  };

  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> label(states, kUnseen);
  std::uint32_t next_label = 0;
  std::vector<std::int64_t> cur(n), nb(n);

  auto decode = [&](std::size_t idx, std::vector<std::int64_t>& c) {
    for (std::size_t i = n; i-- > 0;) {
      c[i] = static_cast<std::int64_t>(idx % side) - outer;
      idx /= side;
    }
  };

  std::vector<std::uint32_t> out;
  for_each_in_box(n, bound, [&](const std::vector<std::int64_t>& start) {
    const std::size_t s = encode(start);
    if (label[s] == kUnseen) {
      const std::uint32_t id = next_label++;
      label[s] = id;
      std::deque<std::size_t> queue{s};
      while (!queue.empty()) {
        decode(queue.front(), cur);
        queue.pop_front();
        for (VertexIndex v = 0; v < n; ++v) {
          for (int sign : {1, -1}) {
            // sign = 1 fires v, sign = -1 borrows at v.
            bool inside = true;
            for (VertexIndex w = 0; w < n && inside; ++w) {
              const std::int64_t delta = w == v ? intersection(g, v, v) : g.multiplicity(v, w);
              nb[w] = cur[w] + sign * delta;
              inside = nb[w] >= -outer && nb[w] <= outer;
            }
            if (!inside) continue;
            const std::size_t t = encode(nb);
            if (label[t] == kUnseen) {
              label[t] = id;
              queue.push_back(t);
            }
          }
        }
      }
    }
    out.push_back(label[s]);
  });
  return out;
}

BruteRank::BruteRank(const Graph& g) : graph_(g), lattice_(g) {
  if (!g.is_weightless() || !g.is_loopless()) {
    throw Error(ErrorCode::RequiresWeightlessLoopless, "brute rank works on the weightless loopless model");
  }
}

std::string BruteRank::key(const Divisor& d) const {
  std::string out;
  for (const auto& x : lattice_.class_key(d)) out += x.str() + ";";
  return out;
}

const std::set<std::string>& BruteRank::effective_keys(std::int64_t deg) {
  auto it = keys_.find(deg);
  if (it != keys_.end()) return it->second;
  std::set<std::string> keys;
  for_each_effective(graph_.vertex_count(), deg,
                     [&](const std::vector<std::int64_t>& e) { keys.insert(key(Divisor(graph_, e))); });
  return keys_.emplace(deg, std::move(keys)).first->second;
}

bool BruteRank::class_effective(const Divisor& d) {
  const std::int64_t deg = degree(d);
  if (deg < 0) return false;
  return effective_keys(deg).count(key(d)) > 0;
}

std::int64_t BruteRank::rank(const Divisor& d) {
  if (!class_effective(d)) return -1;
  for (std::int64_t k = 1;; ++k) {
    bool all = true;
    for_each_effective(graph_.vertex_count(), k, [&](const std::vector<std::int64_t>& e) {
      if (all && !class_effective(d - Divisor(graph_, e))) all = false;
    });
    if (!all) return k - 1;
  }
}

}  // namespace graphdiv::oracle
