#include "graphdiv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "graphdiv/error.hpp"

namespace graphdiv {

struct Graph::Data {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::unordered_map<std::string, VertexIndex> index;
  std::vector<std::int64_t> adjacency;  // n*n, non-loop multiplicities
  std::vector<std::int64_t> loops;
};

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::string unique_id(std::string candidate, const std::unordered_set<std::string>& taken) {
  while (taken.count(candidate)) candidate += "'";
  return candidate;
}

}  // namespace

Graph Graph::build(std::vector<Vertex> vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].id, i);
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::UnknownVertexId, "edge endpoint '" + a + "'");
    if (ib == index.end()) throw Error(ErrorCode::UnknownVertexId, "edge endpoint '" + b + "'");
    resolved.push_back({ia->second, ib->second});
  }
  return build(std::move(vertices), std::move(resolved));
}

Graph Graph::build(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyGraph, "a graph needs at least one vertex");
  auto data = std::make_shared<Data>();
  const std::size_t n = vertices.size();
  for (VertexIndex i = 0; i < n; ++i) {
    if (vertices[i].weight < 0) {
      throw Error(ErrorCode::NegativeWeight, "vertex '" + vertices[i].id + "'");
    }
    if (!data->index.emplace(vertices[i].id, i).second) {
      throw Error(ErrorCode::DuplicateVertexId, "vertex '" + vertices[i].id + "'");
    }
  }
  data->adjacency.assign(n * n, 0);
  data->loops.assign(n, 0);
  DisjointSets components(n);
  std::size_t merged = 0;
  for (const Edge& e : edges) {
    if (e.a >= n || e.b >= n) throw Error(ErrorCode::UnknownVertexId, "edge endpoint index out of range");
    if (e.is_loop()) {
      ++data->loops[e.a];
    } else {
      ++data->adjacency[e.a * n + e.b];
      ++data->adjacency[e.b * n + e.a];
      if (components.unite(e.a, e.b)) ++merged;
    }
  }
  if (merged + 1 != n) throw Error(ErrorCode::DisconnectedGraph, std::to_string(n - merged) + " components");
  data->vertices = std::move(vertices);
  data->edges = std::move(edges);
  return Graph(std::move(data));
}

std::size_t Graph::vertex_count() const { return data_->vertices.size(); }
std::size_t Graph::edge_count() const { return data_->edges.size(); }
std::span<const Vertex> Graph::vertices() const { return data_->vertices; }
std::span<const Edge> Graph::edges() const { return data_->edges; }

const Vertex& Graph::vertex(VertexIndex v) const {
  check_vertex(v);
  return data_->vertices[v];
}

const Edge& Graph::edge(EdgeIndex e) const {
  check_edge(e);
  return data_->edges[e];
}

VertexIndex Graph::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::UnknownVertexId, "vertex '" + std::string(id) + "'");
}

std::optional<VertexIndex> Graph::find(std::string_view id) const {
  auto it = data_->index.find(std::string(id));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::int64_t Graph::multiplicity(VertexIndex v, VertexIndex w) const {
  check_vertex(v);
  check_vertex(w);
  return data_->adjacency[v * vertex_count() + w];
}

std::int64_t Graph::loops_at(VertexIndex v) const {
  check_vertex(v);
  return data_->loops[v];
}

std::int64_t Graph::total_weight() const {
  std::int64_t total = 0;
  for (const auto& v : data_->vertices) total += v.weight;
  return total;
}

bool Graph::is_weightless() const {
  return std::all_of(data_->vertices.begin(), data_->vertices.end(),
                     [](const Vertex& v) { return v.weight == 0; });
}

bool Graph::is_loopless() const {
  return std::all_of(data_->loops.begin(), data_->loops.end(), [](std::int64_t c) { return c == 0; });
}

void Graph::check_vertex(VertexIndex v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::UnknownVertexId, "vertex index " + std::to_string(v));
}

void Graph::check_edge(EdgeIndex e) const {
  if (e >= edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(e));
}

std::int64_t genus(const Graph& g) {
  return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) + 1 +
         g.total_weight();
}

std::int64_t intersection(const Graph& g, VertexIndex v, VertexIndex w) {
  if (v != w) return g.multiplicity(v, w);
  std::int64_t self = 0;
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) self -= g.multiplicity(v, u);
  return self;
}

std::int64_t intersection(const Graph& g, std::span<const VertexIndex> z, std::span<const VertexIndex> w) {
  std::int64_t total = 0;
  for (VertexIndex a : z)
    for (VertexIndex b : w) total += intersection(g, a, b);
  return total;
}

VertexSet complement(const Graph& g, std::span<const VertexIndex> z) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexIndex v : z) {
    g.check_vertex(v);
    in[v] = true;
  }
  VertexSet out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

std::int64_t valency(const Graph& g, VertexIndex v) {
  return -intersection(g, v, v) + 2 * g.loops_at(v);
}

IntMatrix intersection_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix m(n, std::vector<std::int64_t>(n));
  for (VertexIndex i = 0; i < n; ++i)
    for (VertexIndex j = 0; j < n; ++j) m[i][j] = intersection(g, i, j);
  return m;
}

BulletModel bullet_model(const Graph& g) {
  std::vector<VertexIndex> embedding(g.vertex_count());
  std::iota(embedding.begin(), embedding.end(), 0);
  if (g.is_weightless() && g.is_loopless()) return {g, g, std::move(embedding)};

  std::unordered_set<std::string> taken;
  std::vector<Vertex> vertices;
  for (const Vertex& v : g.vertices()) {
    vertices.push_back({v.id, 0});
    taken.insert(v.id);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!e.is_loop()) edges.push_back(e);

  auto add_midpoint = [&](VertexIndex base, const std::string& tag) {
    std::string id = unique_id(g.vertex(base).id + "." + tag, taken);
    taken.insert(id);
    const VertexIndex mid = vertices.size();
    vertices.push_back({std::move(id), 0});
    edges.push_back({base, mid});
    edges.push_back({base, mid});
  };
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (std::int64_t k = 0; k < g.loops_at(v); ++k) add_midpoint(v, "loop" + std::to_string(k + 1));
    for (std::int64_t k = 0; k < g.vertex(v).weight; ++k) add_midpoint(v, "w" + std::to_string(k + 1));
  }
  return {g, Graph::build(std::move(vertices), std::move(edges)), std::move(embedding)};
}

ContractionMap contract(const Graph& g, std::span<const EdgeIndex> edges) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_s(g.edge_count(), false);
  DisjointSets fibers(n);
  for (EdgeIndex e : edges) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) throw Error(ErrorCode::LoopInContractionSet, "edge index " + std::to_string(e));
    in_s[e] = true;
    fibers.unite(edge.a, edge.b);
  }

  std::vector<VertexIndex> vertex_map(n);
  std::vector<std::size_t> root_to_target(n, n);
  std::vector<std::vector<VertexIndex>> members;
  for (VertexIndex v = 0; v < n; ++v) {
    const std::size_t r = fibers.find(v);
    if (root_to_target[r] == n) {
      root_to_target[r] = members.size();
      members.emplace_back();
    }
    vertex_map[v] = root_to_target[r];
    members[vertex_map[v]].push_back(v);
  }

  std::vector<std::int64_t> fiber_edges(members.size(), 0);
  std::vector<EdgeIndex> contracted;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!in_s[e]) continue;
    contracted.push_back(e);
    ++fiber_edges[vertex_map[g.edge(e).a]];
  }

  std::unordered_set<std::string> taken;
  std::vector<Vertex> target_vertices;
  for (std::size_t f = 0; f < members.size(); ++f) {
    std::string id;
    std::int64_t weight = 0;
    for (VertexIndex v : members[f]) {
      if (!id.empty()) id += "+";
      id += g.vertex(v).id;
      weight += g.vertex(v).weight;
    }
    // b1 of the connected fiber subgraph spanned by its S-edges.
    weight += fiber_edges[f] - static_cast<std::int64_t>(members[f].size()) + 1;
    id = unique_id(std::move(id), taken);
    taken.insert(id);
    target_vertices.push_back({std::move(id), weight});
  }

  std::vector<Edge> target_edges;
  std::vector<std::optional<EdgeIndex>> edge_map(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (in_s[e]) continue;
    edge_map[e] = target_edges.size();
    target_edges.push_back({vertex_map[g.edge(e).a], vertex_map[g.edge(e).b]});
  }
  if (contracted.empty()) return {g, g, std::move(vertex_map), {}, std::move(edge_map)};
  return {g, Graph::build(std::move(target_vertices), std::move(target_edges)), std::move(vertex_map),
          std::move(contracted), std::move(edge_map)};
}

bool is_bridge(const Graph& g, EdgeIndex e) {
  const Edge& removed = g.edge(e);
  if (removed.is_loop()) return false;
  DisjointSets components(g.vertex_count());
  for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    components.unite(g.edge(f).a, g.edge(f).b);
  }
  return components.find(removed.a) != components.find(removed.b);
}

BigInt complexity(const Graph& g) {
  // Any principal minor of the Laplacian; drop the first vertex.
  const IntMatrix m = intersection_matrix(g);
  const std::size_t n = m.size();
  IntMatrix reduced(n - 1, std::vector<std::int64_t>(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) reduced[i - 1][j - 1] = -m[i][j];
  return determinant(reduced);
}

}  // namespace graphdiv
