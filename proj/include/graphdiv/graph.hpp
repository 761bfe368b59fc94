#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphdiv/numeric.hpp"

namespace graphdiv {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;
using VertexSet = std::vector<VertexIndex>;

struct Vertex {
  std::string id;
  std::int64_t weight = 0;
};

struct Edge {
  VertexIndex a = 0;
  VertexIndex b = 0;
  bool is_loop() const { return a == b; }
};

/// Finite connected vertex-weighted multigraph; loops allowed.
///
/// A Graph is an immutable handle onto shared state, so copies are cheap and
/// two handles compare as the "same graph" only when they share that state.
/// Divisors remember the handle they were built on.
class Graph {
 public:
  /// Builds from vertex ids and endpoint-id pairs. Throws EmptyGraph,
  /// NegativeWeight, DuplicateVertexId, UnknownVertexId or DisconnectedGraph.
  static Graph build(std::vector<Vertex> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);
  static Graph build(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  std::span<const Vertex> vertices() const;
  std::span<const Edge> edges() const;
  const Vertex& vertex(VertexIndex v) const;
  const Edge& edge(EdgeIndex e) const;

  VertexIndex index_of(std::string_view id) const;
  std::optional<VertexIndex> find(std::string_view id) const;

  /// Number of edges joining v and w (v != w); 0 on the diagonal.
  std::int64_t multiplicity(VertexIndex v, VertexIndex w) const;
  std::int64_t loops_at(VertexIndex v) const;
  std::int64_t total_weight() const;

  bool is_weightless() const;
  bool is_loopless() const;

  bool same_as(const Graph& other) const { return data_ == other.data_; }

  void check_vertex(VertexIndex v) const;
  void check_edge(EdgeIndex e) const;

 private:
  struct Data;
  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// b1(G) + total weight.
std::int64_t genus(const Graph& g);

/// Intersection product (v.w): edge count for v != w, minus the sum of the
/// row otherwise. Loops never contribute.
std::int64_t intersection(const Graph& g, VertexIndex v, VertexIndex w);

/// Bilinear extension over two vertex sets.
std::int64_t intersection(const Graph& g, std::span<const VertexIndex> z,
                          std::span<const VertexIndex> w);

/// Complement of z in V(g), in vertex order.
VertexSet complement(const Graph& g, std::span<const VertexIndex> z);

/// Non-loop edges at v plus two per loop.
std::int64_t valency(const Graph& g, VertexIndex v);

/// The intersection matrix; the negated graph Laplacian.
IntMatrix intersection_matrix(const Graph& g);

struct BulletModel {
  Graph source;
  Graph bullet;
  std::vector<VertexIndex> embedding;
};

/// Weightless loopless model: add weight(v) loops at every v, then subdivide
/// every loop. New vertices follow the originals, ordered by base vertex and
/// then by loop (original loops in edge order, then the weight loops).
BulletModel bullet_model(const Graph& g);

struct ContractionMap {
  Graph source;
  Graph target;
  std::vector<VertexIndex> vertex_map;
  std::vector<EdgeIndex> contracted_edges;
  /// Source edge -> target edge, empty for contracted edges.
  std::vector<std::optional<EdgeIndex>> edge_map;
};

/// Contracts every edge of `edges`. Fibers are the connected components of
/// (V(G), S); a fiber's weight is its total weight plus b1 of (fiber, S-edges).
/// Throws LoopInContractionSet or UnknownEdge.
ContractionMap contract(const Graph& g, std::span<const EdgeIndex> edges);

bool is_bridge(const Graph& g, EdgeIndex e);

/// Number of spanning trees (matrix-tree theorem).
BigInt complexity(const Graph& g);

}  // namespace graphdiv
