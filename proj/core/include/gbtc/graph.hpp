#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gbtc/equivalence.hpp"

namespace gbtc {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// An edge with its parametrization: it runs from `tail` to `head`.
struct Edge {
  VertexIndex tail = 0;
  VertexIndex head = 0;

  bool is_loop() const { return tail == head; }
  VertexIndex other(VertexIndex v) const { return v == tail ? head : tail; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph with named vertices and an optional set of sinks.
///
/// Vertices are addressed by dense indices; names are the opaque ids of the
/// file format and survive subdivision. Edge order is insertion order and
/// fixes the ordering of edges at each vertex.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on a duplicate name.
  VertexIndex add_vertex(std::string name);
  /// Throws InputError on an unknown endpoint.
  EdgeIndex add_edge(VertexIndex tail, VertexIndex head);
  EdgeIndex add_edge(std::string_view tail, std::string_view head);
  void mark_sink(VertexIndex v);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexIndex v) const;
  std::optional<VertexIndex> find(std::string_view name) const;
  /// Throws InputError when `name` is not a vertex.
  VertexIndex index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::set<VertexIndex>& sinks() const { return sinks_; }
  bool is_sink(VertexIndex v) const { return sinks_.count(v) != 0; }

  /// Edges at `v` in file order; a self-loop appears twice.
  const std::vector<EdgeIndex>& incident(VertexIndex v) const;

 private:
  void check_vertex(VertexIndex v) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexIndex> by_name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::set<VertexIndex> sinks_;
};

/// Counts (n0, n1, n2) of vertices of valence >= 4, separating trivalent
/// vertices and non-separating trivalent vertices.
struct VertexClassification {
  int n0 = 0;
  int n1 = 0;
  int n2 = 0;

  int m() const { return n0 + n1 + n2; }
  int trivalent_total() const { return n1 + n2; }
  friend bool operator==(const VertexClassification&,
                         const VertexClassification&) = default;
};

/// Number of half-edges at `v`; a self-loop contributes two.
std::size_t valence(const Graph& g, VertexIndex v);
bool is_essential(const Graph& g, VertexIndex v);

/// Component label per vertex, ignoring `removed` if given. The removed
/// vertex gets label SIZE_MAX. Returns the number of components.
std::size_t component_labels(const Graph& g, std::vector<std::size_t>& labels,
                             std::optional<VertexIndex> removed = std::nullopt);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
/// Rank of H_1: E - V + #components.
long first_betti_number(const Graph& g);

/// Subdivides away self-loops and multi-edges and makes every neighbour of an
/// essential vertex bivalent. Sinks, names and valences of original vertices
/// are preserved; new vertices get fresh names derived from their edge.
Graph normalize(const Graph& g);
bool is_normalized(const Graph& g);

/// Replaces edge `e` by a path of `pieces` edges in the same direction.
/// All other edges keep their relative order; the new path takes the place
/// of `e` in the edge sequence.
Graph subdivide_edge(const Graph& g, EdgeIndex e, std::size_t pieces);
/// Subdivides every edge at once; `pieces` has one entry per edge.
Graph subdivide_edges(const Graph& g, const std::vector<std::size_t>& pieces);

/// True iff deleting `v` disconnects the rest. Throws InapplicableError if
/// `g` itself is disconnected.
bool is_separating(const Graph& g, VertexIndex v);

/// Classification of the normalized graph. Throws InapplicableError on a
/// disconnected graph.
VertexClassification classify(const Graph& g);

/// The relation on edges at `v` (positions in `incident(v)`) identifying
/// edges whose far sides lie in the same component of the graph minus `v`.
/// Throws InapplicableError unless `v` is essential.
EquivRelation components_without(const Graph& g, VertexIndex v);

/// Edges at `v` in file order, except that at a separating vertex the
/// second edge is swapped forward so the first two lie in different
/// components of the complement. Values are positions in `incident(v)`.
std::vector<std::size_t> edge_ordering(const Graph& g, VertexIndex v);

}  // namespace gbtc
