#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gbtc/equivalence.hpp"
#include "gbtc/free_group.hpp"
#include "gbtc/graph.hpp"

namespace gbtc {

/// Number of particles per block, blocks in canonical order.
using Composition = std::vector<int>;

/// Edge of the local model joining a configuration with every particle at a
/// sink (`upper`, a composition of k) to one with a particle at the central
/// vertex (`lower`, a composition of k-1). `label` is the element of the
/// ground set whose edge the moving particle uses.
struct LambdaEdge {
  std::size_t upper = 0;
  std::size_t lower = 0;
  std::size_t label = 0;
};

/// Graph model of the k-particle configuration space of the local graph on
/// an equivalence relation: vertices are compositions of k and of k-1 over
/// the blocks, edges move the central particle into or out of a sink.
///
/// Vertices are listed as all compositions of k followed by all compositions
/// of k-1, each in descending lexicographic order. Edges are listed by lower
/// vertex, then by label.
class LambdaGraph {
 public:
  int particles() const { return k_; }
  const EquivRelation& relation() const { return pi_; }
  const std::vector<Composition>& vertices() const { return vertices_; }
  const std::vector<LambdaEdge>& edges() const { return edges_; }

  std::optional<std::size_t> find(const Composition& p) const;
  /// Throws InputError when `p` is not a vertex.
  std::size_t index(const Composition& p) const;
  bool is_upper(std::size_t v) const;
  /// Edge with the given lower endpoint and label.
  std::size_t edge_at(std::size_t lower, std::size_t label) const;
  /// Edges at `v` sorted by (label, edge index).
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }

 private:
  friend LambdaGraph build_lambda(const EquivRelation& pi, int k);

  int k_ = 0;
  EquivRelation pi_;
  std::vector<Composition> vertices_;
  std::vector<LambdaEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::size_t> first_edge_of_lower_;
  std::map<Composition, std::size_t> index_;
};

/// Throws InputError for k <= 0 or an empty ground set.
LambdaGraph build_lambda(const EquivRelation& pi, int k);

/// The relation on edges at an essential vertex of a normalized connected
/// graph, with edges numbered in `edge_ordering` order.
EquivRelation local_quotient(const Graph& g, VertexIndex v);

/// edges - vertices + 1; the model is always connected.
std::size_t pi1_rank(const LambdaGraph& lambda);

/// All compositions of `total` into `parts` nonnegative parts, descending
/// lexicographic order.
std::vector<Composition> compositions(int total, std::size_t parts);

/// One traversal of an edge; forward runs upper -> lower.
struct PathStep {
  std::size_t edge = 0;
  bool forward = true;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};
using EdgePath = std::vector<PathStep>;

/// Vertex reached by following `path` from `start`. Throws InputError if a
/// step does not start where the previous one ended.
std::size_t path_end(const LambdaGraph& lambda, std::size_t start, const EdgePath& path);

/// Path moving one particle out of the sink of `from_label`'s block, across
/// the central vertex, into the sink of `to_label`'s block (labels are
/// ground-set elements). `start` must be a composition of k.
EdgePath particle_move(const LambdaGraph& lambda, std::size_t start, std::size_t from_label,
                       std::size_t to_label);

/// Spanning tree plus one free generator per non-tree edge.
class FreeBasis {
 public:
  std::size_t basepoint() const { return basepoint_; }
  int rank() const { return static_cast<int>(generator_edges_.size()); }
  /// Edge of the i-th generator, i >= 1.
  std::size_t generator_edge(int i) const { return generator_edges_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<std::size_t>& generator_edges() const { return generator_edges_; }
  bool is_tree_edge(std::size_t e) const { return generator_of_edge_.at(e) == 0; }

  /// The word of non-tree edges crossed by `path`. For a closed path this is
  /// its class in the fundamental group at the basepoint, conjugated along
  /// tree paths.
  Word read(const EdgePath& path) const;
  /// Tree path from the basepoint to `v`.
  const EdgePath& tree_path(std::size_t v) const { return tree_paths_.at(v); }
  /// Closed path at the basepoint representing generator i >= 1.
  EdgePath generator_loop(int i) const;

 private:
  friend FreeBasis spanning_tree_basis(const LambdaGraph&, std::size_t,
                                       const std::vector<std::size_t>&);

  std::size_t basepoint_ = 0;
  std::vector<std::size_t> generator_edges_;
  std::vector<int> generator_of_edge_;  // 0 for tree edges
  std::vector<EdgePath> tree_paths_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
};

/// Breadth-first spanning tree from `basepoint`, visiting edges at each
/// vertex by label.
FreeBasis free_basis(const LambdaGraph& lambda, std::size_t basepoint);

/// Spanning tree containing the edges of `preferred` that do not close a
/// cycle among themselves (taken first, in order), completed breadth-first.
FreeBasis spanning_tree_basis(const LambdaGraph& lambda, std::size_t basepoint,
                              const std::vector<std::size_t>& preferred);

/// Sink stabilization v_p -> v_{p + e_s} from the k-particle model to the
/// (k+1)-particle model, with the induced map on fundamental groups.
struct SinkStabilization {
  LambdaGraph source;
  LambdaGraph target;
  std::size_t sink_block = 0;
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
  FreeBasis source_basis;
  FreeBasis target_basis;  // based at the image of the source basepoint
  FreeHom induced;
};

/// Throws InputError on an unknown block.
SinkStabilization sink_stabilization(const LambdaGraph& source, std::size_t sink_block,
                                     std::size_t basepoint = 0);

/// A homomorphism r with r o induced = id, built from a spanning tree of the
/// target extending the image of the source tree; nullopt if the graph map
/// is not an embedding or the constructed map fails to be a retraction.
std::optional<FreeHom> split_retraction(const SinkStabilization& stabilization);

/// True iff the induced map is surjective and injective.
bool is_isomorphism(const FreeHom& f);

nlohmann::json lambda_to_json(const LambdaGraph& lambda);
std::string lambda_to_dot(const LambdaGraph& lambda);

}  // namespace gbtc
