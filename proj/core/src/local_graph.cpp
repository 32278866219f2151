#include "gbtc/local_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "gbtc/automaton.hpp"
#include "gbtc/errors.hpp"

namespace gbtc {

namespace {

void compositions_into(int remaining, std::size_t parts, Composition& prefix,
                       std::vector<Composition>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = remaining; first >= 0; --first) {
    prefix.push_back(first);
    compositions_into(remaining - first, parts, prefix, out);
    prefix.pop_back();
  }
}

EdgePath reversed(const EdgePath& path) {
  EdgePath out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back({it->edge, !it->forward});
  return out;
}

}  // namespace

std::vector<Composition> compositions(int total, std::size_t parts) {
  std::vector<Composition> out;
  if (total < 0) return out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  Composition prefix;
  compositions_into(total, parts, prefix, out);
  return out;
}

std::optional<std::size_t> LambdaGraph::find(const Composition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LambdaGraph::index(const Composition& p) const {
  if (auto v = find(p)) return *v;
  throw InputError("composition is not a vertex of the local model");
}

bool LambdaGraph::is_upper(std::size_t v) const {
  const auto& p = vertices_.at(v);
  return std::accumulate(p.begin(), p.end(), 0) == k_;
}

std::size_t LambdaGraph::edge_at(std::size_t lower, std::size_t label) const {
  if (is_upper(lower)) throw InputError("edge_at expects a lower vertex");
  if (label >= pi_.ground_size()) throw InputError("edge label out of range");
  return first_edge_of_lower_.at(lower) + label;
}

LambdaGraph build_lambda(const EquivRelation& pi, int k) {
  if (k <= 0) throw InputError("the local model needs k >= 1 particles");
  if (pi.ground_size() == 0) throw InputError("the local model needs a nonempty ground set");
  LambdaGraph out;
  out.k_ = k;
  out.pi_ = pi;
  const std::size_t b = pi.block_count();
  out.vertices_ = compositions(k, b);
  const std::size_t upper_count = out.vertices_.size();
  for (auto& p : compositions(k - 1, b)) out.vertices_.push_back(std::move(p));

  for (std::size_t v = 0; v < out.vertices_.size(); ++v) out.index_[out.vertices_[v]] = v;

  out.first_edge_of_lower_.assign(out.vertices_.size(), 0);
  out.incident_.assign(out.vertices_.size(), {});
  for (std::size_t lower = upper_count; lower < out.vertices_.size(); ++lower) {
    out.first_edge_of_lower_[lower] = out.edges_.size();
    for (std::size_t j = 0; j < pi.ground_size(); ++j) {
      Composition up = out.vertices_[lower];
      ++up[pi.block_of(j)];
      std::size_t e = out.edges_.size();
      out.edges_.push_back({out.index_.at(up), lower, j});
      out.incident_[lower].push_back(e);
      out.incident_[out.index_.at(up)].push_back(e);
    }
  }
  for (auto& inc : out.incident_)
    std::stable_sort(inc.begin(), inc.end(), [&](std::size_t a, std::size_t b2) {
      return out.edges_[a].label < out.edges_[b2].label;
    });
  return out;
}

EquivRelation local_quotient(const Graph& g, VertexIndex v) {
  if (!is_connected(g)) throw InapplicableError("local quotient needs a connected graph");
  EquivRelation pi = components_without(g, v);
  auto order = edge_ordering(g, v);
  std::vector<std::size_t> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = i;
  return pi.permuted(perm);
}

std::size_t pi1_rank(const LambdaGraph& lambda) {
  return lambda.edges().size() + 1 - lambda.vertices().size();
}

std::size_t path_end(const LambdaGraph& lambda, std::size_t start, const EdgePath& path) {
  std::size_t at = start;
  for (const PathStep& step : path) {
    const LambdaEdge& e = lambda.edges().at(step.edge);
    std::size_t from = step.forward ? e.upper : e.lower;
    if (from != at) throw InputError("edge path is not contiguous");
    at = step.forward ? e.lower : e.upper;
  }
  return at;
}

EdgePath particle_move(const LambdaGraph& lambda, std::size_t start, std::size_t from_label,
                       std::size_t to_label) {
  if (!lambda.is_upper(start))
    throw InputError("particle moves start with every particle at a sink");
  const EquivRelation& pi = lambda.relation();
  Composition p = lambda.vertices().at(start);
  std::size_t block = pi.block_of(from_label);
  pi.block_of(to_label);
  if (p[block] == 0) throw InputError("no particle at the sink to move");
  --p[block];
  std::size_t lower = lambda.index(p);
  return {{lambda.edge_at(lower, from_label), true}, {lambda.edge_at(lower, to_label), false}};
}

Word FreeBasis::read(const EdgePath& path) const {
  std::vector<Letter> letters;
  for (const PathStep& step : path) {
    int g = generator_of_edge_.at(step.edge);
    if (g != 0) letters.push_back(step.forward ? g : -g);
  }
  return Word::reduce(rank(), letters);
}

EdgePath FreeBasis::generator_loop(int i) const {
  std::size_t e = generator_edge(i);
  auto [upper, lower] = endpoints_.at(e);
  EdgePath loop = tree_paths_.at(upper);
  loop.push_back({e, true});
  for (const PathStep& step : reversed(tree_paths_.at(lower))) loop.push_back(step);
  return loop;
}

FreeBasis spanning_tree_basis(const LambdaGraph& lambda, std::size_t basepoint,
                              const std::vector<std::size_t>& preferred) {
  const auto& edges = lambda.edges();
  const std::size_t n = lambda.vertices().size();
  if (basepoint >= n) throw InputError("basepoint is not a vertex of the local model");

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };

  std::vector<bool> in_tree(edges.size(), false);
  for (std::size_t e : preferred)
    if (unite(edges.at(e).upper, edges.at(e).lower)) in_tree[e] = true;

  std::vector<bool> visited(n, false);
  std::deque<std::size_t> queue{basepoint};
  visited[basepoint] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : lambda.incident(u)) {
      std::size_t w = edges[e].upper == u ? edges[e].lower : edges[e].upper;
      if (unite(u, w)) in_tree[e] = true;
      if (!visited[w]) {
        visited[w] = true;
        queue.push_back(w);
      }
    }
  }

  FreeBasis basis;
  basis.basepoint_ = basepoint;
  basis.generator_of_edge_.assign(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    basis.endpoints_.push_back({edges[e].upper, edges[e].lower});
    if (!in_tree[e]) {
      basis.generator_edges_.push_back(e);
      basis.generator_of_edge_[e] = static_cast<int>(basis.generator_edges_.size());
    }
  }

  basis.tree_paths_.assign(n, {});
  std::fill(visited.begin(), visited.end(), false);
  visited[basepoint] = true;
  queue.push_back(basepoint);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : lambda.incident(u)) {
      if (!in_tree[e]) continue;
      bool forward = edges[e].upper == u;
      std::size_t w = forward ? edges[e].lower : edges[e].upper;
      if (visited[w]) continue;
      visited[w] = true;
      basis.tree_paths_[w] = basis.tree_paths_[u];
      basis.tree_paths_[w].push_back({e, forward});
      queue.push_back(w);
    }
  }
  return basis;
}

FreeBasis free_basis(const LambdaGraph& lambda, std::size_t basepoint) {
  return spanning_tree_basis(lambda, basepoint, {});
}

SinkStabilization sink_stabilization(const LambdaGraph& source, std::size_t sink_block,
                                     std::size_t basepoint) {
  if (sink_block >= source.relation().block_count())
    throw InputError("sink stabilization: unknown block " + std::to_string(sink_block));
  SinkStabilization out{source, build_lambda(source.relation(), source.particles() + 1),
                        sink_block, {}, {}, {}, {}, {}};
  for (const Composition& p : source.vertices()) {
    Composition q = p;
    ++q[sink_block];
    out.vertex_map.push_back(out.target.index(q));
  }
  for (const LambdaEdge& e : source.edges())
    out.edge_map.push_back(out.target.edge_at(out.vertex_map[e.lower], e.label));

  out.source_basis = free_basis(source, basepoint);
  out.target_basis = free_basis(out.target, out.vertex_map.at(basepoint));
  std::vector<Word> images;
  for (int i = 1; i <= out.source_basis.rank(); ++i) {
    EdgePath loop = out.source_basis.generator_loop(i);
    for (PathStep& step : loop) step.edge = out.edge_map[step.edge];
    images.push_back(out.target_basis.read(loop));
  }
  out.induced = FreeHom(out.source_basis.rank(), out.target_basis.rank(), std::move(images));
  return out;
}

std::optional<FreeHom> split_retraction(const SinkStabilization& s) {
  std::set<std::size_t> vertices(s.vertex_map.begin(), s.vertex_map.end());
  std::set<std::size_t> edges(s.edge_map.begin(), s.edge_map.end());
  if (vertices.size() != s.vertex_map.size() || edges.size() != s.edge_map.size())
    return std::nullopt;

  std::vector<std::size_t> image_tree;
  for (std::size_t e = 0; e < s.edge_map.size(); ++e)
    if (s.source_basis.is_tree_edge(e)) image_tree.push_back(s.edge_map[e]);
  FreeBasis extended =
      spanning_tree_basis(s.target, s.target_basis.basepoint(), image_tree);

  const int source_rank = s.source_basis.rank();
  std::vector<int> preimage(s.target.edges().size(), 0);
  for (std::size_t e = 0; e < s.edge_map.size(); ++e) {
    if (s.source_basis.is_tree_edge(e)) {
      if (!extended.is_tree_edge(s.edge_map[e])) return std::nullopt;
    } else {
      for (int i = 1; i <= source_rank; ++i)
        if (s.source_basis.generator_edge(i) == e) preimage[s.edge_map[e]] = i;
    }
  }
  std::vector<Word> collapse;
  for (int j = 1; j <= extended.rank(); ++j) {
    int i = preimage[extended.generator_edge(j)];
    collapse.push_back(i ? Word::generator(source_rank, i) : Word(source_rank));
  }
  FreeHom retract_extended(extended.rank(), source_rank, std::move(collapse));

  std::vector<Word> images;
  for (int j = 1; j <= s.target_basis.rank(); ++j)
    images.push_back(retract_extended.apply(extended.read(s.target_basis.generator_loop(j))));
  FreeHom retraction(s.target_basis.rank(), source_rank, std::move(images));
  if (!(retraction.after(s.induced) == FreeHom::identity(source_rank))) return std::nullopt;
  return retraction;
}

bool is_isomorphism(const FreeHom& f) {
  if (f.domain_rank() != f.codomain_rank()) return false;
  auto image = stallings_core(f.codomain_rank(), f.images());
  auto whole = stallings_core(f.codomain_rank(), FreeHom::identity(f.codomain_rank()).images());
  return image == whole && subgroup_rank(image) == static_cast<std::size_t>(f.domain_rank());
}

nlohmann::json lambda_to_json(const LambdaGraph& lambda) {
  using nlohmann::json;
  json blocks = json::array();
  for (const auto& block : lambda.relation().blocks()) {
    json b = json::array();
    for (std::size_t x : block) b.push_back(x + 1);
    blocks.push_back(b);
  }
  json vertices = json::array();
  for (std::size_t v = 0; v < lambda.vertices().size(); ++v)
    vertices.push_back({{"id", v},
                        {"composition", lambda.vertices()[v]},
                        {"central_particle", !lambda.is_upper(v)}});
  json edges = json::array();
  for (const LambdaEdge& e : lambda.edges())
    edges.push_back({{"upper", e.upper}, {"lower", e.lower}, {"label", e.label + 1}});
  return {{"k", lambda.particles()},
          {"relation", blocks},
          {"vertices", vertices},
          {"edges", edges},
          {"pi1_rank", pi1_rank(lambda)}};
}

std::string lambda_to_dot(const LambdaGraph& lambda) {
  std::ostringstream out;
  out << "graph lambda_k" << lambda.particles() << " {\n";
  for (std::size_t v = 0; v < lambda.vertices().size(); ++v) {
    out << "  v" << v << " [label=\"(";
    const auto& p = lambda.vertices()[v];
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << ")" << (lambda.is_upper(v) ? "" : "+c") << "\"";
    if (!lambda.is_upper(v)) out << ", shape=box";
    out << "];\n";
  }
  for (const LambdaEdge& e : lambda.edges())
    out << "  v" << e.upper << " -- v" << e.lower << " [label=\"" << e.label + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace gbtc
