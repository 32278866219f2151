#include "gbtc/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "gbtc/errors.hpp"

namespace gbtc {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string fresh_name(const Graph& g, const std::string& tail,
                       const std::string& head, std::size_t piece) {
  std::string name = tail + "~" + head + "." + std::to_string(piece);
  while (g.contains(name)) name += "'";
  return name;
}

Graph copy_vertices(const Graph& g) {
  Graph out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.name(v));
  for (VertexIndex s : g.sinks()) out.mark_sink(s);
  return out;
}

// Appends a path of `pieces` edges from tail to head, creating fresh interior
// vertices. `out` already holds every source vertex, so names stay unique.
void append_path(Graph& out, const Graph& source, VertexIndex tail,
                 VertexIndex head, std::size_t pieces) {
  VertexIndex prev = tail;
  for (std::size_t piece = 1; piece < pieces; ++piece) {
    VertexIndex mid =
        out.add_vertex(fresh_name(out, source.name(tail), source.name(head), piece));
    out.add_edge(prev, mid);
    prev = mid;
  }
  out.add_edge(prev, head);
}
}  // namespace

VertexIndex Graph::add_vertex(std::string name) {
  if (by_name_.count(name)) throw InputError("duplicate vertex id '" + name + "'");
  VertexIndex v = names_.size();
  by_name_.emplace(name, v);
  names_.push_back(std::move(name));
  incident_.emplace_back();
  return v;
}

EdgeIndex Graph::add_edge(VertexIndex tail, VertexIndex head) {
  check_vertex(tail);
  check_vertex(head);
  EdgeIndex e = edges_.size();
  edges_.push_back({tail, head});
  incident_[tail].push_back(e);
  incident_[head].push_back(e);
  return e;
}

EdgeIndex Graph::add_edge(std::string_view tail, std::string_view head) {
  return add_edge(index(tail), index(head));
}

void Graph::mark_sink(VertexIndex v) {
  check_vertex(v);
  sinks_.insert(v);
}

const std::string& Graph::name(VertexIndex v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<VertexIndex> Graph::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Graph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex id '" + std::string(name) + "'");
}

const std::vector<EdgeIndex>& Graph::incident(VertexIndex v) const {
  check_vertex(v);
  return incident_[v];
}

void Graph::check_vertex(VertexIndex v) const {
  if (v >= names_.size())
    throw InputError("vertex index " + std::to_string(v) + " out of range");
}

std::size_t valence(const Graph& g, VertexIndex v) { return g.incident(v).size(); }

bool is_essential(const Graph& g, VertexIndex v) { return valence(g, v) >= 3; }

std::size_t component_labels(const Graph& g, std::vector<std::size_t>& labels,
                             std::optional<VertexIndex> removed) {
  labels.assign(g.vertex_count(), kNone);
  std::size_t count = 0;
  std::vector<VertexIndex> stack;
  for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
    if (labels[start] != kNone || start == removed) continue;
    labels[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexIndex u = stack.back();
      stack.pop_back();
      for (EdgeIndex e : g.incident(u)) {
        VertexIndex w = g.edge(e).other(u);
        if (w == removed || labels[w] != kNone) continue;
        labels[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

std::size_t component_count(const Graph& g) {
  std::vector<std::size_t> labels;
  return component_labels(g, labels);
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

long first_betti_number(const Graph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) +
         static_cast<long>(component_count(g));
}

Graph subdivide_edges(const Graph& g, const std::vector<std::size_t>& pieces) {
  if (pieces.size() != g.edge_count()) throw InputError("one piece count per edge required");
  Graph out = copy_vertices(g);
  for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
    if (pieces[f] == 0) throw InputError("subdivision needs at least one piece");
    append_path(out, g, g.edge(f).tail, g.edge(f).head, pieces[f]);
  }
  return out;
}

Graph subdivide_edge(const Graph& g, EdgeIndex e, std::size_t pieces) {
  if (e >= g.edge_count()) throw InputError("edge index out of range");
  if (pieces == 0) throw InputError("subdivision needs at least one piece");
  Graph out = copy_vertices(g);
  for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
    const Edge& edge = g.edge(f);
    if (f == e)
      append_path(out, g, edge.tail, edge.head, pieces);
    else
      out.add_edge(edge.tail, edge.head);
  }
  return out;
}

namespace {
// Number of pieces each edge is cut into by normalize().
std::vector<std::size_t> normalization_pieces(const Graph& g) {
  std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> multiplicity;
  for (const Edge& e : g.edges())
    ++multiplicity[std::minmax(e.tail, e.head)];

  std::vector<std::size_t> pieces(g.edge_count(), 1);
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.is_loop()) {
      pieces[i] = 3;
      continue;
    }
    if (multiplicity[std::minmax(e.tail, e.head)] > 1) {
      pieces[i] = 2;
      continue;
    }
    bool tail_ess = is_essential(g, e.tail);
    bool head_ess = is_essential(g, e.head);
    if ((tail_ess && valence(g, e.head) != 2) ||
        (head_ess && valence(g, e.tail) != 2))
      pieces[i] = 2;
  }
  return pieces;
}
}  // namespace

Graph normalize(const Graph& g) {
  auto pieces = normalization_pieces(g);
  Graph out = copy_vertices(g);
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    append_path(out, g, e.tail, e.head, pieces[i]);
  }
  return out;
}

bool is_normalized(const Graph& g) {
  auto pieces = normalization_pieces(g);
  return std::all_of(pieces.begin(), pieces.end(),
                     [](std::size_t p) { return p == 1; });
}

bool is_separating(const Graph& g, VertexIndex v) {
  g.name(v);
  if (!is_connected(g))
    throw InapplicableError("separation is only defined here for connected graphs");
  std::vector<std::size_t> labels;
  return component_labels(g, labels, v) > 1;
}

VertexClassification classify(const Graph& g) {
  if (!is_connected(g))
    throw InapplicableError("connected graph with m(Γ) ≥ 2 required: graph is disconnected");
  Graph n = normalize(g);
  VertexClassification c;
  for (VertexIndex v = 0; v < n.vertex_count(); ++v) {
    std::size_t d = valence(n, v);
    if (d >= 4)
      ++c.n0;
    else if (d == 3)
      ++(is_separating(n, v) ? c.n1 : c.n2);
  }
  return c;
}

EquivRelation components_without(const Graph& g, VertexIndex v) {
  if (!is_essential(g, v))
    throw InapplicableError("vertex '" + g.name(v) + "' is not essential");
  std::vector<std::size_t> labels;
  component_labels(g, labels, v);
  const auto& inc = g.incident(v);
  std::vector<std::size_t> block(inc.size());
  for (std::size_t i = 0; i < inc.size(); ++i) {
    const Edge& e = g.edge(inc[i]);
    if (e.is_loop())
      throw InapplicableError("components_without requires a graph without self-loops");
    block[i] = labels[e.other(v)];
  }
  return EquivRelation::from_labels(block);
}

std::vector<std::size_t> edge_ordering(const Graph& g, VertexIndex v) {
  std::vector<std::size_t> order(g.incident(v).size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (order.size() < 2 || !is_essential(g, v)) return order;
  EquivRelation pi = components_without(g, v);
  if (pi.block_count() < 2 || pi.block_of(0) != pi.block_of(1)) return order;
  for (std::size_t i = 2; i < order.size(); ++i) {
    if (pi.block_of(i) != pi.block_of(0)) {
      std::rotate(order.begin() + 1, order.begin() + i, order.begin() + i + 1);
      break;
    }
  }
  return order;
}

}  // namespace gbtc
