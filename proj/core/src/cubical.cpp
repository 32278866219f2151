#include "gbtc/cubical.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "gbtc/errors.hpp"

namespace gbtc {

namespace {

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : c) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// Walks from `start` out along the edge at position `slot` of incident(start)
// until reaching a vertex that is not bivalent. Returns the edges walked.
std::vector<EdgeIndex> walk_chain(const Graph& g, VertexIndex start, EdgeIndex first,
                                  std::vector<bool>& used) {
  std::vector<EdgeIndex> chain;
  VertexIndex at = start;
  EdgeIndex e = first;
  while (true) {
    used[e] = true;
    chain.push_back(e);
    VertexIndex next = g.edge(e).other(at);
    if (valence(g, next) != 2 || next == start) break;
    const auto& inc = g.incident(next);
    EdgeIndex out = inc[0] == e ? inc[1] : inc[0];
    if (used[out]) break;
    at = next;
    e = out;
  }
  return chain;
}

}  // namespace

Graph sufficient_subdivision(const Graph& g, int k) {
  if (k <= 1) return g;
  const std::size_t need = static_cast<std::size_t>(k) + 1;
  std::vector<std::size_t> pieces(g.edge_count(), 1);
  std::vector<bool> used(g.edge_count(), false);
  auto lengthen = [&](const std::vector<EdgeIndex>& chain) {
    if (chain.size() < need) {
      EdgeIndex first = *std::min_element(chain.begin(), chain.end());
      pieces[first] += need - chain.size();
    }
  };
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (valence(g, v) == 2) continue;
    for (EdgeIndex e : g.incident(v))
      if (!used[e]) lengthen(walk_chain(g, v, e, used));
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (!used[e]) lengthen(walk_chain(g, g.edge(e).tail, e, used));
  return subdivide_edges(g, pieces);
}

Graph refine(const Graph& g) {
  return subdivide_edges(g, std::vector<std::size_t>(g.edge_count(), 2));
}

std::size_t CubicalComplex::cell_count() const {
  std::size_t n = 0;
  for (const auto& level : cells) n += level.size();
  return n;
}

CubicalComplex build_complex(const Graph& g, int k, std::size_t budget) {
  if (k < 0) throw InputError("particle count must be non-negative");
  const std::size_t V = g.vertex_count();
  const std::size_t items = V + g.edge_count();
  CubicalComplex c;
  c.vertex_count = V;
  c.particles = k;
  c.cells.assign(1, {});

  std::size_t total = 0;
  std::vector<int> blocked(V, 0);
  Cell current;
  auto closure = [&](std::uint32_t item, VertexIndex out[2]) -> int {
    if (item < V) {
      out[0] = item;
      return 1;
    }
    const Edge& e = g.edge(item - V);
    out[0] = e.tail;
    out[1] = e.head;
    return e.is_loop() ? 1 : 2;
  };
  // Depth-first in increasing item order, pruning on closure overlap.
  auto extend = [&](auto&& self, std::uint32_t from, int dim) -> void {
    if (current.size() == static_cast<std::size_t>(k)) {
      if (++total > budget)
        throw BudgetExceeded("configuration complex exceeds the cell budget of " +
                             std::to_string(budget) + " cells");
      if (c.cells.size() <= static_cast<std::size_t>(dim)) c.cells.resize(dim + 1);
      c.cells[dim].push_back(current);
      return;
    }
    for (std::uint32_t item = from; item < items; ++item) {
      VertexIndex ends[2];
      int n = closure(item, ends);
      bool free = true;
      for (int i = 0; i < n; ++i) free = free && blocked[ends[i]] == 0;
      if (!free) continue;
      for (int i = 0; i < n; ++i) ++blocked[ends[i]];
      current.push_back(item);
      self(self, item + 1, dim + (item >= V ? 1 : 0));
      current.pop_back();
      for (int i = 0; i < n; ++i) --blocked[ends[i]];
    }
  };
  extend(extend, 0, 0);

  std::vector<std::unordered_map<Cell, std::size_t, CellHash>> index(c.cells.size());
  for (std::size_t d = 0; d < c.cells.size(); ++d)
    for (std::size_t i = 0; i < c.cells[d].size(); ++i) index[d].emplace(c.cells[d][i], i);

  c.boundary.emplace_back(0, 0);
  for (std::size_t d = 1; d < c.cells.size(); ++d) {
    SparseIntMatrix m(c.cells[d].size(), c.cells[d - 1].size());
    for (std::size_t row = 0; row < c.cells[d].size(); ++row) {
      const Cell& cell = c.cells[d][row];
      long sign = 1;
      for (std::size_t pos = 0; pos < cell.size(); ++pos) {
        if (cell[pos] < V) continue;
        const Edge& e = g.edge(cell[pos] - V);
        for (auto [end, coefficient] : {std::pair{e.head, sign}, std::pair{e.tail, -sign}}) {
          Cell face = cell;
          face.erase(face.begin() + static_cast<long>(pos));
          face.insert(std::lower_bound(face.begin(), face.end(), static_cast<std::uint32_t>(end)),
                      static_cast<std::uint32_t>(end));
          m.add(row, index[d - 1].at(face), coefficient);
        }
        sign = -sign;
      }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

bool boundary_squares_to_zero(const CubicalComplex& c) {
  for (std::size_t d = 2; d < c.boundary.size(); ++d)
    if (!c.boundary[d].multiply(c.boundary[d - 1]).is_zero()) return false;
  return true;
}

std::vector<long> betti(const CubicalComplex& c) {
  const std::size_t levels = c.cells.size();
  std::vector<long> rank(levels + 1, 0);
  for (std::size_t d = 1; d < levels; ++d) rank[d] = static_cast<long>(rational_rank(c.boundary[d]));
  std::vector<long> out(levels);
  for (std::size_t d = 0; d < levels; ++d)
    out[d] = static_cast<long>(c.cells[d].size()) - rank[d] - rank[d + 1];
  return out;
}

std::string boundary_triplets(const CubicalComplex& c, int d) {
  if (d < 1 || d > c.dimension()) throw InputError("no boundary map in degree " + std::to_string(d));
  std::ostringstream out;
  const auto& m = c.boundary[static_cast<std::size_t>(d)];
  out << "# " << m.cols() << " x " << m.rows() << "\n";
  auto entries = m.triplets();
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.col, a.row) < std::tie(b.col, b.row);
  });
  for (const Triplet& t : entries) out << t.col << ' ' << t.row << ' ' << t.value << '\n';
  return out.str();
}

std::vector<long> configuration_betti(const Graph& g, int k, std::size_t budget) {
  return betti(build_complex(sufficient_subdivision(normalize(g), k), k, budget));
}

NonvanishingReport nonvanishing_check(const Graph& g, int k, std::size_t budget) {
  if (!is_connected(g)) throw InapplicableError("connected graph required: graph is disconnected");
  if (k < 0) throw InputError("particle count must be non-negative");
  Graph normal = normalize(g);
  int m = 0;
  for (VertexIndex v = 0; v < normal.vertex_count(); ++v) m += is_essential(normal, v) ? 1 : 0;
  NonvanishingReport report;
  report.degree = std::min(k / 2, m);
  try {
    CubicalComplex c = build_complex(sufficient_subdivision(normal, k), k, budget);
    report.cells = c.cell_count();
    report.betti = betti(c);
  } catch (const BudgetExceeded&) {
    report.status = "unverified at desk scale";
    return report;
  }
  auto d = static_cast<std::size_t>(report.degree);
  report.nonzero = d < report.betti.size() && report.betti[d] != 0;
  report.status = *report.nonzero ? "verified" : "fails";
  return report;
}

}  // namespace gbtc
