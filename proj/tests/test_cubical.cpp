#include <gtest/gtest.h>

#include <map>

#include "gbtc/cubical.hpp"
#include "gbtc/errors.hpp"
#include "support.hpp"

using namespace gbtc;
using namespace testing_support;

namespace {

// Independent model: all k-subsets of items by bitmask, cells keyed in a
// std::map, boundary signs by position among the edge items.
std::vector<long> betti_oracle(const Graph& g, int k) {
  const std::size_t V = g.vertex_count();
  const std::size_t items = V + g.edge_count();
  if (items > 28) throw std::runtime_error("oracle graph too large");
  auto closure = [&](std::size_t item) {
    std::uint32_t mask = 0;
    if (item < V) return 1u << item;
    mask |= 1u << g.edge(item - V).tail;
    mask |= 1u << g.edge(item - V).head;
    return mask;
  };
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> cells;
  for (std::uint32_t subset = 0; subset < (1u << items); ++subset) {
    if (__builtin_popcount(subset) != k) continue;
    std::uint32_t used = 0;
    bool ok = true;
    std::vector<std::size_t> cell;
    std::size_t dim = 0;
    for (std::size_t i = 0; i < items && ok; ++i) {
      if (!(subset >> i & 1u)) continue;
      ok = (used & closure(i)) == 0;
      used |= closure(i);
      cell.push_back(i);
      dim += i >= V;
    }
    if (!ok) continue;
    if (cells.size() <= dim) cells.resize(dim + 1);
    cells[dim].emplace(cell, cells[dim].size());
  }
  if (cells.empty()) cells.resize(1);
  std::vector<long> rank(cells.size() + 1, 0);
  for (std::size_t d = 1; d < cells.size(); ++d) {
    SparseIntMatrix m(cells[d].size(), cells[d - 1].size());
    for (const auto& [cell, row] : cells[d]) {
      long sign = 1;
      for (std::size_t pos = 0; pos < cell.size(); ++pos) {
        if (cell[pos] < V) continue;
        const Edge& e = g.edge(cell[pos] - V);
        for (auto [end, c] : {std::pair<std::size_t, long>{e.head, sign}, {e.tail, -sign}}) {
          auto face = cell;
          face[pos] = end;
          std::sort(face.begin(), face.end());
          m.add(row, cells[d - 1].at(face), c);
        }
        sign = -sign;
      }
    }
    rank[d] = static_cast<long>(rational_rank_dense(m));
  }
  std::vector<long> out(cells.size());
  for (std::size_t d = 0; d < cells.size(); ++d)
    out[d] = static_cast<long>(cells[d].size()) - rank[d] - rank[d + 1];
  return out;
}

// Shortest maximal bivalent chain or bivalent cycle.
std::size_t shortest_chain(const Graph& g) {
  std::size_t best = SIZE_MAX;
  std::vector<bool> seen(g.edge_count(), false);
  for (EdgeIndex start = 0; start < g.edge_count(); ++start) {
    if (seen[start]) continue;
    // Grow the chain in both directions from `start`.
    std::size_t length = 1;
    seen[start] = true;
    for (VertexIndex from : {g.edge(start).tail, g.edge(start).head}) {
      EdgeIndex e = start;
      VertexIndex v = from;
      while (valence(g, v) == 2) {
        const auto& inc = g.incident(v);
        EdgeIndex next = inc[0] == e ? inc[1] : inc[0];
        if (seen[next]) break;
        seen[next] = true;
        ++length;
        e = next;
        v = g.edge(e).other(v);
      }
    }
    best = std::min(best, length);
  }
  return best;
}

Graph edgeless(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  return g;
}

}  // namespace

TEST(Subdivision, ChainsReachKPlusOne) {
  for (const Graph& g : {star(3), star(4), theta(), corpus("h_graph"), corpus("fixed10"), cycle(3)})
    for (int k = 2; k <= 5; ++k) {
      Graph s = sufficient_subdivision(normalize(g), k);
      EXPECT_GE(shortest_chain(s), static_cast<std::size_t>(k + 1));
      EXPECT_EQ(first_betti_number(s), first_betti_number(g));
    }
}

TEST(Subdivision, StarAndThetaEdgesGetThreeSegments) {
  Graph s = sufficient_subdivision(normalize(star(3)), 2);
  EXPECT_EQ(s.edge_count(), 9u);
  Graph t = sufficient_subdivision(normalize(theta()), 2);
  EXPECT_EQ(t.edge_count(), 9u);
}

TEST(Subdivision, OneParticleLeavesGraphUnchanged) {
  Graph n = normalize(corpus("fixed10"));
  Graph s = sufficient_subdivision(n, 1);
  EXPECT_EQ(s.vertex_count(), n.vertex_count());
  EXPECT_EQ(s.edges(), n.edges());
}

TEST(Complex, MatchesIndependentOracle) {
  struct Case {
    Graph g;
    int k;
  };
  std::vector<Case> cases = {{star(3), 2}, {star(4), 2}, {cycle(3), 2}, {path(3), 2}, {theta(), 2}};
  for (const auto& c : cases) {
    Graph s = sufficient_subdivision(normalize(c.g), c.k);
    auto expected = betti_oracle(s, c.k);
    auto got = betti(build_complex(s, c.k));
    EXPECT_EQ(got, expected) << graph_to_json(c.g).dump();
  }
}

TEST(Complex, BoundarySquaresToZero) {
  for (const char* name : {"star3", "star4", "h_graph", "theta", "spider", "fixed10"})
    for (int k = 1; k <= 3; ++k) {
      auto c = build_complex(sufficient_subdivision(normalize(corpus(name)), k), k);
      EXPECT_TRUE(boundary_squares_to_zero(c)) << name << " k=" << k;
      EXPECT_LE(c.dimension(), k);
    }
}

TEST(Complex, EulerCharacteristicAndConnectedness) {
  for (const char* name : {"star3", "star5", "h_graph", "theta", "spider", "fixed10"})
    for (int k = 1; k <= 3; ++k) {
      auto c = build_complex(sufficient_subdivision(normalize(corpus(name)), k), k);
      auto b = betti(c);
      long chi_cells = 0, chi_betti = 0;
      for (std::size_t d = 0; d < b.size(); ++d) {
        long sign = d % 2 == 0 ? 1 : -1;
        chi_cells += sign * static_cast<long>(c.cells[d].size());
        chi_betti += sign * b[d];
        EXPECT_GE(b[d], 0);
      }
      EXPECT_EQ(chi_cells, chi_betti);
      EXPECT_EQ(b[0], 1) << name << " k=" << k;
    }
}

TEST(Complex, IntervalIsContractible) {
  for (int k = 1; k <= 4; ++k) {
    auto b = configuration_betti(test_data("interval"), k);
    EXPECT_EQ(b[0], 1);
    for (std::size_t d = 1; d < b.size(); ++d) EXPECT_EQ(b[d], 0);
  }
}

TEST(Complex, CircleConfigurationsAreCircles) {
  for (int k = 1; k <= 3; ++k) {
    auto b = configuration_betti(cycle(3), k);
    EXPECT_EQ(b[0], 1);
    EXPECT_EQ(b[1], 1);
    for (std::size_t d = 2; d < b.size(); ++d) EXPECT_EQ(b[d], 0);
  }
}

TEST(Complex, ZeroDimensionalComplex) {
  auto b = betti(build_complex(edgeless(4), 1));
  EXPECT_EQ(b, std::vector<long>{4});
  auto two = betti(build_complex(edgeless(4), 2));
  EXPECT_EQ(two, std::vector<long>{6});
}

TEST(Complex, StarGoldenValues) {
  EXPECT_EQ(configuration_betti(star(3), 2), (std::vector<long>{1, 1, 0}));
  EXPECT_EQ(configuration_betti(star(4), 2), (std::vector<long>{1, 3, 0}));
  EXPECT_EQ(configuration_betti(star(5), 2), (std::vector<long>{1, 6, 0}));
}

TEST(Complex, StarsMatchClosedForm) {
  auto choose = [](long n, long k) {
    long out = 1;
    for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
  };
  for (int n = 3; n <= 5; ++n)
    for (int k = 2; k <= 4; ++k) {
      long expected = 1 + (n - 2) * choose(n + k - 2, n - 1) - choose(n + k - 2, n - 2);
      auto b = configuration_betti(star(n), k);
      EXPECT_EQ(b[1], expected) << "n=" << n << " k=" << k;
      for (std::size_t d = 2; d < b.size(); ++d) EXPECT_EQ(b[d], 0);
    }
}

TEST(Complex, StableUnderExtraRefinement) {
  for (const char* name : {"star3", "star4", "h_graph", "theta", "spider"}) {
    Graph s = sufficient_subdivision(normalize(corpus(name)), 2);
    EXPECT_EQ(betti(build_complex(s, 2)), betti(build_complex(refine(s), 2))) << name;
  }
  Graph t = sufficient_subdivision(normalize(theta()), 3);
  EXPECT_EQ(betti(build_complex(t, 3)), betti(build_complex(refine(t), 3)));
}

TEST(Complex, BudgetIsEnforced) {
  Graph s = sufficient_subdivision(normalize(theta()), 3);
  EXPECT_THROW(build_complex(s, 3, 50), BudgetExceeded);
  auto report = nonvanishing_check(theta(), 3, 50);
  EXPECT_EQ(report.status, "unverified at desk scale");
  EXPECT_FALSE(report.nonzero.has_value());
}

TEST(Nonvanishing, PredictedDegree) {
  auto star_report = nonvanishing_check(star(3), 2);
  EXPECT_EQ(star_report.degree, 1);
  EXPECT_EQ(star_report.nonzero, true);
  auto tree = nonvanishing_check(corpus("h_graph"), 1);
  EXPECT_EQ(tree.degree, 0);
  EXPECT_EQ(tree.nonzero, true);
  auto t2 = nonvanishing_check(theta(), 2);
  EXPECT_EQ(t2.degree, 1);
  EXPECT_EQ(t2.status, "verified");
  EXPECT_THROW(nonvanishing_check(test_data("nonconnected"), 2), InapplicableError);
}

TEST(Complex, TripletDump) {
  auto c = build_complex(sufficient_subdivision(normalize(star(3)), 2), 2);
  std::string text = boundary_triplets(c, 1);
  EXPECT_EQ(text.rfind("# ", 0), 0u);
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  EXPECT_EQ(lines, 1 + c.boundary[1].nonzeros());
  EXPECT_THROW(boundary_triplets(c, 0), InputError);
}
