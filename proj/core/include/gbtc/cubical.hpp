#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbtc/exact_rank.hpp"
#include "gbtc/graph.hpp"

namespace gbtc {

inline constexpr std::size_t kDefaultCellBudget = 5'000'000;

/// Every maximal chain of edges through bivalent vertices, and every cycle
/// of bivalent vertices, ends up with at least k+1 edges. For k <= 1 the
/// graph is returned unchanged.
Graph sufficient_subdivision(const Graph& g, int k);

/// Splits every edge in two.
Graph refine(const Graph& g);

/// A cell is a sorted list of k items of the graph, where item v < V is the
/// vertex v and item V+e is the closed edge e, with pairwise disjoint
/// closures. Its dimension is the number of edge items.
using Cell = std::vector<std::uint32_t>;

/// Discretized unordered configuration space of k points.
struct CubicalComplex {
  std::size_t vertex_count = 0;  // of the underlying graph
  int particles = 0;
  /// cells[d] in lexicographic order.
  std::vector<std::vector<Cell>> cells;
  /// boundary[d] for d >= 1: one row per d-cell, columns index (d-1)-cells.
  /// boundary[0] is an empty placeholder.
  std::vector<SparseIntMatrix> boundary;

  int dimension() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t cell_count() const;
};

/// Enumerates all cells of the complex on `g` and their boundaries with the
/// cube sign convention: the i-th edge of a cell (by item order) contributes
/// (-1)^i (head face - tail face). Throws BudgetExceeded when the number of
/// cells would pass `budget`.
CubicalComplex build_complex(const Graph& g, int k, std::size_t budget = kDefaultCellBudget);

/// True iff every composite boundary vanishes.
bool boundary_squares_to_zero(const CubicalComplex& c);

/// Ranks of rational homology in degrees 0..dimension.
std::vector<long> betti(const CubicalComplex& c);

/// Triplets (row, col, value) of the map from d-chains to (d-1)-chains:
/// rows are (d-1)-cells, columns d-cells.
std::string boundary_triplets(const CubicalComplex& c, int d);

struct NonvanishingReport {
  int degree = 0;
  /// Empty when the cell budget was exceeded.
  std::vector<long> betti;
  std::size_t cells = 0;
  std::optional<bool> nonzero;
  /// "verified", "fails" or "unverified at desk scale".
  std::string status;
};

/// Betti number of B_k(g) in degree min(floor(k/2), m(g)), computed on the
/// sufficiently subdivided normalization. Throws InapplicableError when g is
/// disconnected.
NonvanishingReport nonvanishing_check(const Graph& g, int k,
                                      std::size_t budget = kDefaultCellBudget);

/// Betti numbers of B_k(g) on the sufficiently subdivided normalization.
std::vector<long> configuration_betti(const Graph& g, int k,
                                      std::size_t budget = kDefaultCellBudget);

}  // namespace gbtc
