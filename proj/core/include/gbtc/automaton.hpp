#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gbtc/free_group.hpp"

namespace gbtc {

/// Directed arc `from --label--> to`, label in 1..rank.
struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  int label = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Stallings core graph of a finitely generated subgroup of F(rank).
///
/// State 0 is the basepoint. The automaton is folded, core and connected,
/// and states are numbered by breadth-first search from the basepoint in
/// letter order, so two automata compare equal iff they present the same
/// subgroup.
class FoldedAutomaton {
 public:
  int rank() const { return rank_; }
  std::size_t state_count() const { return moves_.size(); }
  std::size_t basepoint() const { return 0; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Target of reading `x` (signed) at `state`, if any.
  std::optional<std::size_t> step(std::size_t state, Letter x) const;
  /// State reached by reading `w` from `state`, if the path exists.
  std::optional<std::size_t> trace(std::size_t state, const Word& w) const;

  /// Reduced word labelling the spanning-tree path from the basepoint.
  const Word& tree_path(std::size_t state) const { return tree_paths_.at(state); }
  /// Free basis of the subgroup: one word per non-tree arc.
  std::vector<Word> basis() const;

  friend bool operator==(const FoldedAutomaton& a, const FoldedAutomaton& b) {
    return a.rank_ == b.rank_ && a.arcs_ == b.arcs_ && a.moves_.size() == b.moves_.size();
  }

 private:
  friend FoldedAutomaton stallings_core(int rank, const std::vector<Word>& gens);

  int rank_ = 0;
  std::vector<Arc> arcs_;
  // moves_[state][slot] where slot encodes a signed letter; SIZE_MAX if absent.
  std::vector<std::vector<std::size_t>> moves_;
  std::vector<Word> tree_paths_;
  std::vector<bool> tree_arc_;
};

/// Folds the bouquet of `gens` and prunes hanging trees away from the
/// basepoint. An empty (or all-trivial) list gives the one-state automaton.
FoldedAutomaton stallings_core(int rank, const std::vector<Word>& gens);

/// arcs - states + 1.
std::size_t subgroup_rank(const FoldedAutomaton& a);

/// Membership by path tracing. Throws InputError on a rank mismatch.
bool contains(const FoldedAutomaton& a, const Word& w);

/// True iff f restricted to <H> is injective, decided by comparing the rank
/// of <H> with the rank of <f(H)> (free groups are Hopfian).
bool restriction_injective(const FreeHom& f, const std::vector<Word>& gens);

/// Fibre product of two core graphs, as an undirected multigraph on pairs of
/// states. Only pairs meeting an arc (and the pair of basepoints) appear.
struct ProductGraph {
  std::vector<std::pair<std::size_t, std::size_t>> states;
  std::vector<Arc> arcs;  // endpoints index into `states`

  std::size_t component_count() const;
  bool is_forest() const;
};

/// Throws InputError on a rank mismatch.
ProductGraph pullback(const FoldedAutomaton& a, const FoldedAutomaton& b);

/// Witness of g h g^-1 in H1 with 1 != h in H0.
struct ConjugacyWitness {
  Word conjugator;
  Word element;
};

/// A witness extracted from a cycle of the pullback, or nullopt if every
/// component of the pullback is a tree.
std::optional<ConjugacyWitness> find_conjugate_intersection(
    const std::vector<Word>& h0, const std::vector<Word>& h1, int rank);

/// True iff every conjugate of <h0> meets <h1> trivially.
bool disjoint_conjugates(const std::vector<Word>& h0, const std::vector<Word>& h1,
                         int rank);

struct BruteForceResult {
  /// False means "no violation found up to max_len", not a proof.
  bool violation_found = false;
  std::optional<ConjugacyWitness> witness;
};

/// Exhaustive search over conjugators g of length <= max_len and nontrivial
/// h in <h0> of length <= max_len (products of at most max_len generator
/// factors), testing g h g^-1 in <h1> by membership.
BruteForceResult disjoint_conjugates_bruteforce(const std::vector<Word>& h0,
                                                const std::vector<Word>& h1, int rank,
                                                int max_len);

/// All reduced words of length <= max_len in F(rank), shortlex order.
std::vector<Word> reduced_words_up_to(int rank, int max_len);

}  // namespace gbtc
