#pragma once

#include <optional>
#include <vector>

#include "gbtc/equivalence.hpp"
#include "gbtc/free_group.hpp"
#include "gbtc/local_graph.hpp"

namespace gbtc {

/// Loop in the k-particle model of the indiscrete relation on n elements,
/// based at the all-at-sink vertex: out along edge i, back along edge i+1
/// (1-based, 1 <= i < n).
EdgePath gamma_loop(const LambdaGraph& lambda, int i);

/// Change of basis from the loops gamma_1..gamma_{n-1} to the spanning-tree
/// basis free_basis(model, 0) of the indiscrete model on n with k particles.
FreeHom gamma_to_tree_basis(int n, int k);

/// {[gamma_{1+a}, gamma_{2+a}]} in the rank n-1 gamma basis. Needs n >= 3
/// and n >= 3 + a.
std::vector<Word> commutator_subgroup(int n, int a);

/// gamma_i -> gamma_i for i <= 2, gamma_i -> 1 otherwise; rank n-1 -> 2.
FreeHom gamma_truncation(int n);

/// {x_{1+a} x_3} in rank 3, a in {0, 1}.
std::vector<Word> product_subgroup(int a);

/// The triangle loop of the two-particle star on three edges, pushed through
/// the star embedding shifted by `a`, the quotient identifying all leaves,
/// and sink stabilization up to k particles. Expressed in
/// free_basis(build_lambda(indiscrete(n), k), 0).
Word star_loop_image(int n, int k, int a);

/// The triangle loop with a particle added on edge a+1, pushed to the local
/// graph on `pi` (a relation on three elements not identifying the first
/// two) and stabilized up to k >= 3 particles. Expressed in
/// free_basis(build_lambda(pi, k), 0).
Word separating_loop_image(const EquivRelation& pi, int k, int a);

/// True iff u and v are conjugate in the free group.
bool are_conjugate(const Word& u, const Word& v);

/// A generator permutation with signs taking each images[i] to a conjugate
/// of targets[i] or of its inverse, so that the cyclic subgroups match up to
/// conjugacy.
std::optional<FreeHom> signed_permutation_matching(const std::vector<Word>& images,
                                                   const std::vector<Word>& targets);

}  // namespace gbtc
