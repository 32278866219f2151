#include "gbtc/local_lemmas.hpp"

#include <algorithm>
#include <numeric>

#include "gbtc/errors.hpp"

namespace gbtc {

EdgePath gamma_loop(const LambdaGraph& lambda, int i) {
  const auto n = static_cast<int>(lambda.relation().ground_size());
  if (!lambda.relation().is_indiscrete()) throw InputError("gamma loops need the indiscrete relation");
  if (i < 1 || i >= n) throw InputError("gamma index out of range");
  return particle_move(lambda, 0, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
}

FreeHom gamma_to_tree_basis(int n, int k) {
  if (n < 2) throw InputError("gamma basis needs n >= 2");
  LambdaGraph lambda = build_lambda(EquivRelation::indiscrete(static_cast<std::size_t>(n)), k);
  FreeBasis basis = free_basis(lambda, 0);
  std::vector<Word> images;
  for (int i = 1; i < n; ++i) images.push_back(basis.read(gamma_loop(lambda, i)));
  return FreeHom(n - 1, basis.rank(), std::move(images));
}

std::vector<Word> commutator_subgroup(int n, int a) {
  if (n < 3 || a < 0 || n < 3 + a)
    throw InputError("commutator subgroup needs n >= 3 + a");
  return {commutator(Word::generator(n - 1, 1 + a), Word::generator(n - 1, 2 + a))};
}

FreeHom gamma_truncation(int n) {
  if (n < 3) throw InputError("truncation needs n >= 3");
  std::vector<Word> images;
  for (int i = 1; i < n; ++i) images.push_back(i <= 2 ? Word::generator(2, i) : Word(2));
  return FreeHom(n - 1, 2, std::move(images));
}

std::vector<Word> product_subgroup(int a) {
  if (a != 0 && a != 1) throw InputError("product subgroup index must be 0 or 1");
  return {Word::generator(3, 1 + a) * Word::generator(3, 3)};
}

namespace {

// The triangle loop visits the three leaves cyclically; each leg moves one
// particle between two leaves through the centre while the other waits.
EdgePath triangle_loop(const LambdaGraph& lambda, std::size_t start, std::size_t shift) {
  const std::size_t legs[3][2] = {{1, 2}, {0, 1}, {2, 0}};
  EdgePath loop;
  std::size_t at = start;
  for (const auto& leg : legs) {
    EdgePath step = particle_move(lambda, at, leg[0] + shift, leg[1] + shift);
    at = path_end(lambda, at, step);
    loop.insert(loop.end(), step.begin(), step.end());
  }
  if (at != start) throw InputError("triangle loop failed to close");
  return loop;
}

}  // namespace

Word star_loop_image(int n, int k, int a) {
  if (k < 2) throw InputError("the triangle loop needs k >= 2");
  if (a < 0 || n < 3 + a) throw InputError("star embedding needs n >= 3 + a");
  LambdaGraph lambda = build_lambda(EquivRelation::indiscrete(static_cast<std::size_t>(n)), k);
  FreeBasis basis = free_basis(lambda, 0);
  return basis.read(triangle_loop(lambda, 0, static_cast<std::size_t>(a)));
}

Word separating_loop_image(const EquivRelation& pi, int k, int a) {
  if (pi.ground_size() != 3) throw InputError("separating loop needs a relation on three edges");
  if (pi.block_of(0) == pi.block_of(1))
    throw InapplicableError("relation identifies the first two edges");
  if (k < 3) throw InputError("edge stabilization of the triangle loop needs k >= 3");
  if (a != 0 && a != 1) throw InputError("stabilized edge index must be 0 or 1");
  LambdaGraph lambda = build_lambda(pi, k);
  Composition start(pi.block_count(), 0);
  ++start[pi.block_of(0)];
  ++start[pi.block_of(1)];
  start[pi.block_of(static_cast<std::size_t>(a))] += k - 2;
  FreeBasis basis = free_basis(lambda, 0);
  return basis.read(triangle_loop(lambda, lambda.index(start), 0));
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) return false;
  const Word cu = u.cyclically_reduced();
  const Word cv = v.cyclically_reduced();
  const auto& x = cu.letters();
  const auto& y = cv.letters();
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  std::vector<Letter> doubled(x);
  doubled.insert(doubled.end(), x.begin(), x.end());
  return std::search(doubled.begin(), doubled.end(), y.begin(), y.end()) != doubled.end();
}

std::optional<FreeHom> signed_permutation_matching(const std::vector<Word>& images,
                                                   const std::vector<Word>& targets) {
  if (images.empty() || images.size() != targets.size()) return std::nullopt;
  const int rank = images.front().rank();
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1u << rank); ++signs) {
      std::vector<Word> gens;
      for (int i = 0; i < rank; ++i) {
        Word g = Word::generator(rank, perm[static_cast<std::size_t>(i)]);
        gens.push_back((signs >> i) & 1u ? g.inverse() : g);
      }
      FreeHom phi(rank, rank, std::move(gens));
      bool all = true;
      for (std::size_t i = 0; i < images.size() && all; ++i)
        all = are_conjugate(phi.apply(images[i]), targets[i]) ||
              are_conjugate(phi.apply(images[i]), targets[i].inverse());
      if (all) return phi;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace gbtc
