#include <gtest/gtest.h>

#include <random>

#include "gbtc/automaton.hpp"
#include "gbtc/errors.hpp"
#include "gbtc/free_group.hpp"

using namespace gbtc;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::vector<Letter> letters;
  int n = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::uniform_int_distribution<int> gen(1, rank);
  for (int i = 0; i < n; ++i) letters.push_back(std::bernoulli_distribution(0.5)(rng) ? gen(rng) : -gen(rng));
  return Word::reduce(rank, letters);
}

long exponent_sum(const Word& w, int generator) {
  long s = 0;
  for (Letter x : w.letters()) s += x == generator ? 1 : (x == -generator ? -1 : 0);
  return s;
}

// Schreier generators of the kernel of F(rank) -> Z/n sending g1 to 1 and
// the other generators to 0.
std::vector<Word> cyclic_kernel(int rank, int n) {
  std::vector<Word> gens{power(Word::generator(rank, 1), n)};
  for (int i = 0; i < n; ++i)
    for (int j = 2; j <= rank; ++j) {
      Word t = power(Word::generator(rank, 1), i);
      gens.push_back(t * Word::generator(rank, j) * t.inverse());
    }
  return gens;
}

}  // namespace

TEST(Word, ReductionAndInverse) {
  Word w = Word::reduce(3, {1, 2, -2, 3, -3, -1, 2});
  EXPECT_EQ(w, Word::generator(3, 2));
  Word u = Word::reduce(2, {1, 2, -1});
  EXPECT_TRUE((u * u.inverse()).is_identity());
  EXPECT_THROW(Word::reduce(2, {3}), InputError);
  EXPECT_THROW(Word::reduce(2, {0}), InputError);
}

TEST(Word, ParseAndPrint) {
  EXPECT_EQ(parse_word("g1 g2^-1", 2).to_string(), "g1 g2^-1");
  EXPECT_EQ(parse_word("1", 2).to_string(), "1");
  EXPECT_EQ(parse_word("g1^3", 1), power(Word::generator(1, 1), 3));
  Word a = Word::generator(3, 1), b = Word::generator(3, 2), c = Word::generator(3, 3);
  EXPECT_EQ(parse_word("[g1,g2]", 3), a * b * a.inverse() * b.inverse());
  EXPECT_EQ(parse_word("[[g1,g2],g3]", 3), commutator(commutator(a, b), c));
  EXPECT_EQ(max_generator_index("g1 [g7, g2]"), 7);
  EXPECT_THROW(parse_word("g4", 3), InputError);
  EXPECT_THROW(parse_word("[g1,", 3), InputError);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 3, 10);
    EXPECT_EQ(parse_word(w.to_string(), 3), w);
  }
}

TEST(Word, CyclicReduction) {
  Word w = parse_word("g2 g1 g3 g2^-1", 3);
  EXPECT_EQ(w.cyclically_reduced(), parse_word("g1 g3", 3));
}

TEST(FreeHom, CompositionAndValidation) {
  FreeHom f(2, 2, {parse_word("g1 g2", 2), Word::generator(2, 2)});
  FreeHom g(2, 2, {Word::generator(2, 1), parse_word("g2 g1", 2)});
  Word w = parse_word("g1 g2^-1 g1", 2);
  EXPECT_EQ(g.after(f).apply(w), g.apply(f.apply(w)));
  EXPECT_THROW(FreeHom(2, 2, {Word::generator(2, 1)}), InputError);
  EXPECT_THROW(f.apply(Word::generator(3, 1)), InputError);
}

TEST(Stallings, MembershipMatchesExponentSumOracle) {
  std::mt19937_64 rng(2);
  for (int rank = 1; rank <= 3; ++rank)
    for (int n = 1; n <= 4; ++n) {
      auto core = stallings_core(rank, cyclic_kernel(rank, n));
      EXPECT_EQ(core.state_count(), static_cast<std::size_t>(n));
      EXPECT_EQ(subgroup_rank(core), static_cast<std::size_t>(n * (rank - 1) + 1));
      for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, rank, 12);
        EXPECT_EQ(contains(core, w), exponent_sum(w, 1) % n == 0) << w.to_string();
      }
    }
}

TEST(Stallings, CanonicalForEqualSubgroups) {
  Word a = Word::generator(2, 1), b = Word::generator(2, 2);
  auto first = stallings_core(2, {a * b, b});
  auto second = stallings_core(2, {b * a, a.inverse()});
  EXPECT_EQ(first, second);
  EXPECT_EQ(stallings_core(2, {}), stallings_core(2, {Word(2), a * a.inverse()}));
  EXPECT_FALSE(stallings_core(2, {a}) == stallings_core(2, {b}));
}

TEST(Stallings, BasisGeneratesTheSameSubgroup) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> gens{random_word(rng, 3, 6), random_word(rng, 3, 6)};
    auto core = stallings_core(3, gens);
    auto basis = core.basis();
    EXPECT_EQ(basis.size(), subgroup_rank(core));
    EXPECT_EQ(stallings_core(3, basis), core);
    for (const Word& g : gens) EXPECT_TRUE(contains(core, g));
  }
}

TEST(Stallings, RestrictionInjectivity) {
  FreeHom collapse(2, 1, {Word::generator(1, 1), Word::generator(1, 1)});
  EXPECT_FALSE(restriction_injective(collapse, {Word::generator(2, 1), Word::generator(2, 2)}));
  EXPECT_TRUE(restriction_injective(collapse, {Word::generator(2, 1)}));
  EXPECT_FALSE(restriction_injective(collapse, {parse_word("g1 g2^-1", 2)}));
  EXPECT_TRUE(restriction_injective(FreeHom::identity(3), {parse_word("g1 g2", 3), Word::generator(3, 3)}));
}

TEST(Pullback, SimpleCases) {
  Word a = Word::generator(2, 1), b = Word::generator(2, 2);
  EXPECT_TRUE(disjoint_conjugates({a}, {b}, 2));
  EXPECT_FALSE(disjoint_conjugates({a}, {b * a * b.inverse()}, 2));
  EXPECT_FALSE(disjoint_conjugates({a * a}, {a * a * a}, 2));
  EXPECT_TRUE(disjoint_conjugates({commutator(a, b)}, {a}, 2));
  EXPECT_TRUE(disjoint_conjugates({a}, {}, 2));
}

TEST(Pullback, WitnessIsValid) {
  std::mt19937_64 rng(4);
  int witnesses = 0;
  for (int i = 0; i < 300; ++i) {
    int rank = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Word> h0{random_word(rng, rank, 5)}, h1{random_word(rng, rank, 5)};
    auto witness = find_conjugate_intersection(h0, h1, rank);
    EXPECT_EQ(witness.has_value(), !disjoint_conjugates(h0, h1, rank));
    if (!witness) continue;
    ++witnesses;
    EXPECT_FALSE(witness->element.is_identity());
    EXPECT_TRUE(contains(stallings_core(rank, h0), witness->element));
    Word conj = witness->conjugator * witness->element * witness->conjugator.inverse();
    EXPECT_TRUE(contains(stallings_core(rank, h1), conj));
  }
  EXPECT_GT(witnesses, 20);
}

TEST(Pullback, AgreesWithBruteForceWhereItFindsViolations) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    int rank = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Word> h0{random_word(rng, rank, 4)}, h1{random_word(rng, rank, 4)};
    auto brute = disjoint_conjugates_bruteforce(h0, h1, rank, 4);
    if (brute.violation_found) {
      EXPECT_FALSE(disjoint_conjugates(h0, h1, rank));
      const auto& w = *brute.witness;
      EXPECT_TRUE(contains(stallings_core(rank, h1), w.conjugator * w.element * w.conjugator.inverse()));
    }
  }
}

TEST(ReducedWords, CountMatchesFormula) {
  for (int rank = 1; rank <= 3; ++rank)
    for (int len = 0; len <= 4; ++len) {
      std::size_t expected = 1, layer = 2 * static_cast<std::size_t>(rank);
      for (int l = 1; l <= len; ++l) {
        expected += layer;
        layer *= 2 * static_cast<std::size_t>(rank) - 1;
      }
      EXPECT_EQ(reduced_words_up_to(rank, len).size(), expected);
    }
}
