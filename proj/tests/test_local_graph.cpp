#include <gtest/gtest.h>

#include <map>

#include "gbtc/errors.hpp"
#include "gbtc/local_graph.hpp"
#include "support.hpp"

using namespace gbtc;
using namespace testing_support;

namespace {

// Every tuple in [0, total]^parts with the given sum, by odometer.
std::vector<Composition> tuples_with_sum(int total, std::size_t parts) {
  std::vector<Composition> out;
  Composition c(parts, 0);
  for (;;) {
    int sum = 0;
    for (int x : c) sum += x;
    if (sum == total) out.push_back(c);
    std::size_t i = 0;
    while (i < parts && c[i] == total) c[i++] = 0;
    if (i == parts) break;
    ++c[i];
  }
  return out;
}

// All set partitions of {0..n-1} as label vectors.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> labels(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      out.push_back(labels);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      labels[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) {
    labels[0] = 0;
    go(1, 1);
  }
  return out;
}

}  // namespace

TEST(Compositions, MatchExhaustiveEnumeration) {
  for (std::size_t parts = 1; parts <= 4; ++parts)
    for (int total = 0; total <= 6; ++total) {
      auto got = compositions(total, parts);
      auto expected = tuples_with_sum(total, parts);
      std::sort(expected.rbegin(), expected.rend());
      EXPECT_EQ(got, expected);
    }
  EXPECT_TRUE(compositions(-1, 2).empty());
}

TEST(Lambda, MatchesBruteForceIncidence) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& labels : set_partitions(n)) {
      EquivRelation pi = EquivRelation::from_labels(labels);
      for (int k = 1; k <= 4; ++k) {
        LambdaGraph lambda = build_lambda(pi, k);
        std::size_t b = pi.block_count();
        auto upper = tuples_with_sum(k, b);
        auto lower = tuples_with_sum(k - 1, b);
        EXPECT_EQ(lambda.vertices().size(), upper.size() + lower.size());
        // Edge multiset by brute force: (upper, lower, label) with upper =
        // lower plus one particle in the label's block.
        std::multiset<std::tuple<Composition, Composition, std::size_t>> expected, got;
        for (const auto& u : upper)
          for (const auto& l : lower)
            for (std::size_t j = 0; j < n; ++j) {
              Composition shifted = l;
              ++shifted[pi.block_of(j)];
              if (shifted == u) expected.insert({u, l, j});
            }
        for (const auto& e : lambda.edges())
          got.insert({lambda.vertices()[e.upper], lambda.vertices()[e.lower], e.label});
        EXPECT_EQ(got, expected) << pi.to_string() << " k=" << k;
      }
    }
}

TEST(Lambda, SmallExamples) {
  LambdaGraph discrete = build_lambda(EquivRelation::discrete(3), 2);
  EXPECT_EQ(discrete.vertices().size(), 9u);
  EXPECT_EQ(discrete.edges().size(), 9u);
  EXPECT_EQ(pi1_rank(discrete), 1u);
  LambdaGraph merged = build_lambda(EquivRelation(3, {{0}, {1, 2}}), 3);
  EXPECT_EQ(merged.vertices().size(), 7u);
  EXPECT_EQ(merged.edges().size(), 9u);
  EXPECT_EQ(pi1_rank(merged), 3u);
  EXPECT_THROW(build_lambda(EquivRelation::discrete(2), 0), InputError);
}

TEST(Lambda, IndiscreteRankIsNMinusOne) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k)
      EXPECT_EQ(pi1_rank(build_lambda(EquivRelation::indiscrete(static_cast<std::size_t>(n)), k)),
                static_cast<std::size_t>(n - 1));
}

TEST(Lambda, VertexOrderAndLookup) {
  LambdaGraph lambda = build_lambda(EquivRelation::discrete(2), 2);
  std::vector<Composition> expected = {{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}};
  EXPECT_EQ(lambda.vertices(), expected);
  for (std::size_t v = 0; v < expected.size(); ++v) {
    EXPECT_EQ(lambda.index(expected[v]), v);
    EXPECT_EQ(lambda.is_upper(v), v < 3);
  }
  EXPECT_FALSE(lambda.find({3, 0}).has_value());
}

TEST(FreeBasis, GeneratorLoopsReadAsGenerators) {
  for (const auto& pi : {EquivRelation::indiscrete(4), EquivRelation::discrete(3), EquivRelation(4, {{0, 2}, {1, 3}})})
    for (int k = 1; k <= 4; ++k) {
      LambdaGraph lambda = build_lambda(pi, k);
      FreeBasis basis = free_basis(lambda, 0);
      EXPECT_EQ(static_cast<std::size_t>(basis.rank()), pi1_rank(lambda));
      for (int i = 1; i <= basis.rank(); ++i) {
        EdgePath loop = basis.generator_loop(i);
        EXPECT_EQ(path_end(lambda, 0, loop), 0u);
        EXPECT_EQ(basis.read(loop), Word::generator(basis.rank(), i));
      }
    }
}

TEST(FreeBasis, ParticleMoveEndsAtShiftedComposition) {
  LambdaGraph lambda = build_lambda(EquivRelation(3, {{0}, {1, 2}}), 3);
  std::size_t start = lambda.index({1, 2});
  EdgePath move = particle_move(lambda, start, 1, 0);
  ASSERT_EQ(move.size(), 2u);
  EXPECT_EQ(lambda.vertices()[path_end(lambda, start, move)], (Composition{2, 1}));
  // A move within one block is a loop.
  EdgePath within = particle_move(lambda, start, 1, 2);
  EXPECT_EQ(path_end(lambda, start, within), start);
  EXPECT_FALSE(free_basis(lambda, 0).read(within).is_identity());
}

TEST(LocalQuotient, CorpusVertices) {
  Graph spider = corpus("spider");
  EXPECT_TRUE(local_quotient(spider, spider.index("u")).is_discrete());
  EXPECT_EQ(local_quotient(spider, spider.index("u")).ground_size(), 4u);
  Graph t = normalize(theta());
  EXPECT_TRUE(local_quotient(t, t.index("a")).is_indiscrete());
  EXPECT_THROW(local_quotient(spider, spider.index("a1")), InapplicableError);
}

TEST(Stabilization, IndiscreteIsIsomorphism) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k) {
      auto s = sink_stabilization(build_lambda(EquivRelation::indiscrete(n), k), 0);
      EXPECT_TRUE(is_isomorphism(s.induced));
    }
}

TEST(Stabilization, DiscreteIsSplitInjective) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      for (std::size_t sink = 0; sink < n; ++sink) {
        auto s = sink_stabilization(build_lambda(EquivRelation::discrete(n), k), sink);
        auto r = split_retraction(s);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(r->after(s.induced), FreeHom::identity(s.source_basis.rank()));
      }
}

TEST(Stabilization, UnknownBlockIsRejected) {
  EXPECT_THROW(sink_stabilization(build_lambda(EquivRelation::discrete(2), 2), 5), InputError);
}

TEST(LambdaExport, JsonAndDot) {
  LambdaGraph lambda = build_lambda(EquivRelation::discrete(3), 2);
  auto doc = lambda_to_json(lambda);
  EXPECT_EQ(doc["pi1_rank"], 1);
  EXPECT_EQ(doc["vertices"].size(), 9u);
  EXPECT_EQ(doc["edges"].size(), 9u);
  std::string dot = lambda_to_dot(lambda);
  EXPECT_NE(dot.find("graph"), std::string::npos);
}
