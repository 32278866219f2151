#include <gtest/gtest.h>

#include "gbtc/bounds.hpp"
#include "gbtc/errors.hpp"
#include "support.hpp"

using namespace gbtc;
using namespace testing_support;

namespace {

struct Best {
  long value = -1;
  int c0 = 0, c1 = 0, c2 = 0;
};

// Enumerates every admissible triple; ties keep the lexicographically
// largest.
Best exhaustive(int n0, int n1, int n2, int r, int k) {
  Best best;
  int m = n0 + n1 + n2;
  for (int c0 = n0; c0 >= 0; --c0)
    for (int c1 = n1; c1 >= 0; --c1)
      for (int c2 = n2; c2 >= 0; --c2) {
        if (2 * (c0 + c2) + 3 * c1 > k) continue;
        long value = (r - 2) * std::min(k / 2, m) + 2 * (c0 + c1) + c2;
        if (value > best.value) best = {value, c0, c1, c2};
      }
  return best;
}

const char* kStableCorpus[] = {"h_graph", "spider"};
const char* kBoundCorpus[] = {"h_graph", "spider", "theta", "fixed10"};

}  // namespace

TEST(Choice, ExhaustiveAndGreedyAgreeWithOracle) {
  for (int n0 = 0; n0 <= 3; ++n0)
    for (int n1 = 0; n1 <= 3; ++n1)
      for (int n2 = 0; n2 <= 3; ++n2)
        for (int k = 0; k <= 24; ++k) {
          VertexClassification n{n0, n1, n2};
          Best oracle = exhaustive(n0, n1, n2, 3, k);
          Choice best = best_choice(n, k);
          EXPECT_EQ(best, (Choice{oracle.c0, oracle.c1, oracle.c2}));
          EXPECT_EQ(lower_value(n, 3, k, best), oracle.value);
          EXPECT_EQ(greedy_choice(n, k), best) << n0 << n1 << n2 << " k=" << k;
        }
}

TEST(LowerBound, Examples) {
  BoundReport h = lower_bound(corpus("h_graph"), 2, 6);
  EXPECT_EQ(h.choice, (Choice{0, 2, 0}));
  EXPECT_EQ(h.lower, 4);
  BoundReport t = lower_bound(corpus("theta"), 3, 4);
  EXPECT_EQ(t.choice, (Choice{0, 0, 2}));
  EXPECT_EQ(t.lower, 4);
  BoundReport empty = lower_bound(corpus("spider"), 2, 0);
  EXPECT_EQ(empty.choice, (Choice{0, 0, 0}));
  EXPECT_EQ(empty.lower, 0);
}

TEST(LowerBound, Hypotheses) {
  EXPECT_THROW(lower_bound(corpus("h_graph"), 1, 6), InapplicableError);
  EXPECT_THROW(lower_bound(corpus("star3"), 2, 6), InapplicableError);
  EXPECT_THROW(lower_bound(test_data("nonconnected"), 2, 6), InapplicableError);
  EXPECT_THROW(lower_bound(corpus("h_graph"), 2, -1), InputError);
}

TEST(UpperBound, Examples) {
  EXPECT_EQ(upper_bound(corpus("theta"), 3, 4).upper, 6);
  EXPECT_EQ(upper_bound(corpus("h_graph"), 2, 6).upper, 4);
  EXPECT_EQ(upper_bound(corpus("spider"), 1, 4).upper, 2);
  EXPECT_TRUE(upper_bound(corpus("spider"), 1, 4).caveats.empty());
  EXPECT_EQ(upper_bound(corpus("spider"), 2, 3).caveats.size(), 1u);
}

TEST(Stable, Examples) {
  BoundReport h = stable_report(corpus("h_graph"), 2);
  EXPECT_EQ(h.stable_value, 4);
  EXPECT_EQ(h.k0, 6);
  BoundReport s = stable_report(corpus("spider"), 3);
  EXPECT_EQ(s.stable_value, 6);
  EXPECT_EQ(s.k0, 4);
  BoundReport t = stable_report(corpus("theta"), 2);
  EXPECT_FALSE(t.stable_value.has_value());
  EXPECT_FALSE(t.k0.has_value());
  EXPECT_EQ(t.caveats.size(), 1u);
}

TEST(Chain, Examples) {
  EXPECT_TRUE(proof_chain_check(corpus("h_graph"), 5).holds);
  EXPECT_EQ(proof_chain_check(corpus("h_graph"), 5).k, 6);
  EXPECT_TRUE(proof_chain_check(corpus("spider"), 2).holds);
  ChainCheck t = proof_chain_check(corpus("theta"), 3);
  EXPECT_FALSE(t.holds);
  EXPECT_FALSE(t.caveats.empty());
  EXPECT_FALSE(proof_chain_check(corpus("star3"), 3).holds);
}

TEST(BoundReport, ROneOnlyInStableRange) {
  BoundReport s = bound_report(corpus("spider"), 1, 4);
  EXPECT_EQ(s.lower, 2);
  EXPECT_EQ(s.upper, 2);
  EXPECT_THROW(bound_report(corpus("spider"), 1, 3), InapplicableError);
  EXPECT_THROW(bound_report(corpus("theta"), 1, 10), InapplicableError);
}

TEST(Properties, LowerAtMostUpperAndMonotone) {
  for (const char* name : kBoundCorpus) {
    Graph g = corpus(name);
    int m = classify(g).m();
    for (int r = 2; r <= 6; ++r)
      for (int k = 0; k <= 12; ++k) {
        BoundReport b = bound_report(g, r, k);
        if (k >= 2 * m) EXPECT_LE(*b.lower, *b.upper) << name << " r=" << r << " k=" << k;
        if (k > 0) EXPECT_GE(*b.lower, *bound_report(g, r, k - 1).lower);
        if (r > 2) EXPECT_GE(*b.lower, *bound_report(g, r - 1, k).lower);
        EXPECT_LE(particle_cost(b.choice), k);
      }
  }
}

TEST(Properties, StableRangeCloses) {
  for (const char* name : kStableCorpus) {
    Graph g = corpus(name);
    int m = classify(g).m();
    for (int r = 2; r <= 6; ++r) {
      long k0 = *stable_report(g, r).k0;
      for (int k = static_cast<int>(k0); k <= k0 + 4; ++k) {
        BoundReport b = bound_report(g, r, k);
        EXPECT_EQ(b.lower, r * m);
        EXPECT_EQ(b.upper, r * m);
      }
    }
  }
}

TEST(Json, StableFieldNames) {
  auto doc = to_json(bound_report(corpus("theta"), 3, 4));
  for (const char* key : {"lower", "upper", "stable_value", "k0", "choice", "caveats", "classification", "homology"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_TRUE(doc["stable_value"].is_null());
  EXPECT_EQ(doc["lower"], 4);
  EXPECT_EQ(doc["upper"], 6);
}
