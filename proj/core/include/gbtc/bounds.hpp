#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gbtc/graph.hpp"

namespace gbtc {

struct Choice {
  int c0 = 0;
  int c1 = 0;
  int c2 = 0;
  friend bool operator==(const Choice&, const Choice&) = default;
  friend auto operator<=>(const Choice&, const Choice&) = default;
};

struct BoundReport {
  VertexClassification classification;
  int r = 0;
  int k = 0;
  Choice choice;
  std::optional<long> lower;
  std::optional<long> upper;
  std::optional<long> stable_value;
  std::optional<long> k0;
  std::vector<std::string> caveats;
  /// Status of the homology input: "assumed", "verified", "fails" or
  /// "unverified at desk scale".
  std::string homology = "assumed";
};

/// 2(c0+c2) + 3c1, the particle count a choice consumes.
int particle_cost(const Choice& c);
/// (r-2) min(floor(k/2), m) + 2(c0+c1) + c2.
long lower_value(const VertexClassification& n, int r, int k, const Choice& c);
/// Best admissible choice by exhaustive search; ties go to the
/// lexicographically largest (c0, c1, c2).
Choice best_choice(const VertexClassification& n, int k);
/// c0, then c1, then c2 taken as large as the particle budget allows.
Choice greedy_choice(const VertexClassification& n, int k);

/// Hypotheses: connected, m >= 2, r >= 2. Throws InapplicableError otherwise.
BoundReport lower_bound(const Graph& g, int r, int k);
/// r m(g); a caveat is attached when k < 2m. Throws InapplicableError on a
/// disconnected graph.
BoundReport upper_bound(const Graph& g, int r, int k);

/// Lower and upper bound with stable data where it exists. For r = 1 only
/// the stable value m is reported, and only when there are no
/// non-separating trivalent vertices and k >= k0.
BoundReport bound_report(const Graph& g, int r, int k);

/// Stable value r m and k0 = 2m + n1 when n2 = 0; otherwise a caveat.
BoundReport stable_report(const Graph& g, int r);

struct ChainCheck {
  bool holds = false;
  int k = 0;
  std::vector<std::string> lines;
  std::vector<std::string> caveats;
};

/// Evaluates the inequality chain with every c_i maximal at
/// k = 2(c0+c2) + 3c1 and checks that it closes at r m.
ChainCheck proof_chain_check(const Graph& g, int r);

nlohmann::json to_json(const VertexClassification& n);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const ChainCheck& check);

}  // namespace gbtc
