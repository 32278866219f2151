#include "gbtc/bounds.hpp"

#include <algorithm>

#include "gbtc/errors.hpp"

namespace gbtc {

namespace {

constexpr const char* kOutsideRange = "upper bound evaluated outside the range k >= 2m";
constexpr const char* kNoStable =
    "non-separating trivalent vertices present: no stable value is known (open question)";

VertexClassification checked_classification(const Graph& g) {
  VertexClassification n = classify(g);
  if (n.m() < 2)
    throw InapplicableError("connected graph with m(Γ) ≥ 2 required: m(Γ) = " +
                            std::to_string(n.m()));
  return n;
}

void check_particles(int k) {
  if (k < 0) throw InputError("particle count k must be non-negative");
}

}  // namespace

int particle_cost(const Choice& c) { return 2 * (c.c0 + c.c2) + 3 * c.c1; }

long lower_value(const VertexClassification& n, int r, int k, const Choice& c) {
  return static_cast<long>(r - 2) * std::min(k / 2, n.m()) + 2L * (c.c0 + c.c1) + c.c2;
}

Choice best_choice(const VertexClassification& n, int k) {
  Choice best;
  long best_value = -1;
  for (int c0 = 0; c0 <= n.n0; ++c0)
    for (int c1 = 0; c1 <= n.n1; ++c1)
      for (int c2 = 0; c2 <= n.n2; ++c2) {
        Choice c{c0, c1, c2};
        if (particle_cost(c) > k) continue;
        long value = 2L * (c0 + c1) + c2;
        if (value > best_value || (value == best_value && c > best)) {
          best = c;
          best_value = value;
        }
      }
  return best;
}

Choice greedy_choice(const VertexClassification& n, int k) {
  Choice c;
  int left = std::max(k, 0);
  c.c0 = std::min(n.n0, left / 2);
  left -= 2 * c.c0;
  c.c1 = std::min(n.n1, left / 3);
  left -= 3 * c.c1;
  c.c2 = std::min(n.n2, left / 2);
  return c;
}

BoundReport lower_bound(const Graph& g, int r, int k) {
  check_particles(k);
  BoundReport report;
  report.classification = checked_classification(g);
  if (r <= 1) throw InapplicableError("r ≥ 2 required for the lower bound: r = " + std::to_string(r));
  report.r = r;
  report.k = k;
  report.choice = best_choice(report.classification, k);
  report.lower = lower_value(report.classification, r, k, report.choice);
  return report;
}

BoundReport upper_bound(const Graph& g, int r, int k) {
  check_particles(k);
  if (r < 1) throw InapplicableError("r ≥ 1 required: r = " + std::to_string(r));
  BoundReport report;
  report.classification = classify(g);
  report.r = r;
  report.k = k;
  report.upper = static_cast<long>(r) * report.classification.m();
  if (k < 2 * report.classification.m()) report.caveats.push_back(kOutsideRange);
  return report;
}

BoundReport stable_report(const Graph& g, int r) {
  if (r < 1) throw InapplicableError("r ≥ 1 required: r = " + std::to_string(r));
  BoundReport report;
  report.classification = checked_classification(g);
  report.r = r;
  const auto& n = report.classification;
  if (n.n2 == 0) {
    report.stable_value = static_cast<long>(r) * n.m();
    report.k0 = 2L * n.m() + n.n1;
  } else {
    report.caveats.push_back(kNoStable);
  }
  return report;
}

BoundReport bound_report(const Graph& g, int r, int k) {
  check_particles(k);
  BoundReport stable = stable_report(g, r);
  BoundReport report;
  if (r == 1) {
    if (!stable.stable_value)
      throw InapplicableError("r = 1 is only reported in the stable range, which needs n2 = 0");
    if (k < *stable.k0)
      throw InapplicableError("r = 1 is only reported in the stable range k ≥ k0 = " +
                              std::to_string(*stable.k0));
    report = stable;
    report.k = k;
    report.lower = report.upper = stable.stable_value;
    report.caveats.push_back("r = 1: stable value only");
    return report;
  }
  report = lower_bound(g, r, k);
  BoundReport upper = upper_bound(g, r, k);
  report.upper = upper.upper;
  report.caveats = upper.caveats;
  report.stable_value = stable.stable_value;
  report.k0 = stable.k0;
  for (const auto& c : stable.caveats) report.caveats.push_back(c);
  return report;
}

ChainCheck proof_chain_check(const Graph& g, int r) {
  ChainCheck check;
  VertexClassification n;
  try {
    n = checked_classification(g);
  } catch (const InapplicableError& e) {
    check.caveats.push_back(e.what());
    return check;
  }
  if (n.n2 != 0) {
    check.caveats.push_back(kNoStable);
    return check;
  }
  if (r < 2) {
    check.caveats.push_back("r ≥ 2 required for the lower bound");
    return check;
  }
  Choice maximal{n.n0, n.n1, n.n2};
  check.k = particle_cost(maximal);
  const int m = n.m();
  const int half = check.k / 2;
  const long min_term = std::min(half, m);
  const long lower = lower_value(n, r, check.k, maximal);
  const long optimum = *lower_bound(g, r, check.k).lower;
  const long upper = static_cast<long>(r) * m;

  auto line = [&](const std::string& text) { check.lines.push_back(text); };
  line("k = 2(c0+c2) + 3c1 = " + std::to_string(check.k));
  line("floor(k/2) = " + std::to_string(half) + " >= c0+c1 = m = " + std::to_string(m));
  line("(r-2) min(floor(k/2), m) = " + std::to_string(r - 2) + " * " + std::to_string(min_term));
  line("2(c0+c1) + c2 = " + std::to_string(2 * (n.n0 + n.n1)) + " = 2m");
  line("lower = " + std::to_string(lower) + ", optimum over choices = " + std::to_string(optimum));
  line("r m = " + std::to_string(upper));
  check.holds = half >= m && min_term == m && lower == optimum && lower == upper &&
                particle_cost(maximal) == 2 * m + n.n1;
  return check;
}

nlohmann::json to_json(const VertexClassification& n) {
  return {{"n0", n.n0}, {"n1", n.n1}, {"n2", n.n2}, {"m", n.m()}};
}

nlohmann::json to_json(const BoundReport& report) {
  auto optional = [](const std::optional<long>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"classification", to_json(report.classification)},
          {"r", report.r},
          {"k", report.k},
          {"choice", {report.choice.c0, report.choice.c1, report.choice.c2}},
          {"lower", optional(report.lower)},
          {"upper", optional(report.upper)},
          {"stable_value", optional(report.stable_value)},
          {"k0", optional(report.k0)},
          {"caveats", report.caveats},
          {"homology", report.homology}};
}

nlohmann::json to_json(const ChainCheck& check) {
  return {{"holds", check.holds}, {"k", check.k}, {"lines", check.lines}, {"caveats", check.caveats}};
}

}  // namespace gbtc
