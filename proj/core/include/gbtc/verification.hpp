#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gbtc/free_group.hpp"

namespace gbtc {

struct LemmaCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Instance of the kernel criterion: psi is injective on <h0> and kills
/// <h1>, which forces <h0> and <h1> to have disjoint conjugates.
struct KernelInstance {
  int rank = 0;
  FreeHom psi;
  std::vector<Word> h0;
  std::vector<Word> h1;
};

/// Rank 2..4, psi killing a random set of generators and sending the rest
/// to words of length 1..3, subgroups generated by one or two words of
/// length 1..6 (h1 usually in the killed generators).
KernelInstance random_kernel_instance(std::mt19937_64& rng);

bool kernel_criterion_applies(const KernelInstance& instance);

struct KernelSweep {
  int instances = 0;
  int criterion_applies = 0;
  int criterion_agrees = 0;
  int bruteforce_violations = 0;
  int bruteforce_agrees = 0;
  int pullback_disjoint = 0;
  bool passed() const {
    return criterion_agrees == criterion_applies && bruteforce_agrees == bruteforce_violations;
  }
};

/// Compares the kernel criterion and a brute-force search against the
/// pullback decision on random instances.
KernelSweep kernel_sweep(std::uint64_t seed, int instances, int bruteforce_length);

/// All local-graph checks for star sizes up to max_n.
std::vector<LemmaCheck> verify_local_lemmas(int max_n, std::uint64_t seed = 20240601,
                                            int random_instances = 200);

nlohmann::json to_json(const LemmaCheck& check);

}  // namespace gbtc
