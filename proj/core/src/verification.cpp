#include "gbtc/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "gbtc/automaton.hpp"
#include "gbtc/equivalence.hpp"
#include "gbtc/errors.hpp"
#include "gbtc/local_graph.hpp"
#include "gbtc/local_lemmas.hpp"

namespace gbtc {

namespace {

Word random_word(std::mt19937_64& rng, int rank, const std::vector<int>& alphabet, int min_len,
                 int max_len) {
  std::uniform_int_distribution<int> length(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::bernoulli_distribution invert(0.5);
  std::vector<Letter> letters;
  int n = length(rng);
  for (int i = 0; i < n; ++i) {
    int g = alphabet[pick(rng)];
    letters.push_back(invert(rng) ? -g : g);
  }
  return Word::reduce(rank, letters);
}

Word random_nontrivial(std::mt19937_64& rng, int rank, const std::vector<int>& alphabet,
                       int min_len, int max_len) {
  for (;;) {
    Word w = random_word(rng, rank, alphabet, min_len, max_len);
    if (!w.is_identity()) return w;
  }
}

std::string join(const std::vector<Word>& words) {
  std::string out;
  for (const Word& w : words) out += (out.empty() ? "" : ", ") + w.to_string();
  return "<" + out + ">";
}

LemmaCheck timed(std::string name, const std::function<bool(std::ostringstream&)>& body) {
  LemmaCheck check;
  check.name = std::move(name);
  std::ostringstream detail;
  auto start = std::chrono::steady_clock::now();
  try {
    check.passed = body(detail);
  } catch (const std::exception& e) {
    check.passed = false;
    detail << "error: " << e.what();
  }
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.detail = detail.str();
  return check;
}

// Advances a restricted growth string (one per set partition).
bool next_restricted_growth(std::vector<std::size_t>& labels) {
  for (std::size_t i = labels.size(); i-- > 1;) {
    std::size_t bound = *std::max_element(labels.begin(), labels.begin() + static_cast<long>(i)) + 1;
    if (labels[i] < bound) {
      ++labels[i];
      std::fill(labels.begin() + static_cast<long>(i) + 1, labels.end(), 0);
      return true;
    }
  }
  return false;
}

bool conjugate_up_to_inverse(const Word& u, const Word& v) {
  return are_conjugate(u, v) || are_conjugate(u, v.inverse());
}

}  // namespace

KernelInstance random_kernel_instance(std::mt19937_64& rng) {
  KernelInstance inst;
  inst.rank = std::uniform_int_distribution<int>(2, 4)(rng);
  std::vector<int> killed;
  std::vector<int> kept;
  for (int i = 1; i <= inst.rank; ++i) (std::bernoulli_distribution(0.4)(rng) ? killed : kept).push_back(i);
  if (killed.empty()) {
    killed.push_back(kept.back());
    kept.pop_back();
  }
  std::vector<int> all(static_cast<std::size_t>(inst.rank));
  for (int i = 0; i < inst.rank; ++i) all[static_cast<std::size_t>(i)] = i + 1;

  int target_rank = std::uniform_int_distribution<int>(1, 4)(rng);
  std::vector<int> target_letters;
  for (int i = 1; i <= target_rank; ++i) target_letters.push_back(i);
  std::vector<Word> images;
  for (int i = 1; i <= inst.rank; ++i) {
    bool dies = std::find(killed.begin(), killed.end(), i) != killed.end();
    images.push_back(dies ? Word(target_rank) : random_word(rng, target_rank, target_letters, 1, 3));
  }
  inst.psi = FreeHom(inst.rank, target_rank, std::move(images));

  int h0_gens = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int i = 0; i < h0_gens; ++i) inst.h0.push_back(random_nontrivial(rng, inst.rank, all, 1, 6));
  int h1_gens = std::uniform_int_distribution<int>(1, 2)(rng);
  bool inside_kernel = std::bernoulli_distribution(0.75)(rng);
  for (int i = 0; i < h1_gens; ++i)
    inst.h1.push_back(random_nontrivial(rng, inst.rank, inside_kernel ? killed : all, 1, 6));
  return inst;
}

bool kernel_criterion_applies(const KernelInstance& instance) {
  for (const Word& h : instance.h1)
    if (!instance.psi.apply(h).is_identity()) return false;
  return restriction_injective(instance.psi, instance.h0);
}

KernelSweep kernel_sweep(std::uint64_t seed, int instances, int bruteforce_length) {
  std::mt19937_64 rng(seed);
  KernelSweep sweep;
  for (int i = 0; i < instances; ++i) {
    KernelInstance inst = random_kernel_instance(rng);
    ++sweep.instances;
    bool disjoint = disjoint_conjugates(inst.h0, inst.h1, inst.rank);
    sweep.pullback_disjoint += disjoint ? 1 : 0;
    if (kernel_criterion_applies(inst)) {
      ++sweep.criterion_applies;
      sweep.criterion_agrees += disjoint ? 1 : 0;
    }
    if (bruteforce_length > 0 &&
        disjoint_conjugates_bruteforce(inst.h0, inst.h1, inst.rank, bruteforce_length).violation_found) {
      ++sweep.bruteforce_violations;
      sweep.bruteforce_agrees += disjoint ? 0 : 1;
    }
  }
  return sweep;
}

std::vector<LemmaCheck> verify_local_lemmas(int max_n, std::uint64_t seed, int random_instances) {
  if (max_n < 4) throw InputError("star size must be at least 4");
  std::vector<LemmaCheck> out;

  out.push_back(timed("gamma loops form a free basis", [&](std::ostringstream& d) {
    for (int n = 2; n <= max_n; ++n)
      for (int k = 1; k <= 4; ++k)
        if (!is_isomorphism(gamma_to_tree_basis(n, k))) {
          d << "fails at n=" << n << " k=" << k;
          return false;
        }
    d << "n=2.." << max_n << ", k=1..4";
    return true;
  }));

  out.push_back(timed("adjacent commutators have disjoint conjugates", [&](std::ostringstream& d) {
    bool ok = true;
    for (int n = 4; n <= max_n; ++n) {
      bool disjoint = disjoint_conjugates(commutator_subgroup(n, 0), commutator_subgroup(n, 1), n - 1);
      d << "n=" << n << ":" << (disjoint ? "disjoint" : "NOT disjoint") << " ";
      ok = ok && disjoint;
    }
    return ok;
  }));

  out.push_back(timed("triangle loops map to adjacent commutators", [&](std::ostringstream& d) {
    for (int n = 3; n <= max_n; ++n)
      for (int k = 2; k <= 3; ++k) {
        FreeHom change = gamma_to_tree_basis(n, k);
        for (int a = 0; a + 3 <= n; ++a) {
          Word image = star_loop_image(n, k, a);
          Word expected = change.apply(commutator_subgroup(n, a).front());
          if (!conjugate_up_to_inverse(image, expected)) {
            d << "n=" << n << " k=" << k << " a=" << a << ": " << image.to_string();
            return false;
          }
        }
      }
    d << "n=3.." << max_n << ", k=2..3, up to conjugacy and inversion";
    return true;
  }));

  out.push_back(timed("truncation is injective on one commutator and kills the next", [&](std::ostringstream& d) {
    for (int n = 4; n <= max_n; ++n) {
      FreeHom psi = gamma_truncation(n);
      auto h0 = commutator_subgroup(n, 0);
      auto h1 = commutator_subgroup(n, 1);
      if (!restriction_injective(psi, h0) || !psi.apply(h1.front()).is_identity()) {
        d << "fails at n=" << n;
        return false;
      }
    }
    d << "n=4.." << max_n;
    return true;
  }));

  out.push_back(timed("products with the third generator have disjoint conjugates", [&](std::ostringstream& d) {
    auto h0 = product_subgroup(0);
    auto h1 = product_subgroup(1);
    // Each map kills one subgroup and is injective on the other.
    Word a = Word::generator(2, 1);
    Word b = Word::generator(2, 2);
    FreeHom kill_second(3, 2, {a, b, b.inverse()});
    FreeHom kill_first(3, 2, {b, a, b.inverse()});
    bool disjoint = disjoint_conjugates(h0, h1, 3);
    bool first = restriction_injective(kill_second, h0) && kill_second.apply(h1.front()).is_identity();
    bool second = restriction_injective(kill_first, h1) && kill_first.apply(h0.front()).is_identity();
    d << join(h0) << " vs " << join(h1) << ": " << (disjoint ? "disjoint" : "NOT disjoint")
      << ", injective-and-killing maps " << (first && second ? "found" : "missing");
    return disjoint && first && second;
  }));

  out.push_back(timed("stabilized triangle loops at a separating vertex", [&](std::ostringstream& d) {
    bool ok = true;
    std::vector<EquivRelation> relations = {EquivRelation(3, {{0}, {1, 2}}), EquivRelation::discrete(3)};
    for (const auto& pi : relations)
      for (int k = 3; k <= 4; ++k) {
        std::vector<Word> images = {separating_loop_image(pi, k, 0), separating_loop_image(pi, k, 1)};
        int rank = images.front().rank();
        bool disjoint = !images[0].is_identity() && !images[1].is_identity() &&
                        disjoint_conjugates({images[0]}, {images[1]}, rank);
        d << pi.to_string() << " k=" << k << " rank " << rank << ": " << images[0].to_string() << " | "
          << images[1].to_string() << (disjoint ? "" : " NOT disjoint") << "; ";
        ok = ok && disjoint;
      }
    return ok;
  }));

  out.push_back(timed("separating images match the product subgroups", [&](std::ostringstream& d) {
    EquivRelation pi(3, {{0}, {1, 2}});
    std::vector<Word> images = {separating_loop_image(pi, 3, 0), separating_loop_image(pi, 3, 1)};
    std::vector<Word> targets = {product_subgroup(0).front(), product_subgroup(1).front()};
    if (images.front().rank() != 3) {
      d << "model has rank " << images.front().rank();
      return false;
    }
    auto match = signed_permutation_matching(images, targets);
    if (!match) {
      d << "no signed generator permutation matches";
      return false;
    }
    d << "generators -> " << join(match->images());
    return true;
  }));

  out.push_back(timed("sink stabilization is an isomorphism for one sink", [&](std::ostringstream& d) {
    for (int n = 2; n <= max_n; ++n)
      for (int k = 1; k <= 4; ++k) {
        auto s = sink_stabilization(build_lambda(EquivRelation::indiscrete(static_cast<std::size_t>(n)), k), 0);
        if (!is_isomorphism(s.induced)) {
          d << "fails at n=" << n << " k=" << k;
          return false;
        }
      }
    d << "n=2.." << max_n << ", k=1..4";
    return true;
  }));

  out.push_back(timed("sink stabilization is split injective", [&](std::ostringstream& d) {
    for (int n = 2; n <= std::min(max_n, 4); ++n)
      for (int k = 1; k <= 3; ++k) {
        auto pi = EquivRelation::discrete(static_cast<std::size_t>(n));
        for (std::size_t s = 0; s < pi.block_count(); ++s) {
          auto stab = sink_stabilization(build_lambda(pi, k), s);
          if (!split_retraction(stab)) {
            d << "fails at n=" << n << " k=" << k << " sink " << s;
            return false;
          }
        }
      }
    d << "discrete relations on 2.." << std::min(max_n, 4) << " edges, k=1..3";
    return true;
  }));

  out.push_back(timed("model rank is non-decreasing in k", [&](std::ostringstream& d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      // Every relation via restricted growth strings.
      std::vector<std::size_t> labels(n, 0);
      for (;;) {
        auto pi = EquivRelation::from_labels(labels);
        std::size_t previous = 0;
        for (int k = 1; k <= 5; ++k) {
          std::size_t rank = pi1_rank(build_lambda(pi, k));
          if (rank < previous) {
            d << pi.to_string() << " drops at k=" << k;
            return false;
          }
          previous = rank;
        }
        if (!next_restricted_growth(labels)) break;
      }
    }
    d << "all relations on 1..4 edges, k=1..5";
    return true;
  }));

  out.push_back(timed("kernel criterion agrees with the pullback", [&](std::ostringstream& d) {
    KernelSweep sweep = kernel_sweep(seed, random_instances, 0);
    d << sweep.criterion_agrees << "/" << sweep.criterion_applies << " applicable of " << sweep.instances;
    return sweep.passed();
  }));

  return out;
}

nlohmann::json to_json(const LemmaCheck& check) {
  return {{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}};
}

}  // namespace gbtc
