#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gbtc/bounds.hpp"
#include "gbtc/cubical.hpp"
#include "gbtc/errors.hpp"
#include "gbtc/graph_io.hpp"
#include "gbtc/local_graph.hpp"
#include "gbtc/verification.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gbtc;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitVerification = 3;

bool pretty = false;

void emit(const json& doc) { std::cout << (pretty ? doc.dump(2) : doc.dump()) << '\n'; }

std::size_t cell_budget() {
  const char* text = std::getenv("GBTC_CELL_BUDGET");
  if (text == nullptr || *text == '\0') return kDefaultCellBudget;
  char* end = nullptr;
  unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0' || value == 0) throw InputError("GBTC_CELL_BUDGET must be a positive integer");
  return static_cast<std::size_t>(value);
}

json homology_json(const NonvanishingReport& r, int k) {
  return {{"k", k},
          {"betti", r.betti},
          {"cells", r.cells},
          {"degree", r.degree},
          {"nonzero", r.nonzero ? json(*r.nonzero) : json(nullptr)},
          {"status", r.status}};
}

// The sweep over one corpus file. Inapplicable hypotheses are recorded, not
// fatal.
json corpus_entry(const fs::path& file, std::size_t budget) {
  json entry = {{"name", file.stem().string()}};
  Graph g = load_graph(file);
  VertexClassification n;
  try {
    n = classify(g);
  } catch (const InapplicableError& e) {
    entry["error"] = e.what();
    return entry;
  }
  entry["classification"] = to_json(n);
  entry["homology"] = homology_json(nonvanishing_check(g, 2, budget), 2);

  if (n.m() < 2) {
    entry["bounds"] = nullptr;
    return entry;
  }
  BoundReport stable = stable_report(g, 2);
  entry["stable"] = {{"tc_over_r", stable.stable_value ? json(n.m()) : json(nullptr)},
                     {"k0", stable.k0 ? json(*stable.k0) : json(nullptr)},
                     {"caveats", stable.caveats},
                     {"chain", to_json(proof_chain_check(g, 2))}};
  std::vector<int> ks = {2, 4, 2 * n.m(), 2 * n.m() + n.n1};
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  json bounds = json::array();
  for (int r = 2; r <= 4; ++r)
    for (int k : ks) {
      BoundReport b = bound_report(g, r, k);
      bounds.push_back({{"r", r}, {"k", k}, {"lower", *b.lower}, {"upper", *b.upper},
                        {"choice", {b.choice.c0, b.choice.c1, b.choice.c2}}});
    }
  entry["bounds"] = bounds;
  return entry;
}

std::string cell(const json& value) {
  if (value.is_null()) return "-";
  if (value.is_array()) {
    std::string out;
    for (const auto& v : value) out += (out.empty() ? "" : ",") + v.dump();
    return "(" + out + ")";
  }
  return value.dump();
}

void print_corpus_table(const json& rows) {
  std::cout << std::left << std::setw(10) << "graph" << std::setw(4) << "n0" << std::setw(4) << "n1"
            << std::setw(4) << "n2" << std::setw(4) << "m" << std::setw(8) << "TC_r/r" << std::setw(5)
            << "k0" << "betti(k=2)\n";
  for (const auto& row : rows) {
    std::cout << std::setw(10) << row["name"].get<std::string>();
    if (row.contains("error")) {
      std::cout << row["error"].get<std::string>() << '\n';
      continue;
    }
    const auto& n = row["classification"];
    std::cout << std::setw(4) << cell(n["n0"]) << std::setw(4) << cell(n["n1"]) << std::setw(4)
              << cell(n["n2"]) << std::setw(4) << cell(n["m"]);
    if (row.contains("stable"))
      std::cout << std::setw(8) << cell(row["stable"]["tc_over_r"]) << std::setw(5)
                << cell(row["stable"]["k0"]);
    else
      std::cout << std::setw(8) << "-" << std::setw(5) << "-";
    std::cout << cell(row["homology"]["betti"]) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gbtc: sequential topological complexity bounds for configuration spaces of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string file;
  int r = 2;
  int k = 2;
  std::string vertex;
  bool dot = false;
  bool verify_homology = false;
  int max_n = 6;
  int instances = 200;
  std::uint64_t seed = 20240601;
  bool table = false;
  std::string triplets;
  std::string corpus_dir = GBTC_CORPUS_DIR;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* classify_cmd = app.add_subcommand(
      "classify",
      "Counts n0 (valence >= 4), n1 (separating trivalent) and n2 (non-separating trivalent) "
      "essential vertices of the normalized graph, and m = n0 + n1 + n2.");
  classify_cmd->add_option("file", file, "Graph JSON file")->required();

  auto* bound_cmd = app.add_subcommand(
      "bound",
      "Lower bound TC_r(B_k) >= (r-2) min(floor(k/2), m) + 2(c0+c1) + c2, maximized over "
      "c_i <= n_i with k >= 2(c0+c2) + 3c1, and the upper bound TC_r(B_k) <= r m "
      "(asserted for k >= 2m). Requires a connected graph with m >= 2 and r >= 2; r = 1 "
      "is answered only in the stable range.");
  bound_cmd->add_option("file", file, "Graph JSON file")->required();
  bound_cmd->add_option("--r", r, "Sequential order r")->required();
  bound_cmd->add_option("--k", k, "Particle count k")->required()->check(CLI::NonNegativeNumber);
  bound_cmd->add_flag("--verify-homology", verify_homology,
                      "Check nonvanishing of H_d(B_k; Q) at d = min(floor(k/2), m) on the "
                      "discretized model");

  auto* stable_cmd = app.add_subcommand(
      "stable",
      "Stability: without non-separating trivalent vertices, TC_r(B_k) = r m for all "
      "k >= k0 = 2m + n1. Also evaluates the inequality chain with every c_i maximal.");
  stable_cmd->add_option("file", file, "Graph JSON file")->required();
  stable_cmd->add_option("--r", r, "Sequential order r")->required();

  auto* lambda_cmd = app.add_subcommand(
      "lambda",
      "The finite graph Lambda_k(pi) onto which B_k of the local graph at a vertex retracts; "
      "pi identifies edges at the vertex whose far sides stay connected after deleting it. "
      "Its fundamental group is free of rank E - V + 1.");
  lambda_cmd->add_option("file", file, "Graph JSON file")->required();
  lambda_cmd->add_option("--vertex", vertex, "Essential vertex id")->required();
  lambda_cmd->add_option("--k", k, "Particle count k")->required()->check(CLI::PositiveNumber);
  lambda_cmd->add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");

  auto* verify_cmd = app.add_subcommand(
      "verify-lemmas",
      "Local calculations: adjacent commutators [g1,g2], [g2,g3] of the star braid group have "
      "disjoint conjugates; <x1 x3> and <x2 x3> have disjoint conjugates; triangle loops map "
      "to these subgroups; sink stabilization is an isomorphism for the indiscrete relation "
      "and split injective otherwise; the kernel criterion agrees with the pullback test.");
  verify_cmd->add_option("--n", max_n, "Largest star size")->check(CLI::Range(4, 9));
  verify_cmd->add_option("--instances", instances, "Random kernel-criterion instances")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_flag("--table", table, "Human-readable table instead of JSON");

  auto* homology_cmd = app.add_subcommand(
      "homology",
      "Rational Betti numbers of the unordered configuration space B_k of a sink-free graph "
      "via a discretized cubical model, and whether H_d is nonzero at d = min(floor(k/2), m). "
      "The cell budget defaults to 5000000 and is read from GBTC_CELL_BUDGET.");
  homology_cmd->add_option("file", file, "Graph JSON file")->required();
  homology_cmd->add_option("--k", k, "Particle count k")->required()->check(CLI::NonNegativeNumber);
  homology_cmd->add_option("--triplets", triplets,
                           "Write boundary matrices as (row, col, value) triplets to this file");

  auto* corpus_cmd = app.add_subcommand(
      "corpus",
      "Sweep over the bundled graphs: classification, stable value r m and k0 = 2m + n1 where "
      "it exists, bounds for r = 2..4, and Betti numbers of B_2.");
  corpus_cmd->add_option("--dir", corpus_dir, "Directory of graph JSON files")->check(CLI::ExistingDirectory);
  corpus_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  corpus_cmd->add_flag("--table", table, "Human-readable table instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*classify_cmd) {
      emit(to_json(classify(load_graph(file))));
    } else if (*bound_cmd) {
      Graph g = load_graph(file);
      BoundReport report = bound_report(g, r, k);
      if (verify_homology) report.homology = nonvanishing_check(g, k, cell_budget()).status;
      emit(to_json(report));
    } else if (*stable_cmd) {
      Graph g = load_graph(file);
      json doc = to_json(stable_report(g, r));
      doc["chain"] = to_json(proof_chain_check(g, r));
      emit(doc);
    } else if (*lambda_cmd) {
      Graph g = load_graph(file);
      LambdaGraph lambda = build_lambda(local_quotient(g, g.index(vertex)), k);
      if (dot)
        std::cout << lambda_to_dot(lambda);
      else
        emit(lambda_to_json(lambda));
    } else if (*verify_cmd) {
      auto checks = verify_local_lemmas(max_n, seed, instances);
      bool all = std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
      if (table) {
        for (const auto& c : checks)
          std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << '\n';
      } else {
        json rows = json::array();
        for (const auto& c : checks) rows.push_back(to_json(c));
        emit({{"checks", rows}, {"passed", all}});
      }
      return all ? 0 : kExitVerification;
    } else if (*homology_cmd) {
      Graph g = load_graph(file);
      std::size_t budget = cell_budget();
      NonvanishingReport report = nonvanishing_check(g, k, budget);
      if (!triplets.empty()) {
        CubicalComplex c = build_complex(sufficient_subdivision(normalize(g), k), k, budget);
        std::ofstream out(triplets);
        if (!out) throw InputError("cannot write '" + triplets + "'");
        for (int d = 1; d <= c.dimension(); ++d) out << "# degree " << d << '\n' << boundary_triplets(c, d);
      }
      emit(homology_json(report, k));
    } else if (*corpus_cmd) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::size_t budget = cell_budget();
      std::vector<json> rows(files.size());
      // Round-robin assignment; rows are written by index so output order is
      // the input order.
      std::vector<std::future<void>> workers;
      std::exception_ptr failure;
      std::mutex failure_lock;
      for (unsigned w = 0; w < jobs; ++w)
        workers.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t i = w; i < files.size(); i += jobs) {
            try {
              rows[i] = corpus_entry(files[i], budget);
            } catch (...) {
              std::lock_guard lock(failure_lock);
              if (!failure) failure = std::current_exception();
            }
          }
        }));
      for (auto& w : workers) w.get();
      if (failure) std::rethrow_exception(failure);
      json doc = rows;
      if (table)
        print_corpus_table(doc);
      else
        emit(doc);
    }
  } catch (const InapplicableError& e) {
    std::cerr << "inapplicable: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
