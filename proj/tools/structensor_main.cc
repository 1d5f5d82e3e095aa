#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "structensor/bench.h"
#include "structensor/completion.h"
#include "structensor/errors.h"
#include "structensor/flow.h"
#include "structensor/instance_io.h"
#include "structensor/services.h"
#include "structensor/tensor.h"

namespace {

using namespace structensor;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string Join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void PrintCertificate(const Certificate& c, const std::string& verdict) {
  if (c.kind == Certificate::Kind::kSumMismatch) {
    std::cout << verdict << " sum_h=" << c.supply_total
              << " sum_r=" << c.demand_total << "\n";
    return;
  }
  if (c.index.empty()) {
    std::cout << verdict << " deficit=" << -c.value << "\n";
    return;
  }
  std::cout << verdict << " k=(" << Join(c.index) << ") supply_tail="
            << c.tails.supply << " demand_tail=" << c.tails.demand
            << " value=" << c.value << "\n";
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInstance("cannot write " + path);
  out << text;
}

int RunCheck(const std::string& path, bool exact, std::uint64_t cap,
             const std::string& dimacs) {
  const Instance instance = LoadInstanceFile(path).Reduced();
  if (!dimacs.empty()) WriteText(dimacs, BuildNetwork(instance).ToDimacs());
  const std::string yes = exact ? "FEASIBLE" : "ADEQUATE";
  const std::string no = exact ? "INFEASIBLE" : "INADEQUATE";
  try {
    if (exact) {
      const FeasibilityResult result = ClassNonempty(instance, cap);
      if (result.feasible) {
        std::cout << yes << "\n";
        return kOk;
      }
      PrintCertificate(*result.certificate, no);
      return kNegative;
    }
    const PatternDescription description = Describe(instance.pattern);
    const TensorEvaluator eval(instance, description, cap);
    const TensorMinimum min = eval.Minimum();
    if (min.value >= 0) {
      std::cout << yes << "\n";
      return kOk;
    }
    Certificate c;
    c.index = min.index;
    c.value = min.value;
    c.tails = eval.TailsAt(min.index);
    PrintCertificate(c, no);
    return kNegative;
  } catch (const TensorTooLarge&) {
    const std::int64_t flow = MaxFlow(BuildNetwork(instance)).value;
    const std::int64_t demand = Sum(instance.r);
    const bool ok = flow == demand && (!exact || Sum(instance.h) == demand);
    std::cout << (ok ? yes : no) << " (flow) max_flow=" << flow
              << " sum_r=" << demand << "\n";
    return ok ? kOk : kNegative;
  }
}

int RunComplete(const std::string& path, std::uint64_t cap, const std::string& out) {
  const InstanceFile file = LoadInstanceFile(path);
  const Instance reduced = file.Reduced();
  const CompletionResult result = Complete(reduced, cap);
  if (!result.feasible) {
    PrintCertificate(*result.certificate, "INFEASIBLE");
    return kNegative;
  }
  IntMatrix a = *result.matrix;
  const PatternMatrix ones = file.OnesMatrix();
  for (int n = 0; n < a.rows(); ++n) {
    for (int j = 0; j < a.cols(); ++j) a(n, j) += ones(n, j) ? 1 : 0;
  }
  const std::string csv = MatrixToCsv(a);
  if (out.empty()) {
    std::cout << csv;
  } else {
    WriteText(out, csv);
  }
  return kOk;
}

int RunPurchase(const std::string& path, int alg, std::optional<std::uint64_t> seed,
                std::uint64_t cap) {
  const Instance instance = LoadInstanceFile(path).Reduced();
  PurchaseProfile profile;
  try {
    profile = alg == 1 ? MinPurchaseColumnSweep(instance, cap)
                       : MinPurchaseValleyFill(instance, TieBreak{seed}, cap);
  } catch (const InstanceUnsatisfiable& e) {
    std::cout << "UNSATISFIABLE " << e.what() << "\n";
    return kNegative;
  }
  std::cout << "p=[" << Join(profile.p) << "]\n";
  std::cout << "total=" << profile.total() << "\n";
  return kOk;
}

int RunDecompose(const std::string& path) {
  const InstanceFile file = LoadInstanceFile(path);
  std::cout << "origin,duration,multiplicity,a,d\n";
  if (file.has_loads()) {
    for (const SubLoad& s : DecomposeLoads(file.loads)) {
      std::cout << s.origin + 1 << "," << s.duration << "," << s.multiplicity
                << "," << s.arrival << "," << s.deadline << "\n";
    }
    return kOk;
  }
  const DecomposedInstance unit = DecomposeInstance(file.ToInstance());
  for (std::size_t m = 0; m < unit.origin.size(); ++m) {
    std::cout << unit.origin[m] + 1 << "," << unit.instance.r[m] << ",1,,\n";
  }
  return kOk;
}

int RunOracle(const std::string& path, bool exact) {
  const Instance instance = LoadInstanceFile(path).Reduced();
  try {
    const EnumerationResult result = BruteForceEnumerate(
        instance, exact ? ColumnMode::kExact : ColumnMode::kUpper);
    std::cout << "count=" << result.count << "\n";
    if (result.first) std::cout << MatrixToCsv(*result.first);
    return result.count > 0 ? kOk : kNegative;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int RunBenchCommand(const BenchConfig& config, const std::string& csv) {
  std::ostringstream text;
  text << BenchCsvHeader() << "\n";
  for (const BenchRow& row : RunBench(config)) text << BenchCsvLine(row) << "\n";
  if (csv.empty()) {
    std::cout << text.str();
  } else {
    WriteText(csv, text.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure-tensor feasibility, completion and purchase planning"};
  app.require_subcommand(1);

  std::string file;
  bool exact = false;
  std::uint64_t cap = kDefaultTensorCap;
  std::string dimacs;
  std::string out;
  int alg = 1;
  std::optional<std::uint64_t> seed;
  BenchConfig bench;
  std::string csv;

  auto* check = app.add_subcommand("check", "Test adequacy (or exact feasibility)");
  check->add_option("file", file, "Instance JSON")->required();
  check->add_flag("--exact", exact, "Column sums must be met exactly");
  check->add_option("--tensor-cap", cap, "Largest tensor to evaluate");
  check->add_option("--dimacs", dimacs, "Also write the flow network in DIMACS form");

  auto* complete = app.add_subcommand("complete", "Construct a member of the class");
  complete->add_option("file", file, "Instance JSON")->required();
  complete->add_option("--out", out, "Write the matrix CSV here instead of stdout");
  complete->add_option("--tensor-cap", cap, "Largest tensor to evaluate");

  auto* purchase = app.add_subcommand("purchase", "Minimum purchase profile");
  purchase->add_option("file", file, "Instance JSON")->required();
  purchase->add_option("--alg", alg, "1: column sweep, 2: valley fill")
      ->check(CLI::IsMember({1, 2}));
  purchase->add_option("--seed", seed, "Random tie-breaking for --alg 2");
  purchase->add_option("--tensor-cap", cap, "Largest tensor to evaluate");

  auto* decompose = app.add_subcommand("decompose", "Split loads into unit-rate sub-loads");
  decompose->add_option("file", file, "Instance JSON")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force count of the class");
  oracle->add_option("file", file, "Instance JSON")->required();
  oracle->add_flag("--exact", exact, "Column sums must be met exactly");

  auto* bench_cmd = app.add_subcommand("bench", "Time tensor and flow completion");
  bench_cmd->add_option("--rows", bench.rows, "Row counts")->delimiter(',');
  bench_cmd->add_option("--cols", bench.cols, "Column count (multiple of 3)");
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per instance");
  bench_cmd->add_option("--csv", csv, "Write the CSV here instead of stdout");
  bench_cmd->add_option("--tensor-cap", bench.tensor_cap, "Largest tensor to evaluate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return RunCheck(file, exact, cap, dimacs);
    if (*complete) return RunComplete(file, cap, out);
    if (*purchase) return RunPurchase(file, alg, seed, cap);
    if (*decompose) return RunDecompose(file);
    if (*oracle) return RunOracle(file, exact);
    if (*bench_cmd) return RunBenchCommand(bench, csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
