#include "structensor/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "structensor/completion.h"
#include "structensor/errors.h"

namespace structensor {

Instance GenerateBlockFamily(int rows, int cols, std::mt19937_64& rng) {
  if (cols <= 0 || cols % 3 != 0) {
    throw InvalidInstance("bench column count must be a positive multiple of 3");
  }
  if (rows < 0) throw InvalidInstance("bench row count must be nonnegative");
  const int third = cols / 3;
  // [begin, end) of the ones in each row kind.
  const int windows[3][2] = {{0, 2 * third}, {0, cols}, {third, 2 * third}};

  Instance instance;
  instance.h.assign(static_cast<std::size_t>(cols), 0);
  instance.r.assign(static_cast<std::size_t>(rows), 0);
  instance.pattern = PatternMatrix(rows, cols, false);
  std::vector<int> slots;
  for (int n = 0; n < rows; ++n) {
    const int begin = windows[n % 3][0];
    const int end = windows[n % 3][1];
    slots.clear();
    for (int j = begin; j < end; ++j) {
      instance.pattern.Set(n, j, true);
      slots.push_back(j);
    }
    std::uniform_int_distribution<int> duration(0, end - begin);
    const int r = duration(rng);
    instance.r[n] = r;
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int m = 0; m < r; ++m) ++instance.h[slots[m]];
  }
  return instance;
}

namespace {

BenchRow TimeMethod(const Instance& instance, const std::string& method,
                    int repetitions,
                    const std::function<CompletionResult()>& run) {
  BenchRow row;
  row.rows = instance.num_rows();
  row.cols = instance.num_cols();
  row.method = method;
  row.valid = true;
  double total = 0;
  const int reps = std::max(1, repetitions);
  for (int rep = 0; rep < reps; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    const CompletionResult result = run();
    total += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.feasible = result.feasible;
    row.valid = row.valid && result.matrix.has_value() &&
                ValidateMatrix(instance, *result.matrix, ColumnMode::kExact).empty();
  }
  row.seconds = total / reps;
  return row;
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  std::vector<BenchRow> out;
  for (int rows : config.rows) {
    if (rows == 0) continue;
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(rows),
                      static_cast<std::uint64_t>(config.cols)};
    std::mt19937_64 rng(seq);
    const Instance instance = GenerateBlockFamily(rows, config.cols, rng);
    out.push_back(TimeMethod(instance, "tensor", config.repetitions,
                             [&] { return Complete(instance, config.tensor_cap); }));
    out.push_back(TimeMethod(instance, "flow", config.repetitions,
                             [&] { return CompleteByFlow(instance); }));
  }
  return out;
}

std::string BenchCsvHeader() { return "N,T,method,seconds,feasible,valid"; }

std::string BenchCsvLine(const BenchRow& row) {
  char seconds[32];
  std::snprintf(seconds, sizeof(seconds), "%.6f", row.seconds);
  return std::to_string(row.rows) + "," + std::to_string(row.cols) + "," +
         row.method + "," + seconds + "," + (row.feasible ? "1" : "0") + "," +
         (row.valid ? "1" : "0");
}

}  // namespace structensor
