#ifndef STRUCTENSOR_BENCH_H_
#define STRUCTENSOR_BENCH_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "structensor/instance.h"
#include "structensor/tensor.h"

namespace structensor {

// Three-block family with three row kinds in equal numbers (rows are
// dealt round-robin): ones in the first two thirds of the columns, ones
// everywhere, ones in the middle third. r_n is uniform over 0..|F(n,:)|
// and the ones of each row are scattered uniformly inside its window; h
// is the resulting column-sum vector, so the class is never empty.
// `cols` must be a positive multiple of three.
Instance GenerateBlockFamily(int rows, int cols, std::mt19937_64& rng);

struct BenchConfig {
  std::vector<int> rows{30, 300, 3000};
  int cols = 24;
  std::uint64_t seed = 1;
  int repetitions = 1;
  std::uint64_t tensor_cap = kDefaultTensorCap;
};

struct BenchRow {
  int rows = 0;
  int cols = 0;
  std::string method;  // "tensor" or "flow"
  double seconds = 0;  // mean over repetitions
  bool feasible = false;
  bool valid = false;  // produced matrix passed ValidateMatrix
};

// One instance per entry of config.rows (zero entries are skipped);
// each is completed by the tensor path and by the flow path.
std::vector<BenchRow> RunBench(const BenchConfig& config);

std::string BenchCsvHeader();
std::string BenchCsvLine(const BenchRow& row);

}  // namespace structensor

#endif  // STRUCTENSOR_BENCH_H_
