#ifndef STRUCTENSOR_COMPLETION_H_
#define STRUCTENSOR_COMPLETION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "structensor/instance.h"
#include "structensor/matrix.h"
#include "structensor/pattern.h"
#include "structensor/tensor.h"

namespace structensor {

// Why a class is empty.
struct Certificate {
  enum class Kind { kSumMismatch, kNegativeElement };
  Kind kind = Kind::kNegativeElement;
  // kNegativeElement: violated index (minimal description) and its value.
  std::vector<std::int64_t> index;
  std::int64_t value = 0;
  Tails tails;
  PatternDescription description;
  // kSumMismatch
  std::int64_t supply_total = 0;
  std::int64_t demand_total = 0;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<Certificate> certificate;
};

struct CompletionResult {
  bool feasible = false;
  std::optional<IntMatrix> matrix;
  std::optional<Certificate> certificate;
};

// Gale-Ryser: an (0,1) matrix with column sums h and row sums r exists
// iff h ≺ r*, with r* padded to length |h|.
bool GaleRyserCheck(std::span<const std::int64_t> h,
                    std::span<const std::int64_t> r);

// Nonempty iff |h|_1 = |r|_1 and W(h, r, rbar, F) >= 0. Propagates
// TensorTooLarge.
FeasibilityResult ClassNonempty(const Instance& instance,
                                std::uint64_t cap = kDefaultTensorCap);

// Constructs a member of the class column by column, using the tensor
// condition to decide each cell. Rate-constrained instances are split
// into unit-rate sub-rows first. Falls back to the flow path when the
// tensor would exceed `cap`.
CompletionResult Complete(const Instance& instance,
                          std::uint64_t cap = kDefaultTensorCap);

// Completion through a maximum flow. Same contract as Complete.
CompletionResult CompleteByFlow(const Instance& instance);

struct EnumerationLimits {
  int max_dim = 6;                           // N, T <= max_dim
  std::uint64_t max_states = 2'000'000;      // Π_j (h_j + 1)
};

struct EnumerationResult {
  std::uint64_t count = 0;  // saturates at UINT64_MAX
  std::optional<IntMatrix> first;  // lexicographically first, row-major
};

// Exhaustive count of integer matrices with 0 <= A(n,j) <= rbar_n F(n,j),
// row sums r and column sums per `mode`. Throws GuardExceeded outside
// `limits`.
EnumerationResult BruteForceEnumerate(const Instance& instance,
                                      ColumnMode mode,
                                      const EnumerationLimits& limits = {});

}  // namespace structensor

#endif  // STRUCTENSOR_COMPLETION_H_
