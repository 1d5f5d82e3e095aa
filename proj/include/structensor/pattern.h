#ifndef STRUCTENSOR_PATTERN_H_
#define STRUCTENSOR_PATTERN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "structensor/instance.h"
#include "structensor/matrix.h"

namespace structensor {

// Special column indices 0 = T_0 < T_1 < ... < T_lambda = T. Block i
// (0-based) covers the 0-based columns [T_i, T_{i+1}).
class PatternDescription {
 public:
  PatternDescription() = default;
  // Throws InvalidInstance unless the indices are strictly increasing
  // and start at 0. {0} is the empty description of a zero-column F.
  explicit PatternDescription(std::vector<int> special_indices);

  const std::vector<int>& special_indices() const { return special_; }
  int lambda() const { return static_cast<int>(special_.size()) - 1; }
  int num_cols() const { return special_.back(); }
  int block_begin(int i) const { return special_[i]; }
  int block_end(int i) const { return special_[i + 1]; }
  int block_width(int i) const { return special_[i + 1] - special_[i]; }
  int BlockOf(int column) const;

  // True when every block of F consists of identical columns.
  bool Describes(const PatternMatrix& pattern) const;

  bool operator==(const PatternDescription&) const = default;

 private:
  std::vector<int> special_{0};
};

// A differentiated service request: `duration` units between special
// times T_arrival and T_deadline at most `ceiling` units per slot.
struct ServiceSpec {
  std::int64_t duration = 0;
  int arrival = 0;
  int deadline = 1;
  std::int64_t ceiling = 1;

  bool operator==(const ServiceSpec&) const = default;
};

// Minimal description: a new block starts exactly where two consecutive
// columns differ. A pattern with zero columns yields {0}, lambda = 0.
PatternDescription Describe(const PatternMatrix& pattern);

struct NormalizedInstance {
  Instance instance;
  PatternDescription description;
  // column_order[j] is the original column placed at position j.
  std::vector<int> column_order;

  // Maps a matrix over normalized columns back to the original order.
  IntMatrix RestoreColumns(const IntMatrix& a) const;
  IntVector RestoreColumns(std::span<const std::int64_t> v) const;
};

// Stable sort of h into non-increasing order inside each block of the
// minimal description. F is unchanged since block columns are identical.
NormalizedInstance NormalizeBlocks(const Instance& instance);

// Absorbs fixed ones: zeroes them in F and lowers the affected row and
// column sums. Throws InvalidInstance when a fixed one sits on a forced
// zero or a sum would go negative.
Instance ReduceFixedOnes(const Instance& instance, const PatternMatrix& ones);

// Row n has ones exactly in columns T_{a_n} .. T_{d_n}-1 (0-based).
// Throws InvalidInstance on out-of-range block indices.
PatternMatrix PatternFromServices(std::span<const ServiceSpec> specs,
                                  std::span<const int> special_times);

}  // namespace structensor

#endif  // STRUCTENSOR_PATTERN_H_
