#ifndef STRUCTENSOR_TENSOR_H_
#define STRUCTENSOR_TENSOR_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "structensor/instance.h"
#include "structensor/pattern.h"

namespace structensor {

inline constexpr std::uint64_t kDefaultTensorCap = 100'000'000;
inline constexpr std::uint64_t kNoTensorCap =
    std::numeric_limits<std::uint64_t>::max();

// Rows that share a block-incidence set, a demand and a ceiling.
struct DemandGroup {
  std::vector<int> blocks;  // blocks i with F(n, T_i) = 1, ascending
  std::int64_t demand = 0;
  std::int64_t ceiling = 1;
  std::int64_t count = 1;
};

// Block-level view of an instance: per-block supplies and grouped rows.
// This is everything the structure tensor depends on.
struct BlockForm {
  std::vector<IntVector> supply;
  std::vector<DemandGroup> demand;
};

BlockForm ToBlockForm(const Instance& instance,
                      const PatternDescription& description);

struct Tails {
  std::int64_t supply = 0;
  std::int64_t demand = 0;
};

struct TensorMinimum {
  std::int64_t value = 0;
  std::vector<std::int64_t> index;
};

// Evaluates elements of W(h, r, rbar, F):
//
//   W_k = Σ_i (sum of the smallest width_i - k_i supplies of block i)
//       - Σ_n [r_n - rbar_n Σ_i k_i F(n, T_i)]^+
//
// with 0 <= k_i <= width_i. Each block's supply is sorted internally, so
// instances need not be normalized first. Rows are grouped by their
// block-incidence set and each set gets a precomputed table of its total
// positive residual demand as a function of Σ_{i in set} k_i.
class TensorEvaluator {
 public:
  // Uses the minimal description of the instance's pattern. Throws
  // TensorTooLarge when the element count exceeds `cap`.
  explicit TensorEvaluator(const Instance& instance,
                           std::uint64_t cap = kDefaultTensorCap);
  TensorEvaluator(const Instance& instance,
                  const PatternDescription& description,
                  std::uint64_t cap = kDefaultTensorCap);
  explicit TensorEvaluator(const BlockForm& form,
                           std::uint64_t cap = kDefaultTensorCap);

  int lambda() const { return static_cast<int>(dims_.size()); }
  // dims()[i] = width_i + 1
  const std::vector<std::int64_t>& dims() const { return dims_; }
  std::uint64_t element_count() const { return element_count_; }

  // Throws std::out_of_range on a malformed index.
  Tails TailsAt(std::span<const std::int64_t> k) const;
  std::int64_t ElementAt(std::span<const std::int64_t> k) const;

  // Minimum over all elements; ties go to the lexicographically smallest
  // index.
  TensorMinimum Minimum() const;
  // Stops at the first negative element.
  bool IsNonnegative() const;
  // max(0, -min W)
  std::int64_t Gap() const { return std::max<std::int64_t>(0, -Minimum().value); }

  // Replaces the supply of one block; only that block's tails are
  // recomputed.
  void SetBlockSupply(int block, std::span<const std::int64_t> values);

  // Visits every element in lexicographic index order (last index
  // fastest). The visitor returns false to stop early.
  template <typename Visitor>
  void ForEach(Visitor&& visit) const;

 private:
  struct DemandTable {
    std::vector<int> blocks;
    std::vector<std::int64_t> residual;  // indexed by Σ_{i in blocks} k_i
  };

  void Init(const BlockForm& form, std::uint64_t cap);
  void CheckIndex(std::span<const std::int64_t> k) const;
  std::int64_t SupplyTail(std::span<const std::int64_t> k) const;
  std::int64_t DemandTail(std::span<const std::int64_t> k) const;

  std::vector<std::int64_t> dims_;
  std::uint64_t element_count_ = 1;
  std::vector<IntVector> supply_suffix_;  // [i][k]: tail sum of block i
  std::vector<DemandTable> tables_;
  std::vector<std::vector<int>> block_tables_;  // tables touching block i
};

// Dense tensor in row-major order (k_1 slowest).
struct StructureTensor {
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> values;
  std::int64_t min_value = 0;
  std::vector<std::int64_t> min_index;

  std::int64_t At(std::span<const std::int64_t> k) const;
};

// Single element / tails of W for the minimal description of F.
std::int64_t TensorElement(const Instance& instance,
                           std::span<const std::int64_t> k);
Tails TensorTails(const Instance& instance, std::span<const std::int64_t> k);

// Throws TensorTooLarge when the element count exceeds `cap`.
StructureTensor BuildTensor(const Instance& instance,
                            std::uint64_t cap = kDefaultTensorCap);
TensorMinimum MinimumElement(const Instance& instance,
                             std::uint64_t cap = kDefaultTensorCap);

inline bool IsNonnegative(const StructureTensor& w) { return w.min_value >= 0; }

template <typename Visitor>
void TensorEvaluator::ForEach(Visitor&& visit) const {
  const int order = lambda();
  std::vector<std::int64_t> k(static_cast<std::size_t>(order), 0);
  std::vector<std::int64_t> sums(tables_.size(), 0);
  std::int64_t supply = 0;
  for (int i = 0; i < order; ++i) supply += supply_suffix_[i][0];
  while (true) {
    std::int64_t demand = 0;
    for (std::size_t t = 0; t < tables_.size(); ++t) {
      demand += tables_[t].residual[static_cast<std::size_t>(sums[t])];
    }
    if (!visit(std::span<const std::int64_t>(k), supply - demand)) return;
    // Odometer step; keeps the supply tail and per-table sums current.
    int i = order - 1;
    for (; i >= 0; --i) {
      const auto& suffix = supply_suffix_[i];
      const std::int64_t old_k = k[i];
      const std::int64_t new_k = old_k + 1 < dims_[i] ? old_k + 1 : 0;
      supply += suffix[new_k] - suffix[old_k];
      k[i] = new_k;
      for (int t : block_tables_[i]) sums[t] += new_k - old_k;
      if (new_k != 0) break;
    }
    if (i < 0) return;
  }
}

}  // namespace structensor

#endif  // STRUCTENSOR_TENSOR_H_
