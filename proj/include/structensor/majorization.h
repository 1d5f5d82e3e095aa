#ifndef STRUCTENSOR_MAJORIZATION_H_
#define STRUCTENSOR_MAJORIZATION_H_

#include <cstdint>
#include <span>
#include <vector>

namespace structensor {

// Nonnegative integer vector: supplies, demands, purchases.
using IntVector = std::vector<std::int64_t>;

// [a]^+
inline std::int64_t PositivePart(std::int64_t a) { return a > 0 ? a : 0; }

std::int64_t Sum(std::span<const std::int64_t> x);

// Non-increasing rearrangement of x.
IntVector SortedDescending(std::span<const std::int64_t> x);

// Partition conjugate: result[j-1] = #{n : x_n >= j} for
// j = 1..max(max(x), min_len). Entries of x must be nonnegative.
IntVector Conjugate(std::span<const std::int64_t> x, std::size_t min_len);

// The three predicates below pad the shorter argument with zeros and
// compare non-increasing rearrangements; inputs need not be sorted.

// x ≺_w y: every leading partial sum of x is at most that of y.
bool IsWeaklySubmajorized(std::span<const std::int64_t> x,
                          std::span<const std::int64_t> y);

// x ≺^w y: every trailing partial sum of x is at least that of y.
bool IsWeaklySupermajorized(std::span<const std::int64_t> x,
                            std::span<const std::int64_t> y);

// x ≺ y: x ≺_w y and equal totals.
bool IsMajorized(std::span<const std::int64_t> x,
                 std::span<const std::int64_t> y);

// Smallest level v with Σ_j [v - x_j]^+ >= amount.
std::int64_t FillLevelAtLeast(std::span<const std::int64_t> x,
                              std::int64_t amount);

// Largest level v with Σ_j [v - x_j]^+ <= amount. x must be nonempty.
std::int64_t FillLevelAtMost(std::span<const std::int64_t> x,
                             std::int64_t amount);

// Σ_j [level - x_j]^+
std::int64_t FillVolume(std::span<const std::int64_t> x, std::int64_t level);

// Adds tau units to a non-increasing vector so that the result is
// majorized by sorted(h_hat + b) for every b >= 0 with |b|_1 = tau.
// Raises everything below the fill level to it, then takes the surplus
// back one unit at a time from the last raised entries.
// Throws InvalidInstance when h_hat is not non-increasing or tau < 0.
IntVector ValleyFill(std::span<const std::int64_t> h_hat, std::int64_t tau);

}  // namespace structensor

#endif  // STRUCTENSOR_MAJORIZATION_H_
