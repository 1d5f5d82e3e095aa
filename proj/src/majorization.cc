#include "structensor/majorization.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "structensor/errors.h"

namespace structensor {

namespace {

// Both vectors sorted non-increasing and zero-padded to a common length.
std::pair<IntVector, IntVector> Aligned(std::span<const std::int64_t> x,
                                        std::span<const std::int64_t> y) {
  IntVector a = SortedDescending(x);
  IntVector b = SortedDescending(y);
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
  return {std::move(a), std::move(b)};
}

}  // namespace

std::int64_t Sum(std::span<const std::int64_t> x) {
  return std::accumulate(x.begin(), x.end(), std::int64_t{0});
}

IntVector SortedDescending(std::span<const std::int64_t> x) {
  IntVector v(x.begin(), x.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

IntVector Conjugate(std::span<const std::int64_t> x, std::size_t min_len) {
  std::int64_t top = 0;
  for (std::int64_t v : x) top = std::max(top, v);
  const std::size_t len = std::max(static_cast<std::size_t>(top), min_len);
  IntVector out(len, 0);
  // Histogram then suffix counts: out[j-1] = #{n : x_n >= j}.
  IntVector at_least(len + 2, 0);
  for (std::int64_t v : x) {
    if (v > 0) ++at_least[static_cast<std::size_t>(v)];
  }
  std::int64_t running = 0;
  for (std::size_t j = len; j >= 1; --j) {
    running += at_least[j];
    out[j - 1] = running;
  }
  return out;
}

bool IsWeaklySubmajorized(std::span<const std::int64_t> x,
                          std::span<const std::int64_t> y) {
  auto [a, b] = Aligned(x, y);
  std::int64_t sa = 0;
  std::int64_t sb = 0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    sa += a[n];
    sb += b[n];
    if (sa > sb) return false;
  }
  return true;
}

bool IsWeaklySupermajorized(std::span<const std::int64_t> x,
                            std::span<const std::int64_t> y) {
  auto [a, b] = Aligned(x, y);
  std::int64_t sa = 0;
  std::int64_t sb = 0;
  for (std::size_t n = a.size(); n-- > 0;) {
    sa += a[n];
    sb += b[n];
    if (sa < sb) return false;
  }
  return true;
}

bool IsMajorized(std::span<const std::int64_t> x,
                 std::span<const std::int64_t> y) {
  return Sum(x) == Sum(y) && IsWeaklySubmajorized(x, y);
}

std::int64_t FillVolume(std::span<const std::int64_t> x, std::int64_t level) {
  std::int64_t total = 0;
  for (std::int64_t v : x) total += PositivePart(level - v);
  return total;
}

std::int64_t FillLevelAtLeast(std::span<const std::int64_t> x,
                              std::int64_t amount) {
  if (amount <= 0) return 0;
  if (x.empty()) throw InvalidInstance("cannot fill an empty vector");
  std::int64_t lo = 0;
  std::int64_t hi = *std::max_element(x.begin(), x.end()) + amount;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (FillVolume(x, mid) >= amount) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::int64_t FillLevelAtMost(std::span<const std::int64_t> x,
                             std::int64_t amount) {
  if (x.empty()) throw InvalidInstance("cannot fill an empty vector");
  std::int64_t lo = 0;
  std::int64_t hi = *std::max_element(x.begin(), x.end()) + amount + 1;
  // FillVolume(lo) <= amount always holds for lo = 0.
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (FillVolume(x, mid) <= amount) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

IntVector ValleyFill(std::span<const std::int64_t> h_hat, std::int64_t tau) {
  if (tau < 0) throw InvalidInstance("valley fill amount must be nonnegative");
  if (!std::is_sorted(h_hat.begin(), h_hat.end(), std::greater<>())) {
    throw InvalidInstance("valley fill expects a non-increasing vector");
  }
  IntVector out(h_hat.begin(), h_hat.end());
  if (tau == 0) return out;
  const std::int64_t level = FillLevelAtLeast(h_hat, tau);
  std::int64_t surplus = FillVolume(h_hat, level) - tau;
  for (std::int64_t& v : out) v = std::max(v, level);
  for (std::size_t j = out.size(); j-- > 0 && surplus > 0;) {
    --out[j];
    --surplus;
  }
  return out;
}

}  // namespace structensor
