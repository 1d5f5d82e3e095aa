#include "structensor/pattern.h"

#include <algorithm>
#include <numeric>

#include "structensor/errors.h"

namespace structensor {

PatternDescription::PatternDescription(std::vector<int> special_indices)
    : special_(std::move(special_indices)) {
  if (special_.empty() || special_.front() != 0) {
    throw InvalidInstance("special indices must start at 0");
  }
  for (std::size_t i = 1; i < special_.size(); ++i) {
    if (special_[i] <= special_[i - 1]) {
      throw InvalidInstance("special indices must be strictly increasing");
    }
  }
}

int PatternDescription::BlockOf(int column) const {
  auto it = std::upper_bound(special_.begin(), special_.end(), column);
  return static_cast<int>(it - special_.begin()) - 1;
}

bool PatternDescription::Describes(const PatternMatrix& pattern) const {
  if (num_cols() != pattern.cols()) return false;
  for (int i = 0; i < lambda(); ++i) {
    for (int j = block_begin(i) + 1; j < block_end(i); ++j) {
      if (!pattern.ColumnsEqual(j - 1, j)) return false;
    }
  }
  return true;
}

PatternDescription Describe(const PatternMatrix& pattern) {
  std::vector<int> special{0};
  for (int j = 1; j < pattern.cols(); ++j) {
    if (!pattern.ColumnsEqual(j - 1, j)) special.push_back(j);
  }
  if (pattern.cols() > 0) special.push_back(pattern.cols());
  return PatternDescription(std::move(special));
}

IntMatrix NormalizedInstance::RestoreColumns(const IntMatrix& a) const {
  IntMatrix out(a.rows(), a.cols());
  for (int n = 0; n < a.rows(); ++n) {
    for (int j = 0; j < a.cols(); ++j) out(n, column_order[j]) = a(n, j);
  }
  return out;
}

IntVector NormalizedInstance::RestoreColumns(
    std::span<const std::int64_t> v) const {
  IntVector out(v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) out[column_order[j]] = v[j];
  return out;
}

NormalizedInstance NormalizeBlocks(const Instance& instance) {
  instance.Validate();
  NormalizedInstance out{instance, Describe(instance.pattern), {}};
  out.column_order.resize(instance.h.size());
  std::iota(out.column_order.begin(), out.column_order.end(), 0);
  const auto& d = out.description;
  for (int i = 0; i < d.lambda(); ++i) {
    std::stable_sort(out.column_order.begin() + d.block_begin(i),
                     out.column_order.begin() + d.block_end(i),
                     [&](int a, int b) { return instance.h[a] > instance.h[b]; });
  }
  for (std::size_t j = 0; j < instance.h.size(); ++j) {
    out.instance.h[j] = instance.h[out.column_order[j]];
  }
  // Columns within a block are identical, so F needs no permutation.
  return out;
}

Instance ReduceFixedOnes(const Instance& instance, const PatternMatrix& ones) {
  instance.Validate();
  if (ones.rows() != instance.num_rows() || ones.cols() != instance.num_cols()) {
    throw InvalidInstance("fixed-ones matrix has the wrong shape");
  }
  Instance out = instance;
  for (int n = 0; n < ones.rows(); ++n) {
    for (int j = 0; j < ones.cols(); ++j) {
      if (!ones(n, j)) continue;
      if (!instance.pattern(n, j)) {
        throw InvalidInstance("fixed one at (" + std::to_string(n + 1) + "," +
                              std::to_string(j + 1) + ") is a forced zero");
      }
      out.pattern.Set(n, j, false);
      --out.h[j];
      --out.r[n];
    }
  }
  for (int j = 0; j < out.num_cols(); ++j) {
    if (out.h[j] < 0) {
      throw InvalidInstance("fixed ones exceed h_" + std::to_string(j + 1));
    }
  }
  for (int n = 0; n < out.num_rows(); ++n) {
    if (out.r[n] < 0) {
      throw InvalidInstance("fixed ones exceed r_" + std::to_string(n + 1));
    }
  }
  return out;
}

PatternMatrix PatternFromServices(std::span<const ServiceSpec> specs,
                                  std::span<const int> special_times) {
  const PatternDescription times(
      std::vector<int>(special_times.begin(), special_times.end()));
  PatternMatrix f(static_cast<int>(specs.size()), times.num_cols());
  for (std::size_t n = 0; n < specs.size(); ++n) {
    const ServiceSpec& s = specs[n];
    if (s.arrival < 0 || s.arrival >= s.deadline ||
        s.deadline > times.lambda()) {
      throw InvalidInstance("load " + std::to_string(n + 1) +
                            " needs 0 <= a < d <= " +
                            std::to_string(times.lambda()));
    }
    for (int j = times.block_begin(s.arrival); j < times.block_begin(s.deadline);
         ++j) {
      f.Set(static_cast<int>(n), j, true);
    }
  }
  return f;
}

}  // namespace structensor
