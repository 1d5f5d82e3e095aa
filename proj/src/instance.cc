#include "structensor/instance.h"

#include "structensor/errors.h"

namespace structensor {

std::int64_t Instance::ColumnCapacity(int j) const {
  std::int64_t c = 0;
  for (int n = 0; n < num_rows(); ++n) {
    if (pattern(n, j)) c += ceiling(n);
  }
  return c;
}

void Instance::Validate() const {
  if (pattern.rows() != num_rows() || pattern.cols() != num_cols()) {
    throw InvalidInstance("pattern is " + std::to_string(pattern.rows()) +
                          "x" + std::to_string(pattern.cols()) +
                          " but sums describe " + std::to_string(num_rows()) +
                          "x" + std::to_string(num_cols()));
  }
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] < 0) {
      throw InvalidInstance("h_" + std::to_string(j + 1) + " is negative");
    }
  }
  for (std::size_t n = 0; n < r.size(); ++n) {
    if (r[n] < 0) {
      throw InvalidInstance("r_" + std::to_string(n + 1) + " is negative");
    }
  }
  if (!ceilings.empty()) {
    if (ceilings.size() != r.size()) {
      throw InvalidInstance("ceiling vector length differs from row count");
    }
    for (std::size_t n = 0; n < ceilings.size(); ++n) {
      if (ceilings[n] < 1) {
        throw InvalidInstance("ceiling of row " + std::to_string(n + 1) +
                              " must be at least 1");
      }
    }
  }
}

std::string ValidateMatrix(const Instance& instance, const IntMatrix& a,
                           ColumnMode mode) {
  const int rows = instance.num_rows();
  const int cols = instance.num_cols();
  if (a.rows() != rows || a.cols() != cols) return "dimension mismatch";
  for (int n = 0; n < rows; ++n) {
    for (int j = 0; j < cols; ++j) {
      const std::int64_t bound =
          instance.pattern(n, j) ? instance.ceiling(n) : 0;
      if (a(n, j) < 0 || a(n, j) > bound) {
        return "entry (" + std::to_string(n + 1) + "," +
               std::to_string(j + 1) + ") = " + std::to_string(a(n, j)) +
               " outside [0," + std::to_string(bound) + "]";
      }
    }
  }
  for (int n = 0; n < rows; ++n) {
    if (a.RowSum(n) != instance.r[n]) {
      return "row " + std::to_string(n + 1) + " sums to " +
             std::to_string(a.RowSum(n)) + ", expected " +
             std::to_string(instance.r[n]);
    }
  }
  for (int j = 0; j < cols; ++j) {
    const std::int64_t s = a.ColumnSum(j);
    const bool ok = mode == ColumnMode::kExact ? s == instance.h[j]
                                               : s <= instance.h[j];
    if (!ok) {
      return "column " + std::to_string(j + 1) + " sums to " +
             std::to_string(s) + ", bound " + std::to_string(instance.h[j]);
    }
  }
  return {};
}

}  // namespace structensor
