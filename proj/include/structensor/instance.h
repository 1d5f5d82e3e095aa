#ifndef STRUCTENSOR_INSTANCE_H_
#define STRUCTENSOR_INSTANCE_H_

#include <cstdint>
#include <string>

#include "structensor/majorization.h"
#include "structensor/matrix.h"

namespace structensor {

// A complete problem statement: column sums h (length T), row sums r
// (length N), pattern F (N x T) and optional per-row ceilings. Empty
// `ceilings` means every row is capped at one unit per column, i.e. the
// (0,1) case.
struct Instance {
  IntVector h;
  IntVector r;
  PatternMatrix pattern;
  IntVector ceilings;

  int num_rows() const { return static_cast<int>(r.size()); }
  int num_cols() const { return static_cast<int>(h.size()); }
  bool rate_constrained() const { return !ceilings.empty(); }
  std::int64_t ceiling(int n) const {
    return ceilings.empty() ? 1 : ceilings[static_cast<std::size_t>(n)];
  }

  // Σ_n ceiling(n) F(n,j): the most column j can ever deliver.
  std::int64_t ColumnCapacity(int j) const;

  // Throws InvalidInstance on inconsistent dimensions, negative sums or
  // ceilings below one.
  void Validate() const;

  bool operator==(const Instance&) const = default;
};

// Which equality the column sums must satisfy.
enum class ColumnMode {
  kExact,  // column sums equal h
  kUpper,  // column sums bounded by h (adequacy)
};

// Checks entries in [0, ceiling(n) F(n,j)], row sums equal to r and
// column sums per `mode`. Returns an empty string when valid, otherwise a
// short description of the first violation (1-based indices).
std::string ValidateMatrix(const Instance& instance, const IntMatrix& a,
                           ColumnMode mode);

}  // namespace structensor

#endif  // STRUCTENSOR_INSTANCE_H_
