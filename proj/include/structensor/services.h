#ifndef STRUCTENSOR_SERVICES_H_
#define STRUCTENSOR_SERVICES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "structensor/instance.h"
#include "structensor/pattern.h"
#include "structensor/tensor.h"

namespace structensor {

// Supply h is adequate for the demand when a matrix with row sums r and
// column sums at most h exists, i.e. W(h, r, rbar, F) >= 0.
bool IsAdequate(const Instance& instance,
                std::uint64_t cap = kDefaultTensorCap);

// Minimum total extra supply that makes h adequate: max(0, -min W).
std::int64_t AdequacyGap(const Instance& instance,
                         std::uint64_t cap = kDefaultTensorCap);

// Throws InstanceUnsatisfiable when some row asks for more than
// rbar_n |F(n,:)|_1.
void CheckLoadsSatisfiable(const Instance& instance);

struct PurchaseProfile {
  IntVector p;
  std::int64_t total() const { return Sum(p); }
};

// Column sweep: each column absorbs as much of the remaining gap as the
// tensor allows, capped at its capacity Σ_n rbar_n F(n,j).
PurchaseProfile MinPurchaseColumnSweep(const Instance& instance,
                                       std::uint64_t cap = kDefaultTensorCap);

// Which units to shave off or add when a block level leaves a remainder.
struct TieBreak {
  std::optional<std::uint64_t> seed;  // unset: highest column first
};

// Block sweep with valley filling inside each block of the minimal
// description.
PurchaseProfile MinPurchaseValleyFill(const Instance& instance,
                                      TieBreak tie_break = {},
                                      std::uint64_t cap = kDefaultTensorCap);

struct SubLoad {
  std::int64_t duration = 0;
  int arrival = 0;
  int deadline = 1;
  std::int64_t multiplicity = 1;
  int origin = 0;  // index of the load it came from
};

// Euclidean split r = q rbar + p: p unit-rate sub-loads of duration q+1
// and rbar - p of duration q. Zero-duration sub-loads are dropped.
std::vector<SubLoad> DecomposeLoads(std::span<const ServiceSpec> specs);

// The same split applied to the rows of a general instance. `origin[m]`
// is the row of `instance` that sub-row m came from.
struct DecomposedInstance {
  Instance instance;
  std::vector<int> origin;
};
DecomposedInstance DecomposeInstance(const Instance& instance);

}  // namespace structensor

#endif  // STRUCTENSOR_SERVICES_H_
