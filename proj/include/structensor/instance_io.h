#ifndef STRUCTENSOR_INSTANCE_IO_H_
#define STRUCTENSOR_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "structensor/instance.h"
#include "structensor/matrix.h"
#include "structensor/pattern.h"

namespace structensor {

// JSON instance document. Either
//   {"h": [...], "r": [...], "pattern": [[0,1,...], ...], "rbar": [...]?}
// or
//   {"h": [...], "special_times": [...],
//    "loads": [{"r": .., "a": .., "d": .., "rbar": ..?}, ...]}
// plus an optional "ones": [[row, col], ...] of 1-based fixed ones.
struct InstanceFile {
  IntVector h;
  IntVector r;  // pattern form only
  std::optional<PatternMatrix> pattern;
  IntVector ceilings;  // pattern form only; empty when absent
  std::vector<int> special_times;
  std::vector<ServiceSpec> loads;
  std::vector<std::pair<int, int>> ones;  // 1-based

  bool has_loads() const { return !pattern.has_value(); }

  // The instance as written, fixed ones still counted in h and r.
  Instance ToInstance() const;
  PatternMatrix OnesMatrix() const;
  // ToInstance() with the fixed ones absorbed.
  Instance Reduced() const;

  bool operator==(const InstanceFile&) const = default;
};

// Throws InvalidInstance on malformed documents.
InstanceFile ParseInstanceJson(std::string_view text);
InstanceFile LoadInstanceFile(const std::string& path);
std::string SerializeInstanceJson(const InstanceFile& file);

// N lines of T comma-separated integers.
std::string MatrixToCsv(const IntMatrix& a);
IntMatrix MatrixFromCsv(std::string_view text);

}  // namespace structensor

#endif  // STRUCTENSOR_INSTANCE_IO_H_
