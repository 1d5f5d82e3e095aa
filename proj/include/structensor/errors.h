#ifndef STRUCTENSOR_ERRORS_H_
#define STRUCTENSOR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace structensor {

// Malformed input: inconsistent dimensions, negative sums, non-binary
// pattern entries, unsorted input where sorted input is required.
class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(const std::string& what)
      : std::invalid_argument(what) {}
};

// The dense structure tensor would exceed the configured element cap.
class TensorTooLarge : public std::runtime_error {
 public:
  explicit TensorTooLarge(const std::string& what)
      : std::runtime_error(what) {}
};

// Some load cannot be served even with unlimited supply.
class InstanceUnsatisfiable : public std::runtime_error {
 public:
  explicit InstanceUnsatisfiable(const std::string& what)
      : std::runtime_error(what) {}
};

// Brute-force enumeration refused because the search space is too big.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace structensor

#endif  // STRUCTENSOR_ERRORS_H_
