#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace resilab {

// Argument errors are reported as std::invalid_argument throughout.

/// A bounded procedure ran out of attempts (e.g. pairing-model restarts).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative eigensolver failed to converge; carries its best estimate.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double best_estimate, double residual)
      : std::runtime_error(what), best_estimate_(best_estimate), residual_(residual) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

/// A constructive procedure left the regime it needs (e.g. a frontier ran dry).
class StructuralError : public std::runtime_error {
 public:
  StructuralError(const std::string& what, int achieved_depth, std::vector<std::size_t> sizes)
      : std::runtime_error(what), achieved_depth_(achieved_depth), sizes_(std::move(sizes)) {}
  int achieved_depth() const noexcept { return achieved_depth_; }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

 private:
  int achieved_depth_;
  std::vector<std::size_t> sizes_;
};

}  // namespace resilab
