#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace slheat {

/// A field or intermediate result contained NaN or Inf.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spectrum handed to the inverse transform was not conjugate-symmetric.
class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picard iteration hit its iteration cap. Carries the distance history.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, std::vector<double> diffs)
      : std::runtime_error(what), diffs_(std::move(diffs)) {}

  const std::vector<double>& diffs() const noexcept { return diffs_; }

 private:
  std::vector<double> diffs_;
};

}  // namespace slheat
