#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trsmlab {

/// Bad argument combination supplied by a caller (empty ranges, group < 2, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape violates a structural requirement (dimension < 1, n0 > n,
/// non-power-of-two where the simulator needs one).
class InvalidShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The recursion ran out of splittable dimensions while p > 1.
class OverDecomposed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDiagonal : public std::domain_error {
 public:
  explicit ZeroDiagonal(std::size_t index)
      : std::domain_error("zero diagonal entry at row " + std::to_string(index)), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace trsmlab
