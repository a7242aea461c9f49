#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace trsmlab {

/// Lower-triangular matrix, packed row-major: row i holds entries (i, 0..i),
/// n(n+1)/2 values in total.
class TriangularMatrix {
 public:
  explicit TriangularMatrix(std::size_t n);
  TriangularMatrix(std::size_t n, std::vector<double> packed);

  static TriangularMatrix identity(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return packed_[offset(i) + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return packed_[offset(i) + j]; }
  std::span<const double> packed() const noexcept { return packed_; }

  /// Max |L_ij| over the stored triangle.
  double max_norm() const noexcept;

 private:
  static std::size_t offset(std::size_t i) noexcept { return i * (i + 1) / 2; }

  std::size_t n_;
  std::vector<double> packed_;
};

class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return values_[i * cols_ + j]; }
  std::span<double> row(std::size_t i) noexcept { return {values_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * cols_, cols_}; }
  std::span<const double> values() const noexcept { return values_; }

  double max_norm() const noexcept;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// Textbook forward substitution. Throws ZeroDiagonal, or UsageError when
/// B.rows() != L.order().
DenseMatrix solve_forward(const TriangularMatrix& L, const DenseMatrix& B);

/// Recursive solve: orders <= base_order go to forward substitution, larger
/// blocks split at ceil(n/2) into solve / update / solve.
DenseMatrix solve_recursive(const TriangularMatrix& L, const DenseMatrix& B, std::size_t base_order);

/// ||L X - B||_max / (||L||_max ||X||_max + ||B||_max); 0 when the
/// denominator vanishes.
double residual(const TriangularMatrix& L, const DenseMatrix& X, const DenseMatrix& B);

struct TestSystem {
  TriangularMatrix L;
  DenseMatrix B;
};

/// Diagonally dominant test system: L_ii = n, strict lower part and B
/// uniform in [-1, 1], drawn from a mt19937_64 seeded with `seed`.
TestSystem make_test_system(std::size_t n, std::size_t k, std::uint64_t seed);

struct VerifyCase {
  std::size_t n;
  std::size_t k;
  std::size_t base_order;
  std::uint64_t seed;
  double rel_diff;   // max|X_rec - X_fwd| / max|X_fwd|
  double residual;   // of the recursive solution
};

struct VerifySummary {
  std::uint64_t seed;
  std::vector<VerifyCase> cases;
  double max_rel_diff = 0;
  double max_residual = 0;
  bool passed(double tolerance = 1e-10) const noexcept {
    return max_rel_diff <= tolerance && max_residual <= tolerance;
  }
};

/// Runs `count` seeded instances cycling through n in {8, 16, 64, 256},
/// k in {1, 4, 64} and base order in {1, 2, 8}, comparing the recursive
/// solve against forward substitution.
VerifySummary verify_corpus(std::uint64_t seed, std::size_t count = 50);

}  // namespace trsmlab
