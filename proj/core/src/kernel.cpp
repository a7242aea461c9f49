#include "trsmlab/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <utility>

#include "trsmlab/errors.hpp"

namespace trsmlab {
namespace {

double max_abs(std::span<const double> values) noexcept {
  double m = 0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

void check_system(const TriangularMatrix& L, const DenseMatrix& B) {
  if (B.rows() != L.order()) throw UsageError("right-hand side rows must equal the order of L");
  for (std::size_t i = 0; i < L.order(); ++i)
    if (L(i, i) == 0.0) throw ZeroDiagonal(i);
}

// X[i] -= L(i, j) * X[j]
void axpy_row(DenseMatrix& X, std::size_t i, std::size_t j, double lij) {
  auto dst = X.row(i);
  auto src = std::as_const(X).row(j);
  for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= lij * src[c];
}

// Forward substitution restricted to rows [first, first + count); earlier
// rows' contributions are already folded into X.
void substitute_block(const TriangularMatrix& L, DenseMatrix& X, std::size_t first, std::size_t count) {
  for (std::size_t i = first; i < first + count; ++i) {
    for (std::size_t j = first; j < i; ++j) axpy_row(X, i, j, L(i, j));
    const double diag = L(i, i);
    for (double& v : X.row(i)) v /= diag;
  }
}

void solve_block(const TriangularMatrix& L, DenseMatrix& X, std::size_t first, std::size_t count,
                 std::size_t base_order) {
  if (count <= base_order) {
    substitute_block(L, X, first, count);
    return;
  }
  const std::size_t top = (count + 1) / 2;
  solve_block(L, X, first, top, base_order);
  // B2 -= L21 X1
  for (std::size_t i = first + top; i < first + count; ++i)
    for (std::size_t j = first; j < first + top; ++j) axpy_row(X, i, j, L(i, j));
  solve_block(L, X, first + top, count - top, base_order);
}

}  // namespace

TriangularMatrix::TriangularMatrix(std::size_t n) : n_(n), packed_(n * (n + 1) / 2, 0.0) {}

TriangularMatrix::TriangularMatrix(std::size_t n, std::vector<double> packed)
    : n_(n), packed_(std::move(packed)) {
  if (packed_.size() != n * (n + 1) / 2) throw UsageError("packed triangle must hold n(n+1)/2 values");
}

TriangularMatrix TriangularMatrix::identity(std::size_t n) {
  TriangularMatrix L(n);
  for (std::size_t i = 0; i < n; ++i) L(i, i) = 1.0;
  return L;
}

double TriangularMatrix::max_norm() const noexcept { return max_abs(packed_); }

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) throw UsageError("dense matrix needs rows*cols values");
}

double DenseMatrix::max_norm() const noexcept { return max_abs(values_); }

DenseMatrix solve_forward(const TriangularMatrix& L, const DenseMatrix& B) {
  check_system(L, B);
  DenseMatrix X = B;
  substitute_block(L, X, 0, L.order());
  return X;
}

DenseMatrix solve_recursive(const TriangularMatrix& L, const DenseMatrix& B, std::size_t base_order) {
  if (base_order < 1) throw UsageError("base order must be >= 1");
  check_system(L, B);
  DenseMatrix X = B;
  solve_block(L, X, 0, L.order(), base_order);
  return X;
}

double residual(const TriangularMatrix& L, const DenseMatrix& X, const DenseMatrix& B) {
  const std::size_t n = L.order();
  if (X.rows() != n || B.rows() != n || X.cols() != B.cols())
    throw UsageError("residual: shapes do not conform");
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < X.cols(); ++c) {
      double acc = 0;
      for (std::size_t j = 0; j <= i; ++j) acc += L(i, j) * X(j, c);
      worst = std::max(worst, std::abs(acc - B(i, c)));
    }
  }
  const double scale = L.max_norm() * X.max_norm() + B.max_norm();
  return scale > 0 ? worst / scale : 0.0;
}

TestSystem make_test_system(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Map raw 64-bit draws to [-1, 1] directly so the corpus does not depend on
  // the standard library's distribution implementation.
  auto uniform = [&rng] {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    return 2.0 * u - 1.0;
  };
  TriangularMatrix L(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) L(i, j) = uniform();
    L(i, i) = static_cast<double>(n);
  }
  DenseMatrix B(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) B(i, c) = uniform();
  return {std::move(L), std::move(B)};
}

VerifySummary verify_corpus(std::uint64_t seed, std::size_t count) {
  constexpr std::array<std::size_t, 4> orders{8, 16, 64, 256};
  constexpr std::array<std::size_t, 3> rhs{1, 4, 64};
  constexpr std::array<std::size_t, 3> bases{1, 2, 8};

  VerifySummary summary{seed, {}, 0, 0};
  summary.cases.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    VerifyCase vc{orders[i % 4], rhs[(i / 4) % 3], bases[(i / 12) % 3], seed + i, 0, 0};
    auto sys = make_test_system(vc.n, vc.k, vc.seed);
    DenseMatrix reference = solve_forward(sys.L, sys.B);
    DenseMatrix recursive = solve_recursive(sys.L, sys.B, vc.base_order);

    double diff = 0;
    for (std::size_t j = 0; j < reference.values().size(); ++j)
      diff = std::max(diff, std::abs(recursive.values()[j] - reference.values()[j]));
    const double scale = reference.max_norm();
    vc.rel_diff = scale > 0 ? diff / scale : diff;
    vc.residual = residual(sys.L, recursive, sys.B);

    summary.max_rel_diff = std::max(summary.max_rel_diff, vc.rel_diff);
    summary.max_residual = std::max(summary.max_residual, vc.residual);
    summary.cases.push_back(vc);
  }
  return summary;
}

}  // namespace trsmlab
