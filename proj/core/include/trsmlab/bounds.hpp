#pragma once

#include <cstdint>

#include "trsmlab/cost_model.hpp"

namespace trsmlab {

// Bandwidth bounds for the two- and three-large-dimension regimes, evaluated
// with unit constants and log base 2. Only ratios and growth exponents are
// meaningful; the O() constants are not.

/// n k log2(p) / sqrt(p)
double bw_two_large_claimed(double n, double k, double p) noexcept;
/// (n^2 + n k) log2(p) / sqrt(p)
double bw_two_large_corrected(double n, double k, double p) noexcept;
/// (n^2 k / p)^(2/3)
double bw_three_large_claimed(double n, double k, double p) noexcept;
/// (n k^2 / p)^(2/3)
double bw_three_large_corrected(double n, double k, double p) noexcept;
/// Processor-grid rows for the proposed split p_r^2 = n p / k.
double grid_rows(double n, double k, double p) noexcept;

struct BoundsReport {
  double claimed_two = 0;
  double corrected_two = 0;
  double ratio_two = 1;  // 1 when claimed_two == 0 (p == 1)
  double claimed_three = 0;
  double corrected_three = 0;
  double ratio_three = 1;
  double p_r = 0;
  bool exceeds_two = false;    // n >= k
  bool exceeds_three = false;  // k > n sqrt(p), tested exactly as k^2 > n^2 p
};

BoundsReport bounds_report(const ProblemShape& shape);

}  // namespace trsmlab
