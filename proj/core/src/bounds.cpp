#include "trsmlab/bounds.hpp"

#include <cmath>

namespace trsmlab {

double bw_two_large_claimed(double n, double k, double p) noexcept {
  return n * k * std::log2(p) / std::sqrt(p);
}

double bw_two_large_corrected(double n, double k, double p) noexcept {
  return (n * n + n * k) * std::log2(p) / std::sqrt(p);
}

double bw_three_large_claimed(double n, double k, double p) noexcept {
  return std::pow(n * n * k / p, 2.0 / 3.0);
}

double bw_three_large_corrected(double n, double k, double p) noexcept {
  return std::pow(n * k * k / p, 2.0 / 3.0);
}

double grid_rows(double n, double k, double p) noexcept { return std::sqrt(n * p / k); }

BoundsReport bounds_report(const ProblemShape& shape) {
  const double n = static_cast<double>(shape.n);
  const double k = static_cast<double>(shape.k);
  const double p = static_cast<double>(shape.p);

  BoundsReport r;
  r.claimed_two = bw_two_large_claimed(n, k, p);
  r.corrected_two = bw_two_large_corrected(n, k, p);
  r.ratio_two = r.claimed_two > 0 ? r.corrected_two / r.claimed_two : 1.0;
  r.claimed_three = bw_three_large_claimed(n, k, p);
  r.corrected_three = bw_three_large_corrected(n, k, p);
  r.ratio_three = r.claimed_three > 0 ? r.corrected_three / r.claimed_three : 1.0;
  r.p_r = grid_rows(n, k, p);

  r.exceeds_two = shape.n >= shape.k;
  constexpr std::uint64_t exact_limit = std::uint64_t{1} << 32;
  if (shape.n < exact_limit && shape.k < exact_limit && shape.p < exact_limit) {
    using u128 = unsigned __int128;
    const u128 nn = shape.n, kk = shape.k, pp = shape.p;
    r.exceeds_three = kk * kk > nn * nn * pp;
  } else {
    r.exceeds_three = static_cast<long double>(shape.k) >
                      static_cast<long double>(shape.n) * std::sqrt(static_cast<long double>(shape.p));
  }
  return r;
}

}  // namespace trsmlab
