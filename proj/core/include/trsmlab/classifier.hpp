#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trsmlab/cost_model.hpp"

namespace trsmlab {

// Regime conditions of the recursive TRSM cost analysis, with r = k / n:
//
//   OneLarge    n < k/p              (r > p)
//   TwoLarge    n > k*sqrt(p)        (r < 1/sqrt(p))   Original
//               n < k*sqrt(p)        (r > 1/sqrt(p))   RevisedTwoLarge
//   ThreeLarge  k/p < n < k/sqrt(p)  (sqrt(p) < r < p)
//
// TRSM has only two free dimensions (n and k), so the three cases borrowed
// from rectangular matmul leave parts of the r axis uncovered (gaps) or, with
// the revised two-large condition, doubly covered (overlaps). Inequalities are
// strict as written, so boundary ratios land in gaps.

enum class RuleSet { Original, RevisedTwoLarge };
enum class CaseLabel { OneLarge, TwoLarge, ThreeLarge };

struct Classification {
  std::vector<CaseLabel> labels;  // ascending enum order
  double ratio = 0;
  bool is_gap = false;
  bool is_overlap = false;

  bool has(CaseLabel label) const noexcept;
};

/// A set of ratios. hi may be +infinity (then hi_closed is false).
/// lo == hi with both ends closed is a single point.
struct RatioInterval {
  double lo = 0;
  double hi = 0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double r) const noexcept;
  bool is_point() const noexcept { return lo == hi && lo_closed && hi_closed; }

  friend bool operator==(const RatioInterval&, const RatioInterval&) = default;
};

using RatioSet = std::vector<RatioInterval>;

/// Exact on integer inputs: every condition is compared in squared integer
/// form (n^2 p vs k^2 and so on). Requires n, k, p < 2^32.
Classification classify(const ProblemShape& shape, RuleSet rules);

/// Same conditions evaluated on a real ratio r = k / n > 0.
Classification classify_ratio(double r, std::uint64_t p, RuleSet rules);

/// Ratios r > 0 matched by no case. Endpoints are the reals 1/sqrt(p),
/// sqrt(p) and p rounded to double.
RatioSet gap_set(std::uint64_t p, RuleSet rules);

/// Ratios matched by two or more cases.
RatioSet overlap_set(std::uint64_t p, RuleSet rules);

bool contains(const RatioSet& set, double r) noexcept;

/// Whether the three-large condition sqrt(p) < k/n < p leaves room for k <= n.
/// It never does for p >= 1.
bool three_large_admits_k_le_n(std::uint64_t p);

struct RegionMap {
  std::vector<std::uint64_t> p_values;
  std::vector<double> midpoints;                   // one per column
  std::vector<std::vector<Classification>> cells;  // [row][column]
  RuleSet rules = RuleSet::Original;
};

/// Samples each p row at the geometric midpoints of `columns` log-uniform
/// cells spanning [r_lo, r_hi]. Throws UsageError on an empty p list,
/// a non-positive or inverted range, or columns < 2.
RegionMap region_map(const std::vector<std::uint64_t>& p_values, double r_lo, double r_hi,
                     std::size_t columns, RuleSet rules);

/// '1' '2' '3' for a single case, '.' for a gap, 'X' for an overlap.
char cell_glyph(const Classification& c) noexcept;

/// Header line of column midpoints followed by one "p=<value> <cells>" row per p.
std::string render_ascii(const RegionMap& map);

std::string_view to_string(RuleSet rules) noexcept;
std::string_view to_string(CaseLabel label) noexcept;
/// Accepts "original" and "revised" (also "revised-two-large").
RuleSet parse_rules(std::string_view text);

/// "[0.25, 4] ∪ {16}", "(0, 0.25]", "∅" for the empty set.
std::string format_ratio_set(const RatioSet& set);
/// Shortest round-trip decimal; "∞" for infinity.
std::string format_number(double v);

}  // namespace trsmlab
