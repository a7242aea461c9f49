#include "trsmlab/classifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "trsmlab/errors.hpp"

namespace trsmlab {
namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 32;

// Shared by classify_ratio and the interval builders so that both sides use
// the same rounded endpoints.
struct Thresholds {
  double inv_sqrt_p;
  double sqrt_p;
  double p;

  explicit Thresholds(std::uint64_t procs)
      : inv_sqrt_p(1.0 / std::sqrt(static_cast<double>(procs))),
        sqrt_p(std::sqrt(static_cast<double>(procs))),
        p(static_cast<double>(procs)) {}
};

Classification finish(std::vector<CaseLabel> labels, double ratio) {
  Classification c;
  c.labels = std::move(labels);
  c.ratio = ratio;
  c.is_gap = c.labels.empty();
  c.is_overlap = c.labels.size() >= 2;
  return c;
}

void require_procs(std::uint64_t p) {
  if (p < 1) throw UsageError("processor count must be >= 1");
}

RatioInterval closed(double lo, double hi) { return {lo, hi, true, true}; }
RatioInterval open(double lo, double hi) { return {lo, hi, false, false}; }

}  // namespace

bool Classification::has(CaseLabel label) const noexcept {
  for (auto l : labels)
    if (l == label) return true;
  return false;
}

bool RatioInterval::contains(double r) const noexcept {
  bool above = lo_closed ? r >= lo : r > lo;
  bool below = hi_closed ? r <= hi : r < hi;
  return above && below;
}

bool contains(const RatioSet& set, double r) noexcept {
  for (const auto& iv : set)
    if (iv.contains(r)) return true;
  return false;
}

Classification classify(const ProblemShape& shape, RuleSet rules) {
  if (shape.n >= kExactLimit || shape.k >= kExactLimit || shape.p >= kExactLimit)
    throw UsageError("classify: n, k and p must be below 2^32");

  const u128 n = shape.n, k = shape.k, p = shape.p;
  const u128 n2 = n * n, k2 = k * k;

  std::vector<CaseLabel> labels;
  if (n * p < k) labels.push_back(CaseLabel::OneLarge);  // n < k/p

  bool two = rules == RuleSet::Original ? n2 > k2 * p   // n > k sqrt(p)
                                        : n2 < k2 * p;  // n < k sqrt(p)
  if (two) labels.push_back(CaseLabel::TwoLarge);

  if (k < n * p && n2 * p < k2) labels.push_back(CaseLabel::ThreeLarge);  // k/p < n < k/sqrt(p)

  return finish(std::move(labels), shape.ratio());
}

Classification classify_ratio(double r, std::uint64_t p, RuleSet rules) {
  require_procs(p);
  if (!(r > 0)) throw UsageError("ratio must be > 0");
  const Thresholds t(p);

  std::vector<CaseLabel> labels;
  if (r > t.p) labels.push_back(CaseLabel::OneLarge);
  bool two = rules == RuleSet::Original ? r < t.inv_sqrt_p : r > t.inv_sqrt_p;
  if (two) labels.push_back(CaseLabel::TwoLarge);
  if (t.sqrt_p < r && r < t.p) labels.push_back(CaseLabel::ThreeLarge);
  return finish(std::move(labels), r);
}

RatioSet gap_set(std::uint64_t p, RuleSet rules) {
  require_procs(p);
  const Thresholds t(p);
  if (rules == RuleSet::Original) {
    // Nothing covers [1/sqrt(p), sqrt(p)]; the point r = p sits between
    // three-large (r < p) and one-large (r > p).
    if (p == 1) return {closed(1, 1)};
    return {closed(t.inv_sqrt_p, t.sqrt_p), closed(t.p, t.p)};
  }
  // Revised two-large covers r > 1/sqrt(p); below it nothing applies.
  return {RatioInterval{0, t.inv_sqrt_p, false, true}};
}

RatioSet overlap_set(std::uint64_t p, RuleSet rules) {
  require_procs(p);
  if (rules == RuleSet::Original) return {};
  const Thresholds t(p);
  const double inf = std::numeric_limits<double>::infinity();
  // Revised two-large intersects three-large on (sqrt(p), p) and one-large on (p, inf).
  if (p == 1) return {open(1, inf)};
  return {open(t.sqrt_p, t.p), open(t.p, inf)};
}

bool three_large_admits_k_le_n(std::uint64_t p) {
  require_procs(p);
  // Some r in (sqrt(p), p) with r <= 1 exists iff the interval is nonempty
  // and starts below 1.
  const Thresholds t(p);
  return t.sqrt_p < t.p && t.sqrt_p < 1.0;
}

RegionMap region_map(const std::vector<std::uint64_t>& p_values, double r_lo, double r_hi,
                     std::size_t columns, RuleSet rules) {
  if (p_values.empty()) throw UsageError("region map needs at least one processor count");
  if (!(r_lo > 0) || !(r_lo < r_hi) || !std::isfinite(r_hi))
    throw UsageError("region map needs 0 < r_lo < r_hi");
  if (columns < 2) throw UsageError("region map needs at least 2 columns");
  for (auto p : p_values) require_procs(p);

  RegionMap map;
  map.p_values = p_values;
  map.rules = rules;
  const double log_lo = std::log(r_lo);
  const double log_span = std::log(r_hi) - log_lo;
  map.midpoints.reserve(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    double frac = (static_cast<double>(c) + 0.5) / static_cast<double>(columns);
    map.midpoints.push_back(std::exp(log_lo + frac * log_span));
  }
  for (auto p : p_values) {
    auto& row = map.cells.emplace_back();
    row.reserve(columns);
    for (double r : map.midpoints) row.push_back(classify_ratio(r, p, rules));
  }
  return map;
}

char cell_glyph(const Classification& c) noexcept {
  if (c.is_gap) return '.';
  if (c.is_overlap) return 'X';
  switch (c.labels.front()) {
    case CaseLabel::OneLarge: return '1';
    case CaseLabel::TwoLarge: return '2';
    case CaseLabel::ThreeLarge: return '3';
  }
  return '?';
}

std::string render_ascii(const RegionMap& map) {
  std::ostringstream out;
  out << "ratio";
  for (double m : map.midpoints) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, m, std::chars_format::general, 3);
    out << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
  }
  out << '\n';
  for (std::size_t i = 0; i < map.p_values.size(); ++i) {
    out << "p=" << map.p_values[i] << ' ';
    for (const auto& cell : map.cells[i]) out << cell_glyph(cell);
    out << '\n';
  }
  return out.str();
}

std::string_view to_string(RuleSet rules) noexcept {
  return rules == RuleSet::Original ? "original" : "revised";
}

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::OneLarge: return "one_large";
    case CaseLabel::TwoLarge: return "two_large";
    case CaseLabel::ThreeLarge: return "three_large";
  }
  return "?";
}

RuleSet parse_rules(std::string_view text) {
  if (text == "original") return RuleSet::Original;
  if (text == "revised" || text == "revised-two-large") return RuleSet::RevisedTwoLarge;
  throw UsageError("unknown rule set '" + std::string(text) + "' (expected original|revised)");
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "∞" : "-∞";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_ratio_set(const RatioSet& set) {
  if (set.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& iv = set[i];
    if (i > 0) out += " ∪ ";
    if (iv.is_point()) {
      out += "{" + format_number(iv.lo) + "}";
      continue;
    }
    out += iv.lo_closed ? '[' : '(';
    out += format_number(iv.lo) + ", " + format_number(iv.hi);
    out += iv.hi_closed ? ']' : ')';
  }
  return out;
}

}  // namespace trsmlab
