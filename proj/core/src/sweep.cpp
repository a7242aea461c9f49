#include "trsmlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "trsmlab/bounds.hpp"
#include "trsmlab/errors.hpp"

namespace trsmlab {
namespace {

SweepRecord evaluate(std::uint64_t n, std::uint64_t k, std::uint64_t p, const SweepOptions& opt) {
  const ProblemShape shape(n, k, p, opt.n0);
  const Classification cls = classify(shape, opt.rules);
  const double dn = static_cast<double>(n), dk = static_cast<double>(k), dp = static_cast<double>(p);

  SweepRecord rec{n,
                  k,
                  p,
                  shape.ratio(),
                  opt.rules,
                  cls,
                  bw_two_large_claimed(dn, dk, dp),
                  bw_two_large_corrected(dn, dk, dp),
                  bw_three_large_claimed(dn, dk, dp),
                  bw_three_large_corrected(dn, dk, dp),
                  std::nullopt};
  if (opt.simulate) {
    try {
      rec.sim = trsm_cost(shape, opt.collective);
    } catch (const OverDecomposed&) {
      // p exceeds the parallelism of this shape; leave the simulator columns empty.
    }
  }
  return rec;
}

}  // namespace

std::uint64_t round_to_power_of_two(double x) {
  if (!(x > 1)) return 1;
  const double e = std::min(std::round(std::log2(x)), 62.0);
  return std::uint64_t{1} << static_cast<unsigned>(e);
}

std::vector<SweepRecord> run_sweep(const SweepOptions& opt) {
  if (opt.p_values.empty()) throw UsageError("sweep needs at least one processor count");
  if (opt.samples < 1) throw UsageError("sweep needs samples >= 1");
  if (!(opt.r_min > 0) || !(opt.r_min < opt.r_max) || !std::isfinite(opt.r_max))
    throw UsageError("sweep needs 0 < r_min < r_max");
  if (!is_power_of_two(opt.n_scale)) throw InvalidShape("n-scale must be a power of two");
  if (!is_power_of_two(opt.n0) || opt.n0 > opt.n_scale)
    throw InvalidShape("n0 must be a power of two no larger than n-scale");
  for (auto p : opt.p_values)
    if (!is_power_of_two(p)) throw InvalidShape("processor counts must be powers of two");

  const double log_lo = std::log(opt.r_min);
  const double log_span = std::log(opt.r_max) - log_lo;
  std::mt19937_64 rng(opt.seed);

  std::vector<SweepRecord> rows;
  rows.reserve(opt.p_values.size() * opt.samples);
  for (auto p : opt.p_values) {
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const double r = std::exp(log_lo + u * log_span);
      const std::uint64_t k = round_to_power_of_two(r * static_cast<double>(opt.n_scale));
      rows.push_back(evaluate(opt.n_scale, k, p, opt));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.ratio < b.ratio;
  });
  return rows;
}

std::string csv_row(const SweepRecord& rec) {
  std::string cases;
  for (auto label : rec.classification.labels) {
    if (!cases.empty()) cases += ';';
    cases += to_string(label);
  }
  if (cases.empty()) cases = "-";

  std::string row;
  auto field = [&row](const std::string& value) {
    if (!row.empty()) row += ',';
    row += value;
  };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

  field(std::to_string(rec.n));
  field(std::to_string(rec.k));
  field(std::to_string(rec.p));
  field(format_number(rec.ratio));
  field(std::string(to_string(rec.rules)));
  field(cases);
  field(flag(rec.classification.is_gap));
  field(flag(rec.classification.is_overlap));
  field(format_number(rec.claimed_two));
  field(format_number(rec.corrected_two));
  field(format_number(rec.claimed_three));
  field(format_number(rec.corrected_three));
  if (rec.sim) {
    field(format_number(rec.sim->words));
    field(format_number(rec.sim->flops));
    field(format_number(rec.sim->messages));
  } else {
    row += ",,,";
  }
  return row;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& rec : records) out << csv_row(rec) << '\n';
}

}  // namespace trsmlab
