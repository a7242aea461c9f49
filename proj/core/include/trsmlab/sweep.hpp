#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "trsmlab/classifier.hpp"
#include "trsmlab/cost_model.hpp"
#include "trsmlab/simulator.hpp"

namespace trsmlab {

struct SweepOptions {
  std::vector<std::uint64_t> p_values{4, 16, 64};
  double r_min = 1.0 / 256;
  double r_max = 256;
  std::size_t samples = 256;
  std::uint64_t n_scale = 256;
  std::uint64_t n0 = 1;
  RuleSet rules = RuleSet::Original;
  CommModel collective = CommModel::Pairwise;
  bool simulate = true;
  std::uint64_t seed = 0;
};

struct SweepRecord {
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t p;
  double ratio;  // k / n after rounding k
  RuleSet rules;
  Classification classification;
  double claimed_two;
  double corrected_two;
  double claimed_three;
  double corrected_three;
  std::optional<CostVector> sim;  // empty with simulate=false or when over-decomposed
};

inline constexpr std::string_view kSweepCsvHeader =
    "n,k,p,ratio,rules,cases,is_gap,is_overlap,claimed_two,corrected_two,"
    "claimed_three,corrected_three,w_sim,f_sim,s_sim";

/// Nearest power of two in log space, at least 1.
std::uint64_t round_to_power_of_two(double x);

/// For each p, draws `samples` log-uniform ratios from a seeded generator,
/// realizes each as (n_scale, round_to_power_of_two(r * n_scale)) and
/// evaluates it. Rows come back sorted by (p, ratio).
/// Throws UsageError / InvalidShape on bad options.
std::vector<SweepRecord> run_sweep(const SweepOptions& options);

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
std::string csv_row(const SweepRecord& record);

}  // namespace trsmlab
