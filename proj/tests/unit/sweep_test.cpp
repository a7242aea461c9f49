#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "trsmlab/errors.hpp"
#include "trsmlab/sweep.hpp"

using namespace trsmlab;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TEST(RoundToPowerOfTwo, NearestInLogSpace) {
  EXPECT_EQ(round_to_power_of_two(0.01), 1u);
  EXPECT_EQ(round_to_power_of_two(1), 1u);
  EXPECT_EQ(round_to_power_of_two(2.8), 2u);
  EXPECT_EQ(round_to_power_of_two(2.9), 4u);
  EXPECT_EQ(round_to_power_of_two(1000), 1024u);
}

TEST(Sweep, RowCountAndOrdering) {
  SweepOptions opt;
  opt.simulate = false;
  const auto rows = run_sweep(opt);
  ASSERT_EQ(rows.size(), 768u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    EXPECT_TRUE(a.p < b.p || (a.p == b.p && a.ratio <= b.ratio));
  }
  for (const auto& row : rows) {
    EXPECT_EQ(row.n, 256u);
    EXPECT_FALSE(row.sim.has_value());
  }
}

TEST(Sweep, GapRowsLieInGapSet) {
  SweepOptions opt;
  opt.simulate = false;
  opt.r_min = 1.0 / 4096;
  opt.r_max = 4096;
  opt.n_scale = 64;
  for (const auto& row : run_sweep(opt)) {
    const double ratio = double(row.k) / double(row.n);
    EXPECT_EQ(row.classification.is_gap, contains(gap_set(row.p, RuleSet::Original), ratio))
        << row.k << "/" << row.n << " p=" << row.p;
  }
}

TEST(Sweep, SimulatorColumns) {
  SweepOptions opt;
  opt.p_values = {4};
  opt.samples = 64;
  const auto rows = run_sweep(opt);
  std::size_t simulated = 0;
  for (const auto& row : rows) {
    if (!row.sim) continue;
    ++simulated;
    EXPECT_EQ(row.sim->flops, double(row.n) * double(row.n) * double(row.k) / double(row.p));
  }
  EXPECT_GT(simulated, 0u);
}

TEST(Sweep, Deterministic) {
  SweepOptions opt;
  opt.seed = 99;
  std::ostringstream a, b;
  write_csv(a, run_sweep(opt));
  write_csv(b, run_sweep(opt));
  EXPECT_EQ(a.str(), b.str());
  opt.seed = 100;
  std::ostringstream c;
  write_csv(c, run_sweep(opt));
  EXPECT_NE(a.str(), c.str());
}

TEST(Sweep, CsvFormat) {
  SweepOptions opt;
  opt.p_values = {16};
  opt.samples = 32;
  std::ostringstream out;
  write_csv(out, run_sweep(opt));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kSweepCsvHeader);
  while (std::getline(in, line)) {
    const auto fields = split(line, ',');
    ASSERT_EQ(fields.size(), 15u) << line;
    EXPECT_TRUE(fields[6] == "true" || fields[6] == "false");
    EXPECT_TRUE(fields[7] == "true" || fields[7] == "false");
    EXPECT_EQ(fields[4], "original");
    EXPECT_FALSE(fields[5].empty());
  }
}

TEST(Sweep, CsvRowForKnownShape) {
  SweepOptions opt;
  opt.p_values = {4};
  opt.samples = 1;
  opt.r_min = 0.99;
  opt.r_max = 1.01;
  opt.n_scale = 8;
  opt.simulate = true;
  const auto rows = run_sweep(opt);
  ASSERT_EQ(rows.size(), 1u);
  // (8, 8, 4): gap under original rules, claimed 64, corrected 128.
  const std::string row = csv_row(rows[0]);
  const std::string prefix = "8,8,4,1,original,-,true,false,64,128,25.398416831";
  EXPECT_EQ(row.substr(0, prefix.size()), prefix) << row;
}

TEST(Sweep, BadOptions) {
  SweepOptions opt;
  opt.samples = 0;
  EXPECT_THROW(run_sweep(opt), UsageError);
  opt = {};
  opt.r_min = 2;
  opt.r_max = 1;
  EXPECT_THROW(run_sweep(opt), UsageError);
  opt = {};
  opt.p_values = {6};
  EXPECT_THROW(run_sweep(opt), InvalidShape);
  opt = {};
  opt.n_scale = 100;
  EXPECT_THROW(run_sweep(opt), InvalidShape);
}
