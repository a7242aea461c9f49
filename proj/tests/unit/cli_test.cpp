#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "trsmlab_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = trsmlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyGapShape) {
  auto r = run({"classify", "--n", "10", "--k", "10", "--p", "4", "--rules", "original"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind(R"({"cases":[],"is_gap":true,)", 0), 0u) << r.out;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["is_overlap"], false);
  EXPECT_EQ(doc["rules"], "original");
}

TEST(Cli, GlobalFlagBeforeSubcommand) {
  auto r = run({"--rules", "revised", "classify", "--n", "10", "--k", "100", "--p", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["cases"], nlohmann::json({"two_large", "three_large"}));
  EXPECT_EQ(doc["is_overlap"], true);
}

TEST(Cli, Gaps) {
  auto r = run({"gaps", "--p", "16", "--rules", "original"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[0.25, 4] ∪ {16}\n");
  EXPECT_EQ(run({"gaps", "--p", "16", "--rules", "revised"}).out, "(0, 0.25]\n");
}

TEST(Cli, Overlaps) {
  EXPECT_EQ(run({"overlaps", "--p", "16", "--rules", "revised"}).out, "(4, 16) ∪ (16, ∞)\n");
  EXPECT_EQ(run({"overlaps", "--p", "16"}).out, "∅\n");
}

TEST(Cli, Bounds) {
  auto r = run({"bounds", "--n", "8", "--k", "8", "--p", "4"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["claimed_two"], 64.0);
  EXPECT_EQ(doc["corrected_two"], 128.0);
  EXPECT_EQ(doc["ratio_two"], 2.0);
  EXPECT_EQ(doc["exceeds_two"], true);
}

TEST(Cli, SimulateSummary) {
  auto r = run({"simulate", "--n", "4", "--k", "2", "--p", "2", "--n0", "1", "--collective", "pairwise"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "F=16 W=4 S=3\n");
}

TEST(Cli, SimulateReport) {
  const auto path = std::filesystem::temp_directory_path() / "trsmlab_machine_test.json";
  {
    std::ofstream(path) << R"({"alpha": 1, "beta": 1, "gamma": 1})";
  }
  auto r = run({"simulate", "--n", "4", "--k", "2", "--p", "2", "--report", "--machine", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["model"], "carma-owner-computes");
  EXPECT_EQ(doc["cost"]["W"], 4.0);
  EXPECT_EQ(doc["time"], 23.0);
}

TEST(Cli, SimulateSerialReportHasNoRatios) {
  auto r = run({"simulate", "--n", "8", "--k", "8", "--p", "1", "--report"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["w_over_claimed_two"], "n/a");
  EXPECT_EQ(doc["w_over_corrected_two"], "n/a");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"classify", "--n", "4"}).code, 1);
  EXPECT_EQ(run({"gaps", "--p", "4", "--rules", "bogus"}).code, 1);
  EXPECT_EQ(run({"simulate", "--n", "3", "--k", "2", "--p", "2"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "4", "--k", "4", "--p", "2", "--n0", "8"}).code, 2);
  EXPECT_EQ(run({"simulate", "--n", "2", "--k", "1", "--p", "2"}).code, 3);
  EXPECT_EQ(run({"map", "--p", "4", "--r-min", "4", "--r-max", "1"}).code, 1);
  EXPECT_EQ(run({"sweep", "--out", "/nonexistent-dir/x.csv"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["instances"], 50);
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["seed"], 7);
}

TEST(Cli, SweepToStdout) {
  auto r = run({"sweep", "--p-list", "4,16,64", "--samples", "256", "--no-sim"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 769u);
}

TEST(Cli, MapRendersLegendAndRows) {
  auto r = run({"map", "--p", "4,16,64", "--r-min", "1/8", "--r-max", "8", "--columns", "48"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\np=4 "), std::string::npos);
  EXPECT_NE(r.out.find("\np=16 "), std::string::npos);
  EXPECT_NE(r.out.find("\np=64 "), std::string::npos);
  EXPECT_NE(r.out.find("legend:"), std::string::npos);
}
