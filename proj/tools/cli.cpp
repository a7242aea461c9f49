#include "trsmlab_cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>

#include "trsmlab/bounds.hpp"
#include "trsmlab/classifier.hpp"
#include "trsmlab/errors.hpp"
#include "trsmlab/kernel.hpp"
#include "trsmlab/simulator.hpp"
#include "trsmlab/sweep.hpp"

namespace trsmlab::cli {
namespace {

using nlohmann::json;

// Accepts plain numbers and fractions such as "1/32".
double parse_ratio(const std::string& text) {
  try {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
      std::size_t used = 0;
      double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    }
    double num = parse_ratio(text.substr(0, slash));
    double den = parse_ratio(text.substr(slash + 1));
    return num / den;
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse ratio '" + text + "'");
  }
}

json optional_number(const std::optional<double>& v) {
  if (v) return *v;
  return "n/a";
}

json to_json(const Classification& c, RuleSet rules) {
  json cases = json::array();
  for (auto label : c.labels) cases.push_back(std::string(to_string(label)));
  return {{"cases", cases},
          {"is_gap", c.is_gap},
          {"is_overlap", c.is_overlap},
          {"ratio", c.ratio},
          {"rules", std::string(to_string(rules))}};
}

json to_json(const BoundsReport& b) {
  return {{"claimed_two", b.claimed_two},         {"corrected_two", b.corrected_two},
          {"ratio_two", b.ratio_two},             {"claimed_three", b.claimed_three},
          {"corrected_three", b.corrected_three}, {"ratio_three", b.ratio_three},
          {"p_r", b.p_r},                         {"exceeds_two", b.exceeds_two},
          {"exceeds_three", b.exceeds_three}};
}

json to_json(const CostVector& c) { return {{"F", c.flops}, {"W", c.words}, {"S", c.messages}}; }

struct Globals {
  std::string rules = "original";
  std::string collective = "pairwise";
  std::string machine_path;
  std::uint64_t seed = 1;

  RuleSet rule_set() const { return parse_rules(rules); }
  CommModel comm() const { return parse_comm_model(collective); }
  MachineParams machine() const { return machine_path.empty() ? MachineParams{} : load_machine(machine_path); }
};

struct ShapeArgs {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t n0 = 1;

  ProblemShape shape() const { return {n, k, p, n0}; }
};

void add_shape_options(CLI::App* sub, ShapeArgs& a, bool with_base) {
  sub->add_option("--n", a.n, "Order of L")->required();
  sub->add_option("--k", a.k, "Number of right-hand sides")->required();
  sub->add_option("--p", a.p, "Processor count")->required();
  if (with_base) sub->add_option("--n0", a.n0, "Base-case order")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"trsm-lab: regime, bound and critical-path cost explorer for recursive TRSM"};
  app.name("trsm-lab");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--rules", g.rules, "Regime rule set: original|revised")->capture_default_str();
  app.add_option("--collective", g.collective, "Collective model: pairwise|tree")->capture_default_str();
  app.add_option("--machine", g.machine_path, "JSON file with alpha, beta, gamma (seconds)");
  app.add_option("--seed", g.seed, "Seed for randomized subcommands")->capture_default_str();

  ShapeArgs shape_args;
  std::uint64_t procs = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Classify one shape");
  add_shape_options(classify_cmd, shape_args, true);

  auto* gaps_cmd = app.add_subcommand("gaps", "Print the ratios k/n covered by no case");
  gaps_cmd->add_option("--p", procs, "Processor count")->required();

  auto* overlaps_cmd = app.add_subcommand("overlaps", "Print the ratios k/n covered by two or more cases");
  overlaps_cmd->add_option("--p", procs, "Processor count")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate claimed and corrected bandwidth bounds");
  add_shape_options(bounds_cmd, shape_args, false);

  bool full_report = false;
  auto* simulate_cmd = app.add_subcommand("simulate", "Critical-path cost of the recursive solve");
  add_shape_options(simulate_cmd, shape_args, true);
  simulate_cmd->add_flag("--report", full_report, "Emit the full JSON report against the bounds");

  std::size_t verify_count = 50;
  auto* verify_cmd = app.add_subcommand("verify", "Check the recursive kernel against forward substitution");
  verify_cmd->add_option("--count", verify_count, "Number of random instances")->capture_default_str();

  SweepOptions sweep;
  std::string sweep_r_min = "1/256", sweep_r_max = "256", out_path;
  bool no_sim = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sample the ratio axis and write CSV");
  sweep_cmd->add_option("--p-list", sweep.p_values, "Comma-separated processor counts")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--r-min", sweep_r_min, "Smallest ratio k/n")->capture_default_str();
  sweep_cmd->add_option("--r-max", sweep_r_max, "Largest ratio k/n")->capture_default_str();
  sweep_cmd->add_option("--samples", sweep.samples, "Ratios per processor count")->capture_default_str();
  sweep_cmd->add_option("--n-scale", sweep.n_scale, "Fixed n")->capture_default_str();
  sweep_cmd->add_option("--n0", sweep.n0, "Base-case order for the simulator")->capture_default_str();
  sweep_cmd->add_flag("--no-sim", no_sim, "Skip the simulator columns");
  sweep_cmd->add_option("--out", out_path, "Output CSV path (default: stdout)");

  std::vector<std::uint64_t> map_procs;
  std::string map_r_min = "1/256", map_r_max = "256";
  std::size_t columns = 64;
  auto* map_cmd = app.add_subcommand("map", "Render an ASCII regime map");
  map_cmd->add_option("--p", map_procs, "Processor counts (comma-separated or repeated)")
      ->delimiter(',')
      ->required();
  map_cmd->add_option("--r-min", map_r_min, "Smallest ratio k/n")->capture_default_str();
  map_cmd->add_option("--r-max", map_r_max, "Largest ratio k/n")->capture_default_str();
  map_cmd->add_option("--columns", columns, "Cells per row")->capture_default_str();

  std::vector<std::string> argv_store{"trsm-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      const auto rules = g.rule_set();
      const ProblemShape shape = shape_args.shape();
      json doc = to_json(classify(shape, rules), rules);
      doc["n"] = shape.n;
      doc["k"] = shape.k;
      doc["p"] = shape.p;
      out << doc.dump() << '\n';
    } else if (*gaps_cmd) {
      out << format_ratio_set(gap_set(procs, g.rule_set())) << '\n';
    } else if (*overlaps_cmd) {
      out << format_ratio_set(overlap_set(procs, g.rule_set())) << '\n';
    } else if (*bounds_cmd) {
      const ProblemShape shape = shape_args.shape();
      json doc = to_json(bounds_report(shape));
      doc["n"] = shape.n;
      doc["k"] = shape.k;
      doc["p"] = shape.p;
      out << doc.dump() << '\n';
    } else if (*simulate_cmd) {
      const ProblemShape shape = shape_args.shape();
      const CommModel model = g.comm();
      if (!full_report) {
        const CostVector c = trsm_cost(shape, model);
        out << "F=" << format_number(c.flops) << " W=" << format_number(c.words)
            << " S=" << format_number(c.messages) << '\n';
      } else {
        const SimReport r = compare_to_bounds(shape, model);
        json doc{{"n", shape.n},
                 {"k", shape.k},
                 {"p", shape.p},
                 {"n0", shape.n0},
                 {"collective", std::string(to_string(model))},
                 {"model", std::string(SimReport::layout_model)},
                 {"cost", to_json(r.cost)},
                 {"time", total_time(r.cost, g.machine())},
                 {"original", to_json(r.original, RuleSet::Original)},
                 {"revised", to_json(r.revised, RuleSet::RevisedTwoLarge)},
                 {"bounds", to_json(r.bounds)},
                 {"w_over_claimed_two", optional_number(r.w_over_claimed_two)},
                 {"w_over_corrected_two", optional_number(r.w_over_corrected_two)},
                 {"w_over_claimed_three", optional_number(r.w_over_claimed_three)},
                 {"w_over_corrected_three", optional_number(r.w_over_corrected_three)}};
        out << doc.dump() << '\n';
      }
    } else if (*verify_cmd) {
      const VerifySummary s = verify_corpus(g.seed, verify_count);
      const bool ok = s.passed();
      out << json{{"seed", s.seed},
                  {"instances", s.cases.size()},
                  {"max_rel_diff", s.max_rel_diff},
                  {"max_residual", s.max_residual},
                  {"tolerance", 1e-10},
                  {"pass", ok}}
                 .dump()
          << '\n';
      return ok ? kOk : kVerifyFailed;
    } else if (*sweep_cmd) {
      sweep.r_min = parse_ratio(sweep_r_min);
      sweep.r_max = parse_ratio(sweep_r_max);
      sweep.rules = g.rule_set();
      sweep.collective = g.comm();
      sweep.simulate = !no_sim;
      sweep.seed = g.seed;
      const auto rows = run_sweep(sweep);
      if (out_path.empty()) {
        write_csv(out, rows);
      } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot write '" + out_path + "'");
        write_csv(file, rows);
        file.flush();
        if (!file) throw UsageError("failed writing '" + out_path + "'");
      }
    } else if (*map_cmd) {
      const auto map = region_map(map_procs, parse_ratio(map_r_min), parse_ratio(map_r_max), columns, g.rule_set());
      out << render_ascii(map);
      out << "legend: 1=one_large 2=two_large 3=three_large .=gap X=overlap (rules=" << to_string(map.rules) << ")\n";
    }
  } catch (const InvalidShape& e) {
    err << "invalid shape: " << e.what() << '\n';
    return kInvalidShape;
  } catch (const OverDecomposed& e) {
    err << "over-decomposed: " << e.what() << '\n';
    return kOverDecomposed;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace trsmlab::cli
