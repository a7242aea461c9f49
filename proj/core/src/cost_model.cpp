#include "trsmlab/cost_model.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trsmlab/errors.hpp"

namespace trsmlab {

ProblemShape::ProblemShape(std::uint64_t n_, std::uint64_t k_, std::uint64_t p_, std::uint64_t n0_)
    : n(n_), k(k_), p(p_), n0(n0_) {
  if (n < 1 || k < 1 || p < 1) throw InvalidShape("n, k and p must all be >= 1");
  if (n0 < 1 || n0 > n) throw InvalidShape("base order n0 must satisfy 1 <= n0 <= n");
}

bool ProblemShape::all_powers_of_two() const noexcept {
  return is_power_of_two(n) && is_power_of_two(k) && is_power_of_two(p) && is_power_of_two(n0);
}

double total_time(const CostVector& cost, const MachineParams& machine) noexcept {
  double t = machine.alpha * cost.messages;
  t += machine.beta * cost.words;
  t += machine.gamma * cost.flops;
  return t;
}

CostVector cost_seq(const CostVector& a, const CostVector& b) noexcept {
  return {a.flops + b.flops, a.words + b.words, a.messages + b.messages};
}

CostVector cost_par(const CostVector& a, const CostVector& b) noexcept {
  return {std::max(a.flops, b.flops), std::max(a.words, b.words), std::max(a.messages, b.messages)};
}

MachineParams machine_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("machine parameters: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("machine parameters: expected a JSON object");

  MachineParams machine;
  auto read = [&](const char* key, double& slot) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_number()) throw UsageError(std::string("machine parameters: '") + key + "' must be a number");
    slot = it->get<double>();
    if (!(slot >= 0)) throw UsageError(std::string("machine parameters: '") + key + "' must be >= 0");
  };
  read("alpha", machine.alpha);
  read("beta", machine.beta);
  read("gamma", machine.gamma);
  return machine;
}

MachineParams load_machine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open machine file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return machine_from_json(buf.str());
}

bool is_power_of_two(std::uint64_t v) noexcept { return std::has_single_bit(v); }

unsigned log2_exact(std::uint64_t power_of_two) noexcept {
  return static_cast<unsigned>(std::countr_zero(power_of_two));
}

}  // namespace trsmlab
