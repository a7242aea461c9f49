#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace trsmlab {

/// A TRSM instance: solve L X = B with L n-by-n lower triangular and B n-by-k,
/// on p virtual processors, recursing down to base order n0.
///
/// Construction enforces n, k, p >= 1 and 1 <= n0 <= n. The power-of-two
/// requirement is checked by the simulator, not here.
struct ProblemShape {
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t p;
  std::uint64_t n0;

  ProblemShape(std::uint64_t n, std::uint64_t k, std::uint64_t p, std::uint64_t n0 = 1);

  bool all_powers_of_two() const noexcept;
  /// k / n
  double ratio() const noexcept { return static_cast<double>(k) / static_cast<double>(n); }

  friend bool operator==(const ProblemShape&, const ProblemShape&) = default;
};

/// Flops, words and messages charged along the critical path.
///
/// Components are doubles so that dyadic per-processor shares (n^2 / 2p with
/// n < p) stay exact; every value produced by the power-of-two recursion is
/// a dyadic rational well inside the 53-bit mantissa.
struct CostVector {
  double flops = 0;
  double words = 0;
  double messages = 0;

  friend bool operator==(const CostVector&, const CostVector&) = default;
};

struct MachineParams {
  double alpha = 1e-6;   // seconds per message
  double beta = 1e-9;    // seconds per word
  double gamma = 1e-11;  // seconds per flop
};

/// alpha*S + beta*W + gamma*F, summed in that order.
double total_time(const CostVector& cost, const MachineParams& machine) noexcept;

/// Dependent phases: componentwise sum.
CostVector cost_seq(const CostVector& a, const CostVector& b) noexcept;

/// Independent branches: componentwise max.
CostVector cost_par(const CostVector& a, const CostVector& b) noexcept;

/// Parses {"alpha": .., "beta": .., "gamma": ..}; absent keys keep their
/// defaults. Throws UsageError on malformed JSON, non-numeric or negative values.
MachineParams machine_from_json(std::string_view text);
MachineParams load_machine(const std::string& path);

bool is_power_of_two(std::uint64_t v) noexcept;
unsigned log2_exact(std::uint64_t power_of_two) noexcept;

}  // namespace trsmlab
