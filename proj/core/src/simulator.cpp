#include "trsmlab/simulator.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "trsmlab/errors.hpp"

namespace trsmlab {
namespace {

void require_power_of_two(std::uint64_t v, const char* name) {
  if (!is_power_of_two(v)) throw InvalidShape(std::string(name) + " must be a power of two, got " + std::to_string(v));
}

void validate(const ProblemShape& s) {
  require_power_of_two(s.n, "n");
  require_power_of_two(s.k, "k");
  require_power_of_two(s.p, "p");
  require_power_of_two(s.n0, "n0");
}

void validate(const MatmulShape& s) {
  require_power_of_two(s.m, "m");
  require_power_of_two(s.q, "q");
  require_power_of_two(s.r, "r");
  require_power_of_two(s.p, "p");
}

CostVector serial_trsm(const ProblemShape& s) {
  return {static_cast<double>(s.n) * static_cast<double>(s.n) * static_cast<double>(s.k), 0, 0};
}

CostVector serial_mm(const MatmulShape& s) {
  return {2.0 * static_cast<double>(s.m) * static_cast<double>(s.q) * static_cast<double>(s.r), 0, 0};
}

// Per-processor share of the replicated triangle (n^2/2 words) on a k-split.
double triangle_share(const ProblemShape& s) {
  return static_cast<double>(s.n) * static_cast<double>(s.n) / (2.0 * static_cast<double>(s.p));
}

struct MmStep {
  MmDim dim;
  MatmulShape child;
  double share;
};

// Largest splittable dimension, ties resolved m, then r, then q.
MmStep next_mm_step(const MatmulShape& s) {
  const std::array<std::pair<MmDim, std::uint64_t>, 3> order{{{MmDim::M, s.m}, {MmDim::R, s.r}, {MmDim::Q, s.q}}};
  MmDim best = MmDim::None;
  std::uint64_t best_size = 0;
  for (auto [dim, size] : order) {
    if (size >= 2 && size > best_size) {
      best = dim;
      best_size = size;
    }
  }
  const double m = static_cast<double>(s.m), q = static_cast<double>(s.q), r = static_cast<double>(s.r);
  const double p = static_cast<double>(s.p);
  MatmulShape child = s;
  child.p /= 2;
  switch (best) {
    case MmDim::M: child.m /= 2; return {best, child, q * r / p};
    case MmDim::R: child.r /= 2; return {best, child, m * q / p};
    case MmDim::Q: child.q /= 2; return {best, child, m * r / p};
    case MmDim::None: break;
  }
  throw OverDecomposed("matmul " + std::to_string(s.m) + "x" + std::to_string(s.q) + "x" + std::to_string(s.r) +
                       " cannot be spread over " + std::to_string(s.p) + " processors");
}

enum class TrsmStep { Serial, KSplit, NSplit };

TrsmStep next_trsm_step(const ProblemShape& s) {
  if (s.p == 1) return TrsmStep::Serial;
  if (s.k >= s.n && s.k >= 2) return TrsmStep::KSplit;
  if (s.n > s.n0 && s.n >= 2) return TrsmStep::NSplit;
  if (s.k >= 2) return TrsmStep::KSplit;
  throw OverDecomposed("trsm n=" + std::to_string(s.n) + " k=" + std::to_string(s.k) + " n0=" + std::to_string(s.n0) +
                       " cannot be spread over " + std::to_string(s.p) + " processors");
}

ProblemShape k_half(const ProblemShape& s) { return {s.n, s.k / 2, s.p / 2, s.n0}; }
ProblemShape n_half(const ProblemShape& s) { return {s.n / 2, s.k, s.p, std::min(s.n0, s.n / 2)}; }
MatmulShape update_shape(const ProblemShape& s) { return {s.n / 2, s.n / 2, s.k, s.p}; }

CostVector mm_rec(const MatmulShape& s, CommModel model) {
  if (s.p == 1) return serial_mm(s);
  const MmStep step = next_mm_step(s);
  return cost_seq(exchange_cost(step.share, 2, model), mm_rec(step.child, model));
}

CostVector trsm_rec(const ProblemShape& s, CommModel model) {
  switch (next_trsm_step(s)) {
    case TrsmStep::Serial:
      return serial_trsm(s);
    case TrsmStep::KSplit:
      // The two halves are the same shape; the critical path runs through one.
      return cost_seq(trsm_rec(k_half(s), model), exchange_cost(triangle_share(s), 2, model));
    case TrsmStep::NSplit: {
      const CostVector half = trsm_rec(n_half(s), model);
      return cost_seq(cost_seq(half, mm_rec(update_shape(s), model)), half);
    }
  }
  throw std::logic_error("unreachable trsm step");
}

RecursionNode mm_tree(const MatmulShape& s, CommModel model) {
  RecursionNode node{NodeKind::Base, MmDim::None, s, {}, {}};
  if (s.p == 1) {
    node.local = serial_mm(s);
    return node;
  }
  const MmStep step = next_mm_step(s);
  node.kind = NodeKind::MmSplit;
  node.split = step.dim;
  node.local = exchange_cost(step.share, 2, model);
  node.children.push_back(mm_tree(step.child, model));
  node.children.push_back(mm_tree(step.child, model));
  return node;
}

RecursionNode trsm_tree(const ProblemShape& s, CommModel model) {
  RecursionNode node{NodeKind::Base, MmDim::None, s, {}, {}};
  switch (next_trsm_step(s)) {
    case TrsmStep::Serial:
      node.local = serial_trsm(s);
      break;
    case TrsmStep::KSplit:
      node.kind = NodeKind::KSplit;
      node.local = exchange_cost(triangle_share(s), 2, model);
      node.children.push_back(trsm_tree(k_half(s), model));
      node.children.push_back(trsm_tree(k_half(s), model));
      break;
    case TrsmStep::NSplit:
      node.kind = NodeKind::NSplit;
      node.children.push_back(trsm_tree(n_half(s), model));
      node.children.push_back(mm_tree(update_shape(s), model));
      node.children.push_back(trsm_tree(n_half(s), model));
      break;
  }
  return node;
}

std::optional<double> over(double words, double bound) {
  if (bound > 0) return words / bound;
  return std::nullopt;
}

}  // namespace

CostVector exchange_cost(double words_per_proc, std::uint64_t group, CommModel model) {
  if (group < 2 || !is_power_of_two(group)) throw UsageError("exchange group must be a power of two >= 2");
  if (!(words_per_proc >= 0)) throw UsageError("exchange payload must be >= 0");
  if (model == CommModel::Pairwise) return {0, words_per_proc, 1};
  const double levels = static_cast<double>(log2_exact(group));
  return {0, words_per_proc * levels, levels};
}

CostVector mm_cost(const MatmulShape& shape, CommModel model) {
  validate(shape);
  return mm_rec(shape, model);
}

CostVector trsm_cost(const ProblemShape& shape, CommModel model) {
  validate(shape);
  return trsm_rec(shape, model);
}

RecursionNode expand_tree(const ProblemShape& shape, CommModel model) {
  validate(shape);
  return trsm_tree(shape, model);
}

CostVector fold(const RecursionNode& node) {
  switch (node.kind) {
    case NodeKind::Base:
      return node.local;
    case NodeKind::KSplit:
    case NodeKind::MmSplit: {
      if (node.children.size() != 2) throw std::logic_error("parallel split must have two children");
      const CostVector left = fold(node.children[0]);
      const CostVector right = fold(node.children[1]);
      if (!(left == right)) throw std::logic_error("parallel siblings have different costs");
      return cost_seq(node.local, cost_par(left, right));
    }
    case NodeKind::NSplit: {
      CostVector total = node.local;
      for (const auto& child : node.children) total = cost_seq(total, fold(child));
      return total;
    }
  }
  throw std::logic_error("unknown node kind");
}

std::size_t node_count(const RecursionNode& node) noexcept {
  std::size_t count = 1;
  for (const auto& child : node.children) count += node_count(child);
  return count;
}

SimReport compare_to_bounds(const ProblemShape& shape, CommModel model) {
  SimReport report{shape,
                   model,
                   classify(shape, RuleSet::Original),
                   classify(shape, RuleSet::RevisedTwoLarge),
                   trsm_cost(shape, model),
                   bounds_report(shape),
                   {},
                   {},
                   {},
                   {}};
  const double w = report.cost.words;
  report.w_over_claimed_two = over(w, report.bounds.claimed_two);
  report.w_over_corrected_two = over(w, report.bounds.corrected_two);
  report.w_over_claimed_three = over(w, report.bounds.claimed_three);
  report.w_over_corrected_three = over(w, report.bounds.corrected_three);
  return report;
}

std::string_view to_string(CommModel model) noexcept {
  return model == CommModel::Pairwise ? "pairwise" : "tree";
}

CommModel parse_comm_model(std::string_view text) {
  if (text == "pairwise") return CommModel::Pairwise;
  if (text == "tree") return CommModel::Tree;
  throw UsageError("unknown collective model '" + std::string(text) + "' (expected pairwise|tree)");
}

}  // namespace trsmlab
