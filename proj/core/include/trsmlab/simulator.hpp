#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "trsmlab/bounds.hpp"
#include "trsmlab/classifier.hpp"
#include "trsmlab/cost_model.hpp"

namespace trsmlab {

// Analytic critical-path simulator for the recursive TRSM.
//
// Charging rules (all shapes powers of two):
//   trsm, p == 1        -> (n^2 k, 0, 0)
//   trsm, k >= n, k >= 2 -> k-split: two independent trsm(n, k/2, p/2);
//                          L is replicated, each processor exchanges n^2/(2p)
//   trsm, n > n0         -> n-split: trsm(n/2) ; mm(n/2, n/2, k) ; trsm(n/2)
//   trsm, k >= 2         -> forced k-split below the base order
//   mm,   p == 1        -> (2 m q r, 0, 0)
//   mm,   otherwise      -> halve the largest of m, r, q (in that tie order) and p,
//                          exchanging the per-processor share of the operand not
//                          indexed by the split dimension
//
// Every halving exchanges between two halves, so the Tree collective with
// group 2 charges the same as Pairwise; log p factors come from the depth of
// the recursion, not from a single exchange.

enum class CommModel { Pairwise, Tree };

struct MatmulShape {
  std::uint64_t m;
  std::uint64_t q;  // contraction
  std::uint64_t r;
  std::uint64_t p;

  friend bool operator==(const MatmulShape&, const MatmulShape&) = default;
};

/// Throws UsageError for group < 2 or non-power-of-two group, or negative words.
CostVector exchange_cost(double words_per_proc, std::uint64_t group, CommModel model);

/// Throws InvalidShape (non-power-of-two or zero dimension) and OverDecomposed.
CostVector mm_cost(const MatmulShape& shape, CommModel model);

/// Throws InvalidShape (non-power-of-two) and OverDecomposed.
CostVector trsm_cost(const ProblemShape& shape, CommModel model);

enum class NodeKind { Base, KSplit, NSplit, MmSplit };
enum class MmDim { None, M, R, Q };

struct RecursionNode {
  NodeKind kind = NodeKind::Base;
  MmDim split = MmDim::None;
  std::variant<ProblemShape, MatmulShape> shape;
  CostVector local;
  std::vector<RecursionNode> children;  // NSplit: sequential; KSplit/MmSplit: parallel pair
};

/// Materializes every node, both parallel children included.
RecursionNode expand_tree(const ProblemShape& shape, CommModel model);

/// Folds a tree bottom-up. Throws std::logic_error if parallel siblings differ.
CostVector fold(const RecursionNode& node);

std::size_t node_count(const RecursionNode& node) noexcept;

struct SimReport {
  ProblemShape shape;
  CommModel model;
  Classification original;
  Classification revised;
  CostVector cost;
  BoundsReport bounds;
  // W_sim / bound; empty where the bound is 0.
  std::optional<double> w_over_claimed_two;
  std::optional<double> w_over_corrected_two;
  std::optional<double> w_over_claimed_three;
  std::optional<double> w_over_corrected_three;
  static constexpr std::string_view layout_model = "carma-owner-computes";
};

SimReport compare_to_bounds(const ProblemShape& shape, CommModel model);

std::string_view to_string(CommModel model) noexcept;
CommModel parse_comm_model(std::string_view text);

}  // namespace trsmlab
