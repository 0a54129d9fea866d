// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// Primal-dual coflow ordering.
//
// The permutation is built right to left. Each iteration looks at the most
// loaded input and output port among unscheduled coflows and either raises
// the release-time dual (alpha) of the latest-released coflow, or raises the
// port dual (beta) of the bottleneck port until some coflow's dual constraint
// becomes tight. Per-coflow accumulators delta_k hold the beta mass charged
// to each coflow so far, so an iteration costs O(n + N) and the whole run
// O(n (n + N)) time and O(N n) memory.
//
// The accumulated dual objective is a feasible dual value and therefore a
// lower bound on the optimal total weighted completion time of the matching
// granularity.

#ifndef COFLOW_PRIMAL_DUAL_HPP_
#define COFLOW_PRIMAL_DUAL_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "coflow/model.hpp"

namespace coflow {

enum class Granularity { kFlow, kCoflow };

std::string_view to_string(Granularity g);
Granularity parse_granularity(std::string_view text);

inline constexpr double kDefaultKappa = 0.5;
inline constexpr double kDualTolerance = 1e-9;

// (d(S)^2 + d^2(S)) / (2m) over a multiset of flow sizes at one port.
double set_function_flow(std::span<const std::int64_t> sizes, int cores);

// (sum L^2 + (sum L)^2) / (2m) over per-coflow loads at one port.
double set_function_coflow(std::span<const std::int64_t> port_loads, int cores);

enum class DualBranch {
  kAlpha,
  kBeta,
  // Every remaining coflow has zero load at the bottleneck port; the coflow
  // with the smallest residual weight is placed with no dual increase.
  kDegenerate,
};

enum class PortSide { kInput, kOutput };

std::string_view to_string(DualBranch b);
std::string_view to_string(PortSide s);

struct DualStep {
  int position = 0;  // r, counts down from n to 1
  int coflow = 0;    // sigma(r)
  DualBranch branch = DualBranch::kBeta;
  PortSide side = PortSide::kOutput;
  int port = 0;                   // mu1(r) or mu2(r)
  std::int64_t bottleneck_load = 0;  // L_{mu}
  double value = 0;               // alpha or beta
  double increment = 0;           // dual objective gained this step
  // w_k - delta_k of the selected coflow just before selection, and its load
  // at the bottleneck port. Tightness: alpha == residual, or
  // beta * selected_load == residual.
  double residual = 0;
  std::int64_t selected_load = 0;
  // Smallest w - delta over all unscheduled coflows after this step's update.
  double min_residual = 0;
  // Beta steps: d(S) (resp. sum of loads) and f(S) of the charged set.
  double set_load = 0;
  double set_value = 0;
};

struct DualTrace {
  double kappa = kDefaultKappa;
  std::vector<DualStep> steps;  // steps[0] is position n
  std::vector<double> delta;    // final delta_k, indexed by coflow id - 1
  double dual_cost = 0;
};

struct Permutation {
  Granularity granularity = Granularity::kFlow;
  std::vector<int> order;  // order[0] is processed first
  double dual_cost = 0;
  DualTrace trace;

  // 1-based position of each coflow id, indexed by id - 1.
  std::vector<int> positions() const;
};

// Flow-level ordering; the beta step charges f over the individual flows at
// the bottleneck port, the alpha step credits r_k plus the largest flow of k
// at that port.
Permutation order_flow_level(const Instance& instance,
                             double kappa = kDefaultKappa);

// Coflow-level ordering; both steps work on aggregated port loads L_{port,k}.
Permutation order_coflow_level(const Instance& instance,
                               double kappa = kDefaultKappa);

Permutation order_coflows(const Instance& instance, Granularity granularity,
                          double kappa = kDefaultKappa);

// Wraps a caller-provided order (no dual information) for scheduling.
Permutation fixed_order(std::vector<int> order, Granularity granularity);

}  // namespace coflow

#endif  // COFLOW_PRIMAL_DUAL_HPP_
