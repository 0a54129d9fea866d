// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// List scheduling on m identical cores: greedy core assignment following a
// coflow permutation (per flow for FDLS, per coflow for CDLS), then a
// preemptive port-exclusive rate-1 transmission simulated event by event.

#ifndef COFLOW_SCHEDULER_HPP_
#define COFLOW_SCHEDULER_HPP_

#include <cstdint>
#include <vector>

#include "coflow/model.hpp"
#include "coflow/primal_dual.hpp"

namespace coflow {

// Position of a flow inside an Instance: coflows[coflow - 1].flows[index].
struct FlowRef {
  int coflow = 0;
  int index = 0;

  friend bool operator==(const FlowRef&, const FlowRef&) = default;
};

// Global transmission priority. Coflows follow the permutation; within a
// coflow, flow granularity uses non-increasing size and coflow granularity
// uses (input, output) order. Remaining ties break on (input, output).
std::vector<FlowRef> priority_order(const Instance& instance,
                                    const Permutation& order,
                                    Granularity granularity);

struct Assignment {
  Granularity granularity = Granularity::kFlow;
  int cores = 1;
  int ports = 1;
  // Core (1-based) of each flow, aligned with Instance::coflows[k-1].flows.
  std::vector<std::vector<int>> flow_core;
  // Coflow granularity only: core of each coflow, indexed by id - 1.
  std::vector<int> coflow_core;
  // Projected load_I(i,h) / load_O(j,h) after assignment.
  std::vector<std::int64_t> load_in;
  std::vector<std::int64_t> load_out;

  int core_of(const Instance& instance, const FlowKey& key) const;
  std::int64_t input_load(int port, int core) const {
    return load_in[static_cast<std::size_t>(port - 1) * cores + (core - 1)];
  }
  std::int64_t output_load(int port, int core) const {
    return load_out[static_cast<std::size_t>(port - 1) * cores + (core - 1)];
  }
};

// Flow-driven: each flow, in priority order, goes to the core minimizing
// load_I(i,h) + load_O(j,h); lowest core index on ties.
Assignment assign_fdls(const Instance& instance, const Permutation& order);

// Coflow-driven: each coflow goes to the core minimizing
// max_i(load_I(i,h) + L_{i,k}) + max_j(load_O(j,h) + L_{j,k}), maxima taken
// over the ports the coflow uses.
Assignment assign_cdls(const Instance& instance, const Permutation& order);

Assignment assign(const Instance& instance, const Permutation& order,
                  Granularity granularity);

struct Segment {
  double start = 0;
  double end = 0;
  FlowKey flow;
  int core = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct ScheduleResult {
  // Aligned with Instance::coflows[k-1].flows.
  std::vector<std::vector<double>> flow_completion;
  std::vector<double> coflow_completion;  // indexed by id - 1
  double objective = 0;
  // Sorted by (core, start, coflow, input, output). Empty unless requested.
  std::vector<Segment> timeline;

  double completion_of(const Instance& instance, const FlowKey& key) const;
};

struct SimulationOptions {
  bool record_timeline = false;
  // Simulate cores concurrently with OpenMP. Results are bit-identical to the
  // serial path.
  bool parallel = true;
};

// Cores never interact once flows are assigned, so each core runs its own
// event loop (releases and completions on that core only).
ScheduleResult simulate(const Instance& instance, const Permutation& order,
                        const Assignment& assignment,
                        const SimulationOptions& options = {});

// Single global event loop over every core: at each release or completion
// anywhere, every core rescans its list. Kept as the reference for simulate().
ScheduleResult simulate_reference(const Instance& instance,
                                  const Permutation& order,
                                  const Assignment& assignment,
                                  bool record_timeline = false);

struct PipelineRun {
  Permutation permutation;
  Assignment assignment;
  ScheduleResult result;
};

// order -> assign -> simulate at one granularity.
PipelineRun run_pipeline(const Instance& instance, Granularity granularity,
                         double kappa = kDefaultKappa,
                         const SimulationOptions& options = {});

}  // namespace coflow

#endif  // COFLOW_SCHEDULER_HPP_
