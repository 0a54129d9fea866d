// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// Shared plumbing for the two simulators.

#ifndef COFLOW_SRC_SIM_COMMON_HPP_
#define COFLOW_SRC_SIM_COMMON_HPP_

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "coflow/scheduler.hpp"

namespace coflow::detail {

struct CoreFlow {
  FlowRef ref;
  int input = 0;
  int output = 0;
  double release = 0;
  double size = 0;
};

inline constexpr double kTimeEpsilon = 1e-9;

// Per-core flow lists in transmission priority order. Validates that the
// assignment covers the instance and stays within [1, m].
inline std::vector<std::vector<CoreFlow>> build_core_lists(
    const Instance& instance, const Permutation& order,
    const Assignment& assignment) {
  if (assignment.flow_core.size() != instance.coflows.size()) {
    throw std::invalid_argument("assignment does not match instance coflows");
  }
  for (const Coflow& c : instance.coflows) {
    const auto& cores = assignment.flow_core[c.id - 1];
    if (cores.size() != c.flows.size()) {
      throw std::invalid_argument("assignment does not cover every flow of coflow " +
                                  std::to_string(c.id));
    }
    for (int h : cores) {
      if (h < 1 || h > instance.cores) {
        throw std::invalid_argument("core index " + std::to_string(h) +
                                    " out of range in coflow " +
                                    std::to_string(c.id));
      }
    }
  }

  std::vector<std::vector<CoreFlow>> lists(instance.cores);
  for (const FlowRef& ref :
       priority_order(instance, order, assignment.granularity)) {
    const Coflow& c = instance.coflows[ref.coflow - 1];
    const Flow& f = c.flows[ref.index];
    const int h = assignment.flow_core[ref.coflow - 1][ref.index];
    lists[h - 1].push_back({ref, f.input, f.output,
                            static_cast<double>(c.release),
                            static_cast<double>(f.size)});
  }
  return lists;
}

inline ScheduleResult empty_result(const Instance& instance) {
  ScheduleResult r;
  r.flow_completion.resize(instance.coflows.size());
  for (const Coflow& c : instance.coflows) {
    r.flow_completion[c.id - 1].assign(c.flows.size(), 0.0);
  }
  return r;
}

// Integer sizes and releases at rate 1 only ever produce integer event times.
inline void check_integral(double t) {
  if (std::abs(t - std::round(t)) > kTimeEpsilon) {
    throw std::logic_error("non-integral event time " + std::to_string(t));
  }
}

inline void finalize(const Instance& instance, ScheduleResult& r) {
  r.coflow_completion.assign(instance.coflows.size(), 0.0);
  r.objective = 0;
  for (const Coflow& c : instance.coflows) {
    double done = static_cast<double>(c.release);
    for (double t : r.flow_completion[c.id - 1]) done = std::max(done, t);
    r.coflow_completion[c.id - 1] = done;
    r.objective += c.weight * done;
  }
  std::sort(r.timeline.begin(), r.timeline.end(),
            [](const Segment& a, const Segment& b) {
              return std::tie(a.core, a.start, a.flow.coflow, a.flow.input,
                              a.flow.output) <
                     std::tie(b.core, b.start, b.flow.coflow, b.flow.input,
                              b.flow.output);
            });
}

}  // namespace coflow::detail

#endif  // COFLOW_SRC_SIM_COMMON_HPP_
