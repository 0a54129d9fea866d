// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// Straightforward global-clock simulator. Quadratic in the number of flows;
// used to cross-check simulate() and in the benchmark.

#include <limits>

#include "coflow/scheduler.hpp"
#include "sim_common.hpp"

namespace coflow {

ScheduleResult simulate_reference(const Instance& instance,
                                  const Permutation& order,
                                  const Assignment& assignment,
                                  bool record_timeline) {
  const auto lists = detail::build_core_lists(instance, order, assignment);
  ScheduleResult result = detail::empty_result(instance);

  struct Live {
    detail::CoreFlow flow;
    int core;
    double remaining;
    bool running = false;
    double opened = 0;
    bool done = false;
  };
  std::vector<Live> flows;
  for (int h = 0; h < static_cast<int>(lists.size()); ++h) {
    for (const auto& cf : lists[h]) flows.push_back({cf, h + 1, cf.size});
  }
  if (flows.empty()) {
    detail::finalize(instance, result);
    return result;
  }

  const int ports = instance.ports;
  const int cores = instance.cores;
  auto slot = [cores](int port, int core) {
    return static_cast<std::size_t>(port) * cores + (core - 1);
  };

  double now = std::numeric_limits<double>::infinity();
  for (const Live& l : flows) now = std::min(now, l.flow.release);

  std::size_t left = flows.size();
  std::vector<char> in_busy, out_busy;
  while (left > 0) {
    in_busy.assign(static_cast<std::size_t>(ports + 1) * cores, 0);
    out_busy.assign(in_busy.size(), 0);

    // Flows are grouped by core, each group already in priority order.
    for (Live& l : flows) {
      if (l.done || l.flow.release > now) continue;
      const std::size_t in = slot(l.flow.input, l.core);
      const std::size_t out = slot(l.flow.output, l.core);
      const bool go = !in_busy[in] && !out_busy[out];
      if (go) {
        in_busy[in] = out_busy[out] = 1;
        if (!l.running) {
          l.running = true;
          l.opened = now;
        }
      } else if (l.running) {
        l.running = false;
        if (record_timeline && now > l.opened) {
          result.timeline.push_back(
              {l.opened, now,
               FlowKey{l.flow.input, l.flow.output, l.flow.ref.coflow}, l.core});
        }
      }
    }

    double next = std::numeric_limits<double>::infinity();
    for (const Live& l : flows) {
      if (l.done) continue;
      if (l.flow.release > now) next = std::min(next, l.flow.release);
      if (l.running) next = std::min(next, now + l.remaining);
    }
    detail::check_integral(next);

    for (Live& l : flows) {
      if (!l.running) continue;
      l.remaining -= next - now;
      if (l.remaining <= detail::kTimeEpsilon) {
        l.remaining = 0;
        l.running = false;
        l.done = true;
        --left;
        result.flow_completion[l.flow.ref.coflow - 1][l.flow.ref.index] = next;
        if (record_timeline) {
          result.timeline.push_back(
              {l.opened, next,
               FlowKey{l.flow.input, l.flow.output, l.flow.ref.coflow}, l.core});
        }
      }
    }
    now = next;
  }

  detail::finalize(instance, result);
  return result;
}

}  // namespace coflow
