// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <limits>
#include <numeric>

#include "coflow/scheduler.hpp"
#include "sim_common.hpp"

namespace coflow {

namespace {

using detail::CoreFlow;

struct CoreOutput {
  std::vector<double> completion;  // aligned with the core's list
  std::vector<Segment> segments;
};

// Event loop for one core. `flows` is in priority order; at every release or
// completion the list is rescanned from the top and a flow starts iff both of
// its ports are still free, which preempts lower-priority flows at event
// boundaries only.
void run_core(const std::vector<CoreFlow>& flows, int ports, int core,
              bool record_timeline, CoreOutput& out) {
  const std::size_t n = flows.size();
  out.completion.assign(n, 0.0);
  out.segments.clear();
  if (n == 0) return;

  std::vector<int> pending(n);
  std::iota(pending.begin(), pending.end(), 0);
  std::stable_sort(pending.begin(), pending.end(), [&flows](int a, int b) {
    return flows[a].release < flows[b].release;
  });

  std::vector<double> remaining(n);
  for (std::size_t f = 0; f < n; ++f) remaining[f] = flows[f].size;
  std::vector<double> opened(n, 0.0);
  std::vector<char> running(n, 0);
  std::vector<unsigned> in_mark(ports + 1, 0), out_mark(ports + 1, 0);
  unsigned epoch = 0;

  std::vector<int> active;
  std::vector<int> selected;
  active.reserve(n);
  selected.reserve(std::min<std::size_t>(n, ports));

  auto emit = [&](int f, double end) {
    if (!record_timeline || end <= opened[f]) return;
    const CoreFlow& cf = flows[f];
    out.segments.push_back(
        {opened[f], end, FlowKey{cf.input, cf.output, cf.ref.coflow}, core});
  };

  std::size_t next_pending = 0;
  double now = flows[pending[0]].release;
  while (true) {
    bool arrived = false;
    while (next_pending < n && flows[pending[next_pending]].release <= now) {
      active.push_back(pending[next_pending++]);
      arrived = true;
    }
    if (arrived) std::sort(active.begin(), active.end());
    if (active.empty()) {
      if (next_pending == n) break;
      now = flows[pending[next_pending]].release;
      continue;
    }

    ++epoch;
    selected.clear();
    for (int f : active) {
      const CoreFlow& cf = flows[f];
      if (in_mark[cf.input] != epoch && out_mark[cf.output] != epoch) {
        in_mark[cf.input] = epoch;
        out_mark[cf.output] = epoch;
        selected.push_back(f);
        if (!running[f]) {
          running[f] = 1;
          opened[f] = now;
        }
      } else if (running[f]) {
        running[f] = 0;
        emit(f, now);
      }
    }

    double next = std::numeric_limits<double>::infinity();
    if (next_pending < n) next = flows[pending[next_pending]].release;
    for (int f : selected) next = std::min(next, now + remaining[f]);
    detail::check_integral(next);

    const double dt = next - now;
    bool finished = false;
    for (int f : selected) {
      remaining[f] -= dt;
      if (remaining[f] <= detail::kTimeEpsilon) {
        remaining[f] = 0;
        out.completion[f] = next;
        running[f] = 0;
        emit(f, next);
        finished = true;
      }
    }
    if (finished) {
      std::erase_if(active, [&](int f) { return remaining[f] == 0; });
    }
    now = next;
  }
}

}  // namespace

ScheduleResult simulate(const Instance& instance, const Permutation& order,
                        const Assignment& assignment,
                        const SimulationOptions& options) {
  const auto lists = detail::build_core_lists(instance, order, assignment);
  std::vector<CoreOutput> outputs(lists.size());
  const int cores = static_cast<int>(lists.size());

#pragma omp parallel for schedule(dynamic) if (options.parallel && cores > 1)
  for (int h = 0; h < cores; ++h) {
    run_core(lists[h], instance.ports, h + 1, options.record_timeline,
             outputs[h]);
  }

  ScheduleResult result = detail::empty_result(instance);
  for (int h = 0; h < cores; ++h) {
    const auto& list = lists[h];
    for (std::size_t f = 0; f < list.size(); ++f) {
      result.flow_completion[list[f].ref.coflow - 1][list[f].ref.index] =
          outputs[h].completion[f];
    }
    result.timeline.insert(result.timeline.end(), outputs[h].segments.begin(),
                           outputs[h].segments.end());
  }
  detail::finalize(instance, result);
  return result;
}

double ScheduleResult::completion_of(const Instance& instance,
                                     const FlowKey& key) const {
  const Coflow& c = instance.coflow(key.coflow);
  for (std::size_t f = 0; f < c.flows.size(); ++f) {
    if (c.flows[f].input == key.input && c.flows[f].output == key.output) {
      return flow_completion[key.coflow - 1][f];
    }
  }
  throw std::out_of_range("flow not in instance");
}

}  // namespace coflow
