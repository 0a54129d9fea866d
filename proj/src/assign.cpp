// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "coflow/scheduler.hpp"

namespace coflow {

namespace {

void check_order(const Instance& instance, const Permutation& order) {
  const int n = instance.size();
  if (static_cast<int>(order.order.size()) != n) {
    throw std::invalid_argument("permutation does not cover all coflows");
  }
  std::vector<char> seen(n, 0);
  for (int k : order.order) {
    if (k < 1 || k > n || seen[k - 1]) {
      throw std::invalid_argument("order is not a permutation of 1..n");
    }
    seen[k - 1] = 1;
  }
}

Assignment empty_assignment(const Instance& instance, Granularity g) {
  Assignment a;
  a.granularity = g;
  a.cores = instance.cores;
  a.ports = instance.ports;
  a.flow_core.resize(instance.coflows.size());
  for (const Coflow& c : instance.coflows) {
    a.flow_core[c.id - 1].assign(c.flows.size(), 0);
  }
  const std::size_t cells =
      static_cast<std::size_t>(instance.ports) * instance.cores;
  a.load_in.assign(cells, 0);
  a.load_out.assign(cells, 0);
  return a;
}

}  // namespace

std::vector<FlowRef> priority_order(const Instance& instance,
                                    const Permutation& order,
                                    Granularity granularity) {
  check_order(instance, order);
  std::vector<FlowRef> out;
  out.reserve(instance.flow_count());
  std::vector<int> idx;
  for (int k : order.order) {
    const Coflow& c = instance.coflows[k - 1];
    idx.resize(c.flows.size());
    for (std::size_t f = 0; f < idx.size(); ++f) idx[f] = static_cast<int>(f);
    if (granularity == Granularity::kFlow) {
      std::stable_sort(idx.begin(), idx.end(), [&c](int a, int b) {
        const Flow& fa = c.flows[a];
        const Flow& fb = c.flows[b];
        if (fa.size != fb.size) return fa.size > fb.size;
        return std::tie(fa.input, fa.output) < std::tie(fb.input, fb.output);
      });
    } else {
      std::stable_sort(idx.begin(), idx.end(), [&c](int a, int b) {
        return std::tie(c.flows[a].input, c.flows[a].output) <
               std::tie(c.flows[b].input, c.flows[b].output);
      });
    }
    for (int f : idx) out.push_back({k, f});
  }
  return out;
}

int Assignment::core_of(const Instance& instance, const FlowKey& key) const {
  const Coflow& c = instance.coflow(key.coflow);
  for (std::size_t f = 0; f < c.flows.size(); ++f) {
    if (c.flows[f].input == key.input && c.flows[f].output == key.output) {
      return flow_core[key.coflow - 1][f];
    }
  }
  throw std::out_of_range("flow not in instance");
}

Assignment assign_fdls(const Instance& instance, const Permutation& order) {
  Assignment a = empty_assignment(instance, Granularity::kFlow);
  const int m = instance.cores;
  for (const FlowRef& ref : priority_order(instance, order, Granularity::kFlow)) {
    const Flow& f = instance.coflows[ref.coflow - 1].flows[ref.index];
    const std::size_t in_row = static_cast<std::size_t>(f.input - 1) * m;
    const std::size_t out_row = static_cast<std::size_t>(f.output - 1) * m;
    int best = 0;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    for (int h = 0; h < m; ++h) {
      const std::int64_t cost = a.load_in[in_row + h] + a.load_out[out_row + h];
      if (cost < best_cost) {
        best_cost = cost;
        best = h;
      }
    }
    a.flow_core[ref.coflow - 1][ref.index] = best + 1;
    a.load_in[in_row + best] += f.size;
    a.load_out[out_row + best] += f.size;
  }
  return a;
}

Assignment assign_cdls(const Instance& instance, const Permutation& order) {
  check_order(instance, order);
  Assignment a = empty_assignment(instance, Granularity::kCoflow);
  a.coflow_core.assign(instance.coflows.size(), 0);
  const int m = instance.cores;

  std::vector<std::int64_t> in_load(instance.ports), out_load(instance.ports);
  std::vector<int> in_ports, out_ports;
  for (int k : order.order) {
    const Coflow& c = instance.coflows[k - 1];
    in_ports.clear();
    out_ports.clear();
    for (const Flow& f : c.flows) {
      if (in_load[f.input - 1] == 0) in_ports.push_back(f.input);
      if (out_load[f.output - 1] == 0) out_ports.push_back(f.output);
      in_load[f.input - 1] += f.size;
      out_load[f.output - 1] += f.size;
    }

    int best = 0;
    std::int64_t best_score = std::numeric_limits<std::int64_t>::max();
    for (int h = 0; h < m; ++h) {
      std::int64_t in_max = 0, out_max = 0;
      for (int i : in_ports) {
        in_max = std::max(in_max, a.load_in[static_cast<std::size_t>(i - 1) * m + h] +
                                      in_load[i - 1]);
      }
      for (int j : out_ports) {
        out_max = std::max(out_max, a.load_out[static_cast<std::size_t>(j - 1) * m + h] +
                                        out_load[j - 1]);
      }
      if (in_max + out_max < best_score) {
        best_score = in_max + out_max;
        best = h;
      }
    }

    a.coflow_core[k - 1] = best + 1;
    std::fill(a.flow_core[k - 1].begin(), a.flow_core[k - 1].end(), best + 1);
    for (int i : in_ports) {
      a.load_in[static_cast<std::size_t>(i - 1) * m + best] += in_load[i - 1];
      in_load[i - 1] = 0;
    }
    for (int j : out_ports) {
      a.load_out[static_cast<std::size_t>(j - 1) * m + best] += out_load[j - 1];
      out_load[j - 1] = 0;
    }
  }
  return a;
}

Assignment assign(const Instance& instance, const Permutation& order,
                  Granularity granularity) {
  return granularity == Granularity::kFlow ? assign_fdls(instance, order)
                                           : assign_cdls(instance, order);
}

PipelineRun run_pipeline(const Instance& instance, Granularity granularity,
                         double kappa, const SimulationOptions& options) {
  PipelineRun run;
  run.permutation = order_coflows(instance, granularity, kappa);
  run.assignment = assign(instance, run.permutation, granularity);
  run.result = simulate(instance, run.permutation, run.assignment, options);
  return run;
}

}  // namespace coflow
