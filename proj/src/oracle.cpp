// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include "coflow/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "coflow/scheduler.hpp"

namespace coflow {

namespace {

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> cores;
};

}  // namespace

double trivial_lower_bound(const Instance& instance) {
  const PortLoadTable loads = compute_loads(instance);
  const double m = instance.cores;
  double total = 0;
  for (const Coflow& c : instance.coflows) {
    double bound = static_cast<double>(c.release + c.max_flow_size());
    for (int p = 1; p <= instance.ports; ++p) {
      bound = std::max(bound, static_cast<double>(loads.input_load(p, c.id)) / m);
      bound = std::max(bound, static_cast<double>(loads.output_load(p, c.id)) / m);
    }
    total += c.weight * bound;
  }
  return total;
}

OracleResult enumerate_best(const Instance& instance, Granularity granularity,
                            const OracleLimits& limits) {
  require_valid(instance);
  const int n = instance.size();
  if (n > limits.max_coflows || instance.ports > limits.max_ports ||
      instance.cores > limits.max_cores) {
    throw OracleRefused("instance exceeds oracle caps (n<=" +
                        std::to_string(limits.max_coflows) + ", N<=" +
                        std::to_string(limits.max_ports) + ", m<=" +
                        std::to_string(limits.max_cores) + ")");
  }

  // Items that receive a core: every flow, or every coflow.
  const std::size_t items = granularity == Granularity::kFlow
                                ? instance.flow_count()
                                : static_cast<std::size_t>(n);
  std::uint64_t per_order = 1;
  for (std::size_t s = 1; s < items; ++s) {
    per_order *= static_cast<std::uint64_t>(instance.cores);
    if (per_order > limits.max_schedules) break;
  }
  std::uint64_t orders = 1;
  for (int s = 2; s <= n; ++s) orders *= static_cast<std::uint64_t>(s);
  if (per_order > limits.max_schedules ||
      orders * per_order > limits.max_schedules) {
    throw OracleRefused("enumeration would exceed " +
                        std::to_string(limits.max_schedules) + " schedules");
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Flattened (coflow, flow index) list for flow granularity.
  std::vector<std::pair<int, int>> flat;
  for (const Coflow& c : instance.coflows) {
    for (std::size_t f = 0; f < c.flows.size(); ++f) {
      flat.emplace_back(c.id, static_cast<int>(f));
    }
  }

  const int m = instance.cores;
  std::vector<Candidate> best(perms.size());
  SimulationOptions sim;
  sim.parallel = false;

#pragma omp parallel for schedule(dynamic)
  for (std::size_t p = 0; p < perms.size(); ++p) {
    const Permutation order = fixed_order(perms[p], granularity);
    Assignment a;
    a.granularity = granularity;
    a.cores = m;
    a.ports = instance.ports;
    a.flow_core.resize(n);
    for (const Coflow& c : instance.coflows) {
      a.flow_core[c.id - 1].assign(c.flows.size(), 1);
    }
    if (granularity == Granularity::kCoflow) a.coflow_core.assign(n, 1);

    // Mixed-radix counter over items 1..items-1; item 0 stays on core 1.
    std::vector<int> digit(items, 0);
    while (true) {
      if (granularity == Granularity::kFlow) {
        for (std::size_t s = 0; s < items; ++s) {
          a.flow_core[flat[s].first - 1][flat[s].second] = digit[s] + 1;
        }
      } else {
        for (int k = 0; k < n; ++k) {
          a.coflow_core[k] = digit[k] + 1;
          std::fill(a.flow_core[k].begin(), a.flow_core[k].end(), digit[k] + 1);
        }
      }
      const double cost = simulate(instance, order, a, sim).objective;
      if (cost < best[p].cost) {
        best[p].cost = cost;
        best[p].cores = a.flow_core;
      }

      std::size_t s = 1;
      while (s < items && ++digit[s] == m) digit[s++] = 0;
      if (s >= items) break;
    }
  }

  OracleResult out;
  out.lower_bound = trivial_lower_bound(instance);
  out.schedules_examined = orders * per_order;
  out.best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < perms.size(); ++p) {
    if (best[p].cost < out.best_cost) {
      out.best_cost = best[p].cost;
      out.best_order = perms[p];
      out.best_cores = best[p].cores;
    }
  }
  return out;
}

}  // namespace coflow
