// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include "coflow/primal_dual.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace coflow {

std::string_view to_string(Granularity g) {
  return g == Granularity::kFlow ? "flow" : "coflow";
}

Granularity parse_granularity(std::string_view text) {
  if (text == "flow") return Granularity::kFlow;
  if (text == "coflow") return Granularity::kCoflow;
  throw std::invalid_argument("unknown granularity '" + std::string(text) +
                              "' (expected flow|coflow)");
}

std::string_view to_string(DualBranch b) {
  switch (b) {
    case DualBranch::kAlpha: return "alpha";
    case DualBranch::kBeta: return "beta";
    case DualBranch::kDegenerate: return "degenerate";
  }
  return "?";
}

std::string_view to_string(PortSide s) {
  return s == PortSide::kInput ? "input" : "output";
}

namespace {

// Sizes fit comfortably in a double's 53-bit mantissa; squares of the sums
// are taken in floating point to avoid int64 overflow on trace-scale loads.
double set_function(double sum, double square_sum, int cores) {
  return (sum * sum + square_sum) / (2.0 * cores);
}

void check_cores(int cores) {
  if (cores < 1) throw std::invalid_argument("core count must be >= 1");
}

}  // namespace

double set_function_flow(std::span<const std::int64_t> sizes, int cores) {
  check_cores(cores);
  double sum = 0, sq = 0;
  for (std::int64_t s : sizes) {
    sum += static_cast<double>(s);
    sq += static_cast<double>(s) * static_cast<double>(s);
  }
  return set_function(sum, sq, cores);
}

double set_function_coflow(std::span<const std::int64_t> port_loads,
                           int cores) {
  // Same algebra as the flow version with each coflow's port load standing
  // in for one flow.
  return set_function_flow(port_loads, cores);
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(order.size(), 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    pos[order[p] - 1] = static_cast<int>(p) + 1;
  }
  return pos;
}

namespace {

Permutation run_ordering(const Instance& instance, double kappa,
                         Granularity granularity) {
  if (!(kappa > 0)) throw std::invalid_argument("kappa must be > 0");
  check_cores(instance.cores);

  const int n = instance.size();
  const int ports = instance.ports;
  const double m = instance.cores;
  const PortLoadTable loads = compute_loads(instance);

  Permutation result;
  result.granularity = granularity;
  result.order.assign(n, 0);
  result.trace.kappa = kappa;
  result.trace.delta.assign(n, 0.0);
  if (n == 0) return result;

  std::vector<std::int64_t> input_total(ports), output_total(ports);
  for (int p = 1; p <= ports; ++p) {
    input_total[p - 1] = loads.input_total(p);
    output_total[p - 1] = loads.output_total(p);
  }
  std::vector<double> delta(n, 0.0);
  std::vector<char> alive(n, 1);

  auto port_load = [&](PortSide side, int port, int k) {
    return side == PortSide::kInput ? loads.input_load(port, k)
                                    : loads.output_load(port, k);
  };

  double dual_cost = 0;
  result.trace.steps.reserve(n);

  for (int r = n; r >= 1; --r) {
    int mu1 = 1, mu2 = 1;
    for (int p = 2; p <= ports; ++p) {
      if (input_total[p - 1] > input_total[mu1 - 1]) mu1 = p;
      if (output_total[p - 1] > output_total[mu2 - 1]) mu2 = p;
    }
    int latest = 0;
    for (int k = 1; k <= n; ++k) {
      if (!alive[k - 1]) continue;
      if (latest == 0 || instance.coflows[k - 1].release >
                             instance.coflows[latest - 1].release) {
        latest = k;
      }
    }

    DualStep step;
    step.position = r;
    if (input_total[mu1 - 1] > output_total[mu2 - 1]) {
      step.side = PortSide::kInput;
      step.port = mu1;
      step.bottleneck_load = input_total[mu1 - 1];
    } else {
      step.side = PortSide::kOutput;
      step.port = mu2;
      step.bottleneck_load = output_total[mu2 - 1];
    }

    const Coflow& late = instance.coflows[latest - 1];
    const double threshold =
        kappa * static_cast<double>(step.bottleneck_load) / m;

    if (static_cast<double>(late.release) > threshold) {
      step.branch = DualBranch::kAlpha;
      step.coflow = latest;
      step.residual = late.weight - delta[latest - 1];
      step.selected_load = port_load(step.side, step.port, latest);
      step.value = step.residual;
      std::int64_t span = 0;
      if (granularity == Granularity::kFlow) {
        span = step.side == PortSide::kInput
                   ? loads.input_max_flow(step.port, latest)
                   : loads.output_max_flow(step.port, latest);
      } else {
        span = step.selected_load;
      }
      step.increment =
          step.value * static_cast<double>(late.release + span);
    } else {
      int chosen = 0;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int k = 1; k <= n; ++k) {
        if (!alive[k - 1]) continue;
        const std::int64_t load = port_load(step.side, step.port, k);
        if (load <= 0) continue;
        const double ratio = (instance.coflows[k - 1].weight - delta[k - 1]) /
                             static_cast<double>(load);
        if (ratio < best_ratio) {
          best_ratio = ratio;
          chosen = k;
        }
      }

      if (chosen == 0) {
        step.branch = DualBranch::kDegenerate;
        double best = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= n; ++k) {
          if (!alive[k - 1]) continue;
          const double res = instance.coflows[k - 1].weight - delta[k - 1];
          if (res < best) {
            best = res;
            chosen = k;
          }
        }
        step.coflow = chosen;
        step.residual = best;
        step.value = 0;
        step.increment = 0;
      } else {
        step.branch = DualBranch::kBeta;
        step.coflow = chosen;
        step.selected_load = port_load(step.side, step.port, chosen);
        step.residual = instance.coflows[chosen - 1].weight - delta[chosen - 1];
        step.value = best_ratio;

        double sum = 0, square_sum = 0;
        for (int k = 1; k <= n; ++k) {
          if (!alive[k - 1]) continue;
          const std::int64_t load = port_load(step.side, step.port, k);
          sum += static_cast<double>(load);
          if (granularity == Granularity::kFlow) {
            square_sum += static_cast<double>(
                step.side == PortSide::kInput
                    ? loads.input_square_sum(step.port, k)
                    : loads.output_square_sum(step.port, k));
          } else {
            square_sum += static_cast<double>(load) * static_cast<double>(load);
          }
          if (k != chosen) delta[k - 1] += step.value * static_cast<double>(load);
        }
        step.set_load = sum;
        step.set_value = set_function(sum, square_sum, instance.cores);
        step.increment = step.value * step.set_value;
      }
    }

    const int picked = step.coflow;
    alive[picked - 1] = 0;
    result.order[r - 1] = picked;
    result.trace.delta[picked - 1] = delta[picked - 1];
    for (const Flow& f : instance.coflows[picked - 1].flows) {
      input_total[f.input - 1] -= f.size;
      output_total[f.output - 1] -= f.size;
    }

    double min_res = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= n; ++k) {
      if (alive[k - 1]) {
        min_res = std::min(min_res, instance.coflows[k - 1].weight - delta[k - 1]);
      }
    }
    step.min_residual = r > 1 ? min_res : 0.0;

    dual_cost += step.increment;
    result.trace.steps.push_back(step);
  }

  result.dual_cost = dual_cost;
  result.trace.dual_cost = dual_cost;
  return result;
}

}  // namespace

Permutation order_flow_level(const Instance& instance, double kappa) {
  return run_ordering(instance, kappa, Granularity::kFlow);
}

Permutation order_coflow_level(const Instance& instance, double kappa) {
  return run_ordering(instance, kappa, Granularity::kCoflow);
}

Permutation order_coflows(const Instance& instance, Granularity granularity,
                          double kappa) {
  return run_ordering(instance, kappa, granularity);
}

Permutation fixed_order(std::vector<int> order, Granularity granularity) {
  Permutation p;
  p.granularity = granularity;
  p.order = std::move(order);
  p.trace.delta.assign(p.order.size(), 0.0);
  return p;
}

}  // namespace coflow
