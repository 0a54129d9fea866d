// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include "coflow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coflow {

double objective(const ScheduleResult& result, const Instance& instance) {
  if (result.coflow_completion.size() != instance.coflows.size()) {
    throw std::invalid_argument("schedule result is missing coflow completions");
  }
  double total = 0;
  for (const Coflow& c : instance.coflows) {
    total += c.weight * result.coflow_completion[c.id - 1];
  }
  return total;
}

double ratio(double objective, double dual_cost) {
  if (dual_cost > 0) return objective / dual_cost;
  if (dual_cost == 0 && objective == 0) return 1.0;
  throw DegenerateInstance("degenerate instance: dual cost " +
                           std::to_string(dual_cost) + " with objective " +
                           std::to_string(objective));
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize of empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  Summary s;
  s.count = sorted.size();
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
           static_cast<double>(sorted.size());
  s.min = sorted.front();
  s.max = sorted.back();
  s.q1 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.5);
  s.q3 = quantile_sorted(sorted, 0.75);

  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    s.cdf.push_back({sorted[i], static_cast<double>(i + 1) / n});
  }
  return s;
}

}  // namespace coflow
