// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef COFLOW_METRICS_HPP_
#define COFLOW_METRICS_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coflow/model.hpp"
#include "coflow/scheduler.hpp"

namespace coflow {

// Sum over coflows of w_k * C_k.
double objective(const ScheduleResult& result, const Instance& instance);

class DegenerateInstance : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// objective / dual_cost. A zero dual with zero objective is ratio 1; a zero
// dual with positive objective throws DegenerateInstance.
double ratio(double objective, double dual_cost);

struct CdfPoint {
  double value = 0;
  double fraction = 0;  // share of samples <= value
};

struct Summary {
  std::size_t count = 0;
  double mean = 0;
  double min = 0;
  double max = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  std::vector<CdfPoint> cdf;  // one point per distinct value, ascending
};

inline constexpr const char* kQuantileMethod = "linear-interpolation (type 7)";

// Type-7 quantile of sorted data: h = (n - 1) p, interpolate between
// floor(h) and ceil(h).
double quantile_sorted(std::span<const double> sorted, double p);

// Throws std::invalid_argument on an empty list.
Summary summarize(std::span<const double> values);

}  // namespace coflow

#endif  // COFLOW_METRICS_HPP_
