// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// Desk-scale baselines bracketing the optimum.

#ifndef COFLOW_ORACLE_HPP_
#define COFLOW_ORACLE_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coflow/model.hpp"
#include "coflow/primal_dual.hpp"

namespace coflow {

struct OracleLimits {
  int max_coflows = 6;
  int max_ports = 3;
  int max_cores = 2;
  // Upper bound on permutations x assignments simulated.
  std::uint64_t max_schedules = 20'000'000;
};

struct OracleResult {
  double best_cost = 0;      // best list schedule found; >= OPT
  double lower_bound = 0;    // trivial_lower_bound(); <= OPT
  std::uint64_t schedules_examined = 0;
  std::vector<int> best_order;
  std::vector<std::vector<int>> best_cores;  // aligned with coflow flows
};

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search over coflow permutations and core assignments (per flow
// at flow granularity, per coflow at coflow granularity), simulating each
// with the list scheduler. Core 1 is fixed for the first assigned item since
// cores are interchangeable. Ties keep the lexicographically first order.
OracleResult enumerate_best(const Instance& instance, Granularity granularity,
                            const OracleLimits& limits = {});

// sum_k w_k * max(r_k + max flow of k, max_i L_{i,k} / m, max_j L_{j,k} / m).
double trivial_lower_bound(const Instance& instance);

}  // namespace coflow

#endif  // COFLOW_ORACLE_HPP_
