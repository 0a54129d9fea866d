// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// Batch experiments: generate (or load) instances per parameter point, run
// ordering + assignment + simulation, and report objective / dual ratios.

#ifndef COFLOW_EXPERIMENT_HPP_
#define COFLOW_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coflow/metrics.hpp"
#include "coflow/primal_dual.hpp"
#include "coflow/workload.hpp"

namespace coflow {

enum class ExperimentKind {
  kRatioVsCoflows,
  kRatioVsCores,
  kDensity,
  kTraceThreshold,
  kBox,
  kCdf,
};

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view text);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kBox;
  Granularity granularity = Granularity::kFlow;
  std::vector<int> coflows{25};  // swept by ratio-vs-coflows, else first entry
  std::vector<int> cores{5};     // swept by ratio-vs-cores, else first entry
  int ports = 10;
  int instances = 100;  // per point; weight draws for trace-threshold
  std::uint64_t seed = 1;
  double kappa = kDefaultKappa;
  // Synthetic generator; unset means the default four-template mix. The
  // density experiment sweeps `densities` instead.
  std::optional<Density> density;
  std::vector<Density> densities{Density::kDense, Density::kSparse,
                                 Density::kCombined};
  std::int64_t release_spread = 0;
  // trace-threshold only.
  std::string trace_path;
  std::vector<std::size_t> thresholds{1};
  int rack_base = 1;
  bool parallel = true;
};

// Throws std::invalid_argument describing the first problem.
void check_config(const ExperimentConfig& config);

struct InstanceRow {
  std::string point;
  std::uint64_t seed = 0;
  std::string algorithm;  // FDLS or CDLS
  int coflows = 0;
  double objective = 0;
  double dual_cost = 0;
  double ratio = 0;
};

struct PointSummary {
  std::string point;
  Summary ratios;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<InstanceRow> rows;
  std::vector<PointSummary> points;
  // cdf kind: coflow completion times (time units) over all instances.
  std::optional<Summary> completion;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

// Columns: point,seed,algorithm,objective,dual_cost,ratio
std::string rows_to_csv(const ExperimentReport& report);
std::string summary_to_json(const ExperimentReport& report);
// Columns: point,ratio,fraction
std::string ratio_cdf_to_csv(const ExperimentReport& report);
// Columns: time_units,seconds,fraction
std::string completion_cdf_to_csv(const Summary& completion);

// instances.csv, summary.json, ratio_cdf.csv and, for cdf runs,
// completion_cdf.csv. Creates the directory if needed.
void write_report(const ExperimentReport& report, const std::string& dir);

}  // namespace coflow

#endif  // COFLOW_EXPERIMENT_HPP_
