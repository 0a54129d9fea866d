// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include "coflow/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "coflow/io.hpp"
#include "coflow/scheduler.hpp"

namespace coflow {

namespace {

constexpr double kUnitsPerSecond = 128.0;

struct Point {
  std::string label;
  int coflows = 0;
  int cores = 0;
  std::optional<Density> density;
  std::size_t threshold = 0;
  // Instances depend on this key and the instance index only, so sweeps over
  // core count reuse the same instances at every point.
  std::uint64_t key = 0;
};

std::vector<Point> make_points(const ExperimentConfig& c) {
  std::vector<Point> points;
  const int n0 = c.coflows.front();
  const int m0 = c.cores.front();
  auto key_of = [](int n, std::optional<Density> d) {
    return static_cast<std::uint64_t>(n) * 16 +
           (d ? static_cast<std::uint64_t>(*d) + 1 : 0);
  };
  switch (c.kind) {
    case ExperimentKind::kRatioVsCoflows:
      for (int n : c.coflows) {
        points.push_back({"n=" + std::to_string(n), n, m0, c.density, 0,
                          key_of(n, c.density)});
      }
      break;
    case ExperimentKind::kRatioVsCores:
      for (int m : c.cores) {
        points.push_back({"m=" + std::to_string(m), n0, m, c.density, 0,
                          key_of(n0, c.density)});
      }
      break;
    case ExperimentKind::kDensity:
      for (Density d : c.densities) {
        points.push_back({std::string(to_string(d)), n0, m0, d, 0, key_of(n0, d)});
      }
      break;
    case ExperimentKind::kTraceThreshold:
      for (std::size_t t : c.thresholds) {
        points.push_back({"threshold=" + std::to_string(t), 0, m0, std::nullopt,
                          t, 0});
      }
      break;
    case ExperimentKind::kBox:
    case ExperimentKind::kCdf:
      points.push_back({"n=" + std::to_string(n0) + ",m=" + std::to_string(m0),
                        n0, m0, c.density, 0, key_of(n0, c.density)});
      break;
  }
  return points;
}

struct Outcome {
  InstanceRow row;
  std::vector<double> completions;
};

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kRatioVsCoflows: return "ratio-vs-coflows";
    case ExperimentKind::kRatioVsCores: return "ratio-vs-cores";
    case ExperimentKind::kDensity: return "density";
    case ExperimentKind::kTraceThreshold: return "trace-threshold";
    case ExperimentKind::kBox: return "box";
    case ExperimentKind::kCdf: return "cdf";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  for (auto k : {ExperimentKind::kRatioVsCoflows, ExperimentKind::kRatioVsCores,
                 ExperimentKind::kDensity, ExperimentKind::kTraceThreshold,
                 ExperimentKind::kBox, ExperimentKind::kCdf}) {
    if (text == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown experiment kind '" + std::string(text) + "'");
}

void check_config(const ExperimentConfig& c) {
  if (c.coflows.empty()) throw std::invalid_argument("coflow range is empty");
  if (c.cores.empty()) throw std::invalid_argument("core range is empty");
  for (int n : c.coflows) {
    if (n < 1) throw std::invalid_argument("coflow counts must be >= 1");
  }
  for (int m : c.cores) {
    if (m < 1) throw std::invalid_argument("core counts must be >= 1");
  }
  if (c.instances < 1) throw std::invalid_argument("instance count must be >= 1");
  if (!(c.kappa > 0)) throw std::invalid_argument("kappa must be > 0");
  if (c.kind == ExperimentKind::kTraceThreshold) {
    if (c.trace_path.empty()) throw std::invalid_argument("trace path required");
    if (c.thresholds.empty()) throw std::invalid_argument("threshold list is empty");
  } else if (c.kind == ExperimentKind::kDensity) {
    if (c.densities.empty()) throw std::invalid_argument("density list is empty");
    if (c.ports < 2) throw std::invalid_argument("ports must be >= 2");
  } else if (!c.density && c.ports < 4) {
    throw std::invalid_argument("mix generator needs ports >= 4");
  }
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  check_config(config);
  ExperimentReport report;
  report.config = config;
  const auto points = make_points(config);

  std::vector<Instance> traced;
  if (config.kind == ExperimentKind::kTraceThreshold) {
    std::ifstream in(config.trace_path);
    if (!in) throw std::runtime_error("cannot open " + config.trace_path);
    const auto raw = read_trace(in);
    traced.resize(static_cast<std::size_t>(config.instances));
    for (int s = 0; s < config.instances; ++s) {
      TraceOptions opts;
      opts.seed = derive_seed(config.seed, 0, static_cast<std::uint64_t>(s));
      opts.rack_base = config.rack_base;
      opts.zero_release = config.release_spread == 0;
      traced[s] = trace_to_instance(raw, config.ports, opts);
    }
  }

  const std::size_t per_point = static_cast<std::size_t>(config.instances);
  const std::size_t total = points.size() * per_point;
  std::vector<Outcome> outcomes(total);
  const std::string algorithm =
      config.granularity == Granularity::kFlow ? "FDLS" : "CDLS";
  const bool keep_completions = config.kind == ExperimentKind::kCdf;

  auto run_one = [&](std::size_t task) {
    const Point& pt = points[task / per_point];
    const std::size_t idx = task % per_point;
    Instance inst;
    std::uint64_t seed = 0;
    if (config.kind == ExperimentKind::kTraceThreshold) {
      seed = derive_seed(config.seed, 0, idx);
      inst = filter_min_flows(traced[idx], pt.threshold);
    } else {
      seed = derive_seed(config.seed, pt.key, idx);
      GeneratorOptions gen;
      gen.cores = pt.cores;
      gen.release_spread = config.release_spread;
      inst = pt.density ? gen_density(pt.coflows, config.ports, *pt.density, seed, gen)
                        : gen_mix(pt.coflows, config.ports, seed, gen);
    }
    inst.cores = pt.cores;

    SimulationOptions sim;
    sim.parallel = false;
    const PipelineRun run =
        run_pipeline(inst, config.granularity, config.kappa, sim);

    Outcome& out = outcomes[task];
    out.row.point = pt.label;
    out.row.seed = seed;
    out.row.algorithm = algorithm;
    out.row.coflows = inst.size();
    out.row.objective = run.result.objective;
    out.row.dual_cost = run.permutation.dual_cost;
    out.row.ratio = ratio(out.row.objective, out.row.dual_cost);
    if (keep_completions) out.completions = run.result.coflow_completion;
  };

  std::string failure;
#pragma omp parallel for schedule(dynamic) if (config.parallel)
  for (std::size_t task = 0; task < total; ++task) {
    try {
      run_one(task);
    } catch (const std::exception& e) {
#pragma omp critical(coflow_experiment_failure)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw std::runtime_error(failure);

  std::vector<double> completions;
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<double> ratios;
    for (std::size_t s = 0; s < per_point; ++s) {
      Outcome& o = outcomes[p * per_point + s];
      ratios.push_back(o.row.ratio);
      report.rows.push_back(std::move(o.row));
      completions.insert(completions.end(), o.completions.begin(),
                         o.completions.end());
    }
    report.points.push_back({points[p].label, summarize(ratios)});
  }
  if (keep_completions && !completions.empty()) {
    report.completion = summarize(completions);
  }
  return report;
}

std::string rows_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "point,seed,algorithm,objective,dual_cost,ratio\n";
  for (const InstanceRow& r : report.rows) {
    out << r.point << ',' << r.seed << ',' << r.algorithm << ','
        << format_number(r.objective) << ',' << format_number(r.dual_cost) << ','
        << format_number(r.ratio) << '\n';
  }
  return out.str();
}

std::string summary_to_json(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(to_string(c.kind));
  doc["granularity"] = std::string(to_string(c.granularity));
  doc["algorithm"] = c.granularity == Granularity::kFlow ? "FDLS" : "CDLS";
  doc["kappa"] = c.kappa;
  doc["ports"] = c.ports;
  doc["instances_per_point"] = c.instances;
  doc["seed"] = c.seed;
  doc["generator"] = c.kind == ExperimentKind::kTraceThreshold ? "trace"
                     : c.kind == ExperimentKind::kDensity      ? "density"
                     : c.density ? std::string(to_string(*c.density))
                                 : std::string("mix");
  doc["quantile_method"] = kQuantileMethod;
  doc["points"] = nlohmann::ordered_json::array();
  for (const PointSummary& p : report.points) {
    doc["points"].push_back({{"point", p.point},
                             {"count", p.ratios.count},
                             {"mean", p.ratios.mean},
                             {"min", p.ratios.min},
                             {"q1", p.ratios.q1},
                             {"median", p.ratios.median},
                             {"q3", p.ratios.q3},
                             {"max", p.ratios.max}});
  }
  if (report.completion) {
    const Summary& s = *report.completion;
    doc["completion_time_units"] = {{"count", s.count}, {"mean", s.mean},
                                    {"min", s.min},     {"median", s.median},
                                    {"max", s.max}};
  }
  return doc.dump(2) + "\n";
}

std::string ratio_cdf_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "point,ratio,fraction\n";
  for (const PointSummary& p : report.points) {
    for (const CdfPoint& q : p.ratios.cdf) {
      out << p.point << ',' << format_number(q.value) << ','
          << format_number(q.fraction) << '\n';
    }
  }
  return out.str();
}

std::string completion_cdf_to_csv(const Summary& completion) {
  std::ostringstream out;
  out << "time_units,seconds,fraction\n";
  for (const CdfPoint& q : completion.cdf) {
    out << format_number(q.value) << ',' << format_number(q.value / kUnitsPerSecond)
        << ',' << format_number(q.fraction) << '\n';
  }
  return out.str();
}

void write_report(const ExperimentReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_text_file((base / "instances.csv").string(), rows_to_csv(report));
  write_text_file((base / "summary.json").string(), summary_to_json(report));
  write_text_file((base / "ratio_cdf.csv").string(), ratio_cdf_to_csv(report));
  if (report.completion) {
    write_text_file((base / "completion_cdf.csv").string(),
                    completion_cdf_to_csv(*report.completion));
  }
}

}  // namespace coflow
