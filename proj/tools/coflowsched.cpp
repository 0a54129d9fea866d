// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// coflowsched: generate instances, order and schedule them, import cluster
// traces, and run ratio experiments.
//
// Every command writes to stdout unless --out names a directory, in which case
// fixed file names are used inside it. Failures exit nonzero and print one
// JSON error object to stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coflow/experiment.hpp"
#include "coflow/io.hpp"
#include "coflow/metrics.hpp"
#include "coflow/oracle.hpp"
#include "coflow/scheduler.hpp"
#include "coflow/workload.hpp"
#include "json.hpp"

namespace {

using namespace coflow;

void emit(const std::string& out_dir, const std::string& name,
          const std::string& text) {
  if (out_dir.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(out_dir);
  write_text_file((std::filesystem::path(out_dir) / name).string(), text);
}

Instance load_valid(const std::string& path) {
  Instance inst = read_instance_file(path);
  require_valid(inst);
  return inst;
}

int fail(const std::string& command, const std::string& type,
         const std::string& message) {
  nlohmann::ordered_json err;
  err["error"] = type;
  err["command"] = command;
  err["message"] = message;
  std::cerr << err.dump() << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primal-dual coflow ordering and list scheduling on identical parallel cores"};
  app.require_subcommand(1);

  std::string out_dir;
  std::string granularity = "flow";
  double kappa = kDefaultKappa;
  std::uint64_t seed = 1;
  std::string instance_path;

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic instance");
  int gen_coflows = 25, gen_ports = 10, gen_cores = 5;
  std::string gen_density_name;
  std::int64_t gen_spread = 0;
  gen->add_option("--coflows", gen_coflows, "Number of coflows")->capture_default_str();
  gen->add_option("--ports", gen_ports, "Ports per side (N)")->capture_default_str();
  gen->add_option("--cores", gen_cores, "Network cores (m)")->capture_default_str();
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--density", gen_density_name, "dense|sparse|combined (default: template mix)");
  gen->add_option("--release-spread", gen_spread,
                  "Releases uniform in [0, spread] time units")->capture_default_str();
  gen->add_option("--out", out_dir, "Output directory (writes instance.json)");

  // order
  auto* ord = app.add_subcommand("order", "Compute the primal-dual coflow order");
  bool emit_trace = false;
  ord->add_option("--instance", instance_path, "Instance JSON")->required();
  ord->add_option("--granularity", granularity, "flow|coflow")->capture_default_str();
  ord->add_option("--kappa", kappa, "Alpha/beta threshold parameter")->capture_default_str();
  ord->add_flag("--emit-trace", emit_trace, "Also emit per-step dual trace (JSON lines)");
  ord->add_option("--out", out_dir, "Output directory (permutation.json, dual_trace.jsonl)");

  // schedule
  auto* sch = app.add_subcommand("schedule", "Order, assign and simulate an instance");
  bool emit_timeline = false;
  bool use_reference = false;
  sch->add_option("--instance", instance_path, "Instance JSON")->required();
  sch->add_option("--granularity", granularity, "flow|coflow")->capture_default_str();
  sch->add_option("--kappa", kappa, "Alpha/beta threshold parameter")->capture_default_str();
  sch->add_flag("--emit-timeline", emit_timeline, "Include transmission segments");
  sch->add_flag("--reference", use_reference, "Use the serial global-clock simulator");
  sch->add_option("--out", out_dir, "Output directory (schedule.json, timeline.csv)");

  // trace-import
  auto* imp = app.add_subcommand("trace-import", "Convert a shuffle trace to an instance");
  std::string trace_path;
  int imp_ports = 150, imp_cores = 5, rack_base = 1;
  std::size_t threshold = 1;
  bool zero_release = false;
  imp->add_option("--trace", trace_path, "Trace text file")->required();
  imp->add_option("--ports", imp_ports, "Rack count (N)")->capture_default_str();
  imp->add_option("--cores", imp_cores, "Network cores (m)")->capture_default_str();
  imp->add_option("--seed", seed, "Weight RNG seed")->capture_default_str();
  imp->add_option("--threshold", threshold, "Keep coflows with at least this many flows")
      ->capture_default_str();
  imp->add_option("--rack-base", rack_base, "Index of the first rack in the file")
      ->capture_default_str();
  imp->add_flag("--zero-release", zero_release, "Ignore arrival times");
  imp->add_option("--out", out_dir, "Output directory (writes instance.json)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a ratio experiment");
  ExperimentConfig cfg;
  std::string kind = "box";
  std::string exp_density;
  std::vector<std::size_t> thresholds;
  bool serial = false;
  exp->add_option("--kind", kind,
                  "ratio-vs-coflows|ratio-vs-cores|density|trace-threshold|box|cdf")
      ->capture_default_str();
  exp->add_option("--granularity", granularity, "flow|coflow")->capture_default_str();
  exp->add_option("--coflows", cfg.coflows, "Coflow count(s)")->delimiter(',');
  exp->add_option("--cores", cfg.cores, "Core count(s)")->delimiter(',');
  exp->add_option("--ports", cfg.ports, "Ports per side (N)")->capture_default_str();
  exp->add_option("--instances", cfg.instances, "Instances per point")->capture_default_str();
  exp->add_option("--seed", seed, "Base seed")->capture_default_str();
  exp->add_option("--kappa", kappa, "Alpha/beta threshold parameter")->capture_default_str();
  exp->add_option("--density", exp_density,
                  "Generator for non-density kinds: dense|sparse|combined (default: mix)");
  exp->add_option("--threshold", thresholds, "Flow-count threshold(s)")->delimiter(',');
  exp->add_option("--trace", cfg.trace_path, "Trace file for trace-threshold");
  exp->add_option("--rack-base", cfg.rack_base, "Index of the first rack in the trace")
      ->capture_default_str();
  exp->add_option("--release-spread", cfg.release_spread,
                  "Synthetic releases uniform in [0, spread]")->capture_default_str();
  exp->add_flag("--serial", serial, "Disable instance-level parallelism");
  exp->add_option("--out", out_dir, "Report directory")->required();

  // oracle-check (debugging aid, not listed in help)
  auto* orc = app.add_subcommand("oracle-check", "Exhaustive baseline for tiny instances");
  orc->group("");
  orc->add_option("--instance", instance_path, "Instance JSON")->required();
  orc->add_option("--granularity", granularity, "flow|coflow")->capture_default_str();
  orc->add_option("--kappa", kappa, "Alpha/beta threshold parameter")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*gen) {
      GeneratorOptions opts;
      opts.cores = gen_cores;
      opts.release_spread = gen_spread;
      const Instance inst =
          gen_density_name.empty()
              ? gen_mix(gen_coflows, gen_ports, seed, opts)
              : gen_density(gen_coflows, gen_ports,
                            parse_density(gen_density_name), seed, opts);
      emit(out_dir, "instance.json", serialize_instance(inst));
    } else if (*ord) {
      const Instance inst = load_valid(instance_path);
      const Permutation p =
          order_coflows(inst, parse_granularity(granularity), kappa);
      emit(out_dir, "permutation.json", permutation_to_json(p).dump(2) + "\n");
      if (emit_trace) {
        emit(out_dir, "dual_trace.jsonl", trace_to_json_lines(p.trace));
      }
    } else if (*sch) {
      const Instance inst = load_valid(instance_path);
      const Granularity g = parse_granularity(granularity);
      const Permutation p = order_coflows(inst, g, kappa);
      const Assignment a = assign(inst, p, g);
      SimulationOptions sim;
      sim.record_timeline = emit_timeline;
      const ScheduleResult r = use_reference
                                   ? simulate_reference(inst, p, a, emit_timeline)
                                   : simulate(inst, p, a, sim);
      nlohmann::ordered_json doc;
      doc["granularity"] = std::string(to_string(g));
      doc["algorithm"] = g == Granularity::kFlow ? "FDLS" : "CDLS";
      doc["order"] = p.order;
      doc["dual_cost"] = p.dual_cost;
      doc["ratio"] = ratio(r.objective, p.dual_cost);
      doc["schedule"] = schedule_to_json(inst, r, emit_timeline && out_dir.empty());
      emit(out_dir, "schedule.json", doc.dump(2) + "\n");
      if (emit_timeline && !out_dir.empty()) {
        emit(out_dir, "timeline.csv", timeline_to_csv(r.timeline));
      }
    } else if (*imp) {
      std::ifstream in(trace_path);
      if (!in) throw std::runtime_error("cannot open " + trace_path);
      TraceOptions opts;
      opts.cores = imp_cores;
      opts.seed = seed;
      opts.rack_base = rack_base;
      opts.zero_release = zero_release;
      const Instance inst =
          filter_min_flows(parse_trace(in, imp_ports, opts), threshold);
      emit(out_dir, "instance.json", serialize_instance(inst));
    } else if (*exp) {
      cfg.kind = parse_experiment_kind(kind);
      cfg.granularity = parse_granularity(granularity);
      cfg.seed = seed;
      cfg.kappa = kappa;
      cfg.parallel = !serial;
      if (!exp_density.empty()) cfg.density = parse_density(exp_density);
      if (!thresholds.empty()) cfg.thresholds = thresholds;
      const ExperimentReport report = run_experiment(cfg);
      write_report(report, out_dir);
      for (const PointSummary& p : report.points) {
        std::cout << p.point << " mean=" << format_number(p.ratios.mean)
                  << " q1=" << format_number(p.ratios.q1)
                  << " median=" << format_number(p.ratios.median)
                  << " q3=" << format_number(p.ratios.q3) << '\n';
      }
    } else if (*orc) {
      const Instance inst = load_valid(instance_path);
      const Granularity g = parse_granularity(granularity);
      const OracleResult best = enumerate_best(inst, g);
      const PipelineRun run = run_pipeline(inst, g, kappa);
      nlohmann::ordered_json doc;
      doc["granularity"] = std::string(to_string(g));
      doc["best_cost"] = best.best_cost;
      doc["best_order"] = best.best_order;
      doc["lower_bound"] = best.lower_bound;
      doc["dual_cost"] = run.permutation.dual_cost;
      doc["algorithm_objective"] = run.result.objective;
      doc["schedules_examined"] = best.schedules_examined;
      std::cout << doc.dump(2) << '\n';
    }
  } catch (const InvalidInstance& e) {
    return fail(command, "invalid-instance", e.what());
  } catch (const TraceParseError& e) {
    return fail(command, "trace-parse", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(command, "invalid-argument", e.what());
  } catch (const std::exception& e) {
    return fail(command, "runtime", e.what());
  }
  return 0;
}
