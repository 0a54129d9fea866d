// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// Synthetic coflow generators and the cluster trace importer.
//
// All generators are pure functions of their parameters and a 64-bit seed.
// Weights are uniform integers in [1, 100]; sizes are integer data units
// (1 unit = 1 MB, one unit per time unit at link rate).

#ifndef COFLOW_WORKLOAD_HPP_
#define COFLOW_WORKLOAD_HPP_

#include <cstdint>
#include <istream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coflow/model.hpp"

namespace coflow {

using Rng = std::mt19937_64;

// Width bounds on ports per side and size bounds on each flow, chosen with
// the given probability within a mix.
struct CoflowTemplate {
  int w_min = 1;
  int w_max = 1;
  std::int64_t l_min = 1;
  std::int64_t l_max = 1;
  double probability = 1.0;
};

// (1,4,1,10) 41%, (1,4,10,1000) 29%, (4,N,1,10) 9%, (4,N,10,1000) 21%.
std::vector<CoflowTemplate> default_mix(int ports);

struct GeneratorOptions {
  int cores = 5;
  // When positive, releases are uniform integers in [0, release_spread].
  std::int64_t release_spread = 0;
};

struct TaggedInstance {
  Instance instance;
  std::vector<int> template_index;  // mix entry used for each coflow
};

// Each coflow picks a template, draws w1 inputs and w2 outputs uniformly in
// [w_min, w_max] on distinct random ports, and places one flow on every cell
// of that w1 x w2 grid with size uniform in [l_min, l_max].
TaggedInstance gen_mix_tagged(int coflows, int ports, std::uint64_t seed,
                              const GeneratorOptions& options = {});
Instance gen_mix(int coflows, int ports, std::uint64_t seed,
                 const GeneratorOptions& options = {});

enum class Density { kDense, kSparse, kCombined };

std::string_view to_string(Density d);
Density parse_density(std::string_view text);

// Flow count M uniform in {N..N^2} (dense) or {1..N} (sparse); combined flips
// a fair coin per coflow. M distinct (i, j) cells, sizes uniform in {1..100}.
Instance gen_density(int coflows, int ports, Density mode, std::uint64_t seed,
                     const GeneratorOptions& options = {});

// One coflow of a shuffle trace, as recorded.
struct TraceCoflow {
  int id = 0;
  std::int64_t arrival_ms = 0;
  std::vector<int> mappers;                      // rack indices
  std::vector<std::pair<int, double>> reducers;  // (rack, shuffle MB)
};

struct TraceOptions {
  int cores = 5;
  std::uint64_t seed = 1;
  // Index of the first rack in the file; racks map to ports 1..N.
  int rack_base = 1;
  // Drop arrival times (all releases 0).
  bool zero_release = false;
};

class TraceParseError : public std::runtime_error {
 public:
  TraceParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: header "<machines> <coflows>", then one line per coflow
// "<id> <arrival_ms> <num_mappers> <rack>... <num_reducers> <rack>:<MB>...".
std::vector<TraceCoflow> read_trace(std::istream& in);

// Each mapper rack to reducer rack pair becomes a flow carrying
// ceil(MB / num_mappers) units (at least 1); repeated pairs are summed.
// Arrival converts to time units as round(ms * 128 / 1000).
Instance trace_to_instance(const std::vector<TraceCoflow>& trace, int ports,
                           const TraceOptions& options = {});

Instance parse_trace(std::istream& in, int ports,
                     const TraceOptions& options = {});

std::int64_t arrival_to_units(std::int64_t arrival_ms);

// Keeps coflows with at least `threshold` flows and renumbers them 1..n'.
Instance filter_min_flows(const Instance& instance, std::size_t threshold);

// Derives an independent stream seed from a base seed and stream indices.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b = 0);

}  // namespace coflow

#endif  // COFLOW_WORKLOAD_HPP_
