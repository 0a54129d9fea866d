// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include "coflow/workload.hpp"

#include <algorithm>
#include <numeric>

namespace coflow {

namespace {

constexpr int kMaxWeight = 100;
constexpr std::int64_t kDensityMaxSize = 100;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// `count` distinct values from 1..n, sorted.
std::vector<int> sample_ports(Rng& rng, int n, int count) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  for (int s = 0; s < count; ++s) {
    const int pick = static_cast<int>(uniform(rng, s, n - 1));
    std::swap(pool[s], pool[pick]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void finish_coflow(Rng& rng, Coflow& c, const GeneratorOptions& options) {
  c.weight = static_cast<double>(uniform(rng, 1, kMaxWeight));
  c.release = options.release_spread > 0 ? uniform(rng, 0, options.release_spread)
                                         : 0;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer applied over the three words.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ b);
}

std::vector<CoflowTemplate> default_mix(int ports) {
  return {
      {1, 4, 1, 10, 0.41},
      {1, 4, 10, 1000, 0.29},
      {4, ports, 1, 10, 0.09},
      {4, ports, 10, 1000, 0.21},
  };
}

TaggedInstance gen_mix_tagged(int coflows, int ports, std::uint64_t seed,
                              const GeneratorOptions& options) {
  if (ports < 4) {
    throw std::invalid_argument("mix generator needs at least 4 ports");
  }
  if (coflows < 0) throw std::invalid_argument("coflow count must be >= 0");
  const auto mix = default_mix(ports);
  Rng rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  TaggedInstance out;
  out.instance.cores = options.cores;
  out.instance.ports = ports;
  for (int k = 1; k <= coflows; ++k) {
    const double u = coin(rng);
    int t = static_cast<int>(mix.size()) - 1;
    double acc = 0;
    for (std::size_t e = 0; e < mix.size(); ++e) {
      acc += mix[e].probability;
      if (u < acc) {
        t = static_cast<int>(e);
        break;
      }
    }
    const CoflowTemplate& tpl = mix[t];
    const int w1 = static_cast<int>(uniform(rng, tpl.w_min, tpl.w_max));
    const int w2 = static_cast<int>(uniform(rng, tpl.w_min, tpl.w_max));
    const auto inputs = sample_ports(rng, ports, w1);
    const auto outputs = sample_ports(rng, ports, w2);

    Coflow c;
    c.id = k;
    c.flows.reserve(static_cast<std::size_t>(w1) * w2);
    for (int i : inputs) {
      for (int j : outputs) {
        c.flows.push_back({i, j, uniform(rng, tpl.l_min, tpl.l_max)});
      }
    }
    finish_coflow(rng, c, options);
    out.instance.coflows.push_back(std::move(c));
    out.template_index.push_back(t);
  }
  return out;
}

Instance gen_mix(int coflows, int ports, std::uint64_t seed,
                 const GeneratorOptions& options) {
  return gen_mix_tagged(coflows, ports, seed, options).instance;
}

std::string_view to_string(Density d) {
  switch (d) {
    case Density::kDense: return "dense";
    case Density::kSparse: return "sparse";
    case Density::kCombined: return "combined";
  }
  return "?";
}

Density parse_density(std::string_view text) {
  if (text == "dense") return Density::kDense;
  if (text == "sparse") return Density::kSparse;
  if (text == "combined") return Density::kCombined;
  throw std::invalid_argument("unknown density '" + std::string(text) +
                              "' (expected dense|sparse|combined)");
}

Instance gen_density(int coflows, int ports, Density mode, std::uint64_t seed,
                     const GeneratorOptions& options) {
  if (ports < 2) {
    throw std::invalid_argument("density generator needs at least 2 ports");
  }
  if (coflows < 0) throw std::invalid_argument("coflow count must be >= 0");
  Rng rng(seed);
  const int cells = ports * ports;

  Instance inst;
  inst.cores = options.cores;
  inst.ports = ports;
  std::vector<int> grid(cells);
  for (int k = 1; k <= coflows; ++k) {
    bool dense = mode == Density::kDense;
    if (mode == Density::kCombined) dense = uniform(rng, 0, 1) == 1;
    const int count = dense ? static_cast<int>(uniform(rng, ports, cells))
                            : static_cast<int>(uniform(rng, 1, ports));

    std::iota(grid.begin(), grid.end(), 0);
    for (int s = 0; s < count; ++s) {
      std::swap(grid[s], grid[uniform(rng, s, cells - 1)]);
    }
    std::sort(grid.begin(), grid.begin() + count);

    Coflow c;
    c.id = k;
    c.flows.reserve(count);
    for (int s = 0; s < count; ++s) {
      c.flows.push_back({grid[s] / ports + 1, grid[s] % ports + 1,
                         uniform(rng, 1, kDensityMaxSize)});
    }
    finish_coflow(rng, c, options);
    inst.coflows.push_back(std::move(c));
  }
  return inst;
}

Instance filter_min_flows(const Instance& instance, std::size_t threshold) {
  Instance out;
  out.cores = instance.cores;
  out.ports = instance.ports;
  for (const Coflow& c : instance.coflows) {
    if (c.flows.size() >= threshold) {
      out.coflows.push_back(c);
      out.coflows.back().id = static_cast<int>(out.coflows.size());
    }
  }
  return out;
}

}  // namespace coflow
