// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include "coflow/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coflow {

std::int64_t Coflow::total_size() const {
  std::int64_t total = 0;
  for (const Flow& f : flows) total += f.size;
  return total;
}

std::int64_t Coflow::max_flow_size() const {
  std::int64_t best = 0;
  for (const Flow& f : flows) best = std::max(best, f.size);
  return best;
}

std::size_t Instance::flow_count() const {
  std::size_t count = 0;
  for (const Coflow& c : coflows) count += c.flows.size();
  return count;
}

bool Instance::has_releases() const {
  return std::any_of(coflows.begin(), coflows.end(),
                     [](const Coflow& c) { return c.release > 0; });
}

void canonicalize(Instance& instance) {
  int id = 1;
  for (Coflow& c : instance.coflows) {
    c.id = id++;
    std::sort(c.flows.begin(), c.flows.end(), [](const Flow& a, const Flow& b) {
      return std::tie(a.input, a.output) < std::tie(b.input, b.output);
    });
  }
}

PortLoadTable::PortLoadTable(int ports, int coflows)
    : ports_(ports),
      coflows_(coflows),
      input_(static_cast<std::size_t>(ports) * coflows, 0),
      output_(input_.size(), 0),
      input_max_(input_.size(), 0),
      output_max_(input_.size(), 0),
      input_sq_(input_.size(), 0),
      output_sq_(input_.size(), 0),
      input_total_(ports, 0),
      output_total_(ports, 0) {}

PortLoadTable compute_loads(const Instance& instance) {
  PortLoadTable table(instance.ports, instance.size());
  for (const Coflow& c : instance.coflows) {
    for (const Flow& f : c.flows) {
      const std::size_t in = table.index(f.input, c.id);
      const std::size_t out = table.index(f.output, c.id);
      table.input_[in] += f.size;
      table.output_[out] += f.size;
      table.input_max_[in] = std::max(table.input_max_[in], f.size);
      table.output_max_[out] = std::max(table.output_max_[out], f.size);
      table.input_sq_[in] += f.size * f.size;
      table.output_sq_[out] += f.size * f.size;
      table.input_total_[f.input - 1] += f.size;
      table.output_total_[f.output - 1] += f.size;
    }
  }
  return table;
}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  auto add = [&out](std::string where, std::string what) {
    out.push_back({std::move(where), std::move(what)});
  };
  if (instance.cores < 1) add("instance", "cores must be >= 1");
  if (instance.ports < 1) add("instance", "ports must be >= 1");

  for (std::size_t pos = 0; pos < instance.coflows.size(); ++pos) {
    const Coflow& c = instance.coflows[pos];
    const std::string where = "coflow " + std::to_string(c.id);
    if (c.id != static_cast<int>(pos) + 1) {
      add(where, "coflow ids must be 1..n without gaps (expected " +
                     std::to_string(pos + 1) + ")");
    }
    if (c.release < 0) add(where, "release must be >= 0");
    if (!(c.weight > 0)) add(where, "weight must be > 0");

    std::vector<std::pair<int, int>> seen;
    seen.reserve(c.flows.size());
    for (const Flow& f : c.flows) {
      std::ostringstream loc;
      loc << where << " flow (" << f.input << "," << f.output << ")";
      if (f.input < 1 || f.input > instance.ports ||
          f.output < 1 || f.output > instance.ports) {
        add(loc.str(), "port out of range");
      }
      if (f.size == 0) {
        add(loc.str(), "zero demand must be absent");
      } else if (f.size < 0) {
        add(loc.str(), "demand must be positive");
      }
      seen.emplace_back(f.input, f.output);
    }
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) {
      add(where + " flow (" + std::to_string(dup->first) + "," +
              std::to_string(dup->second) + ")",
          "duplicate (input, output) pair");
    }
  }
  return out;
}

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : violations_(std::move(violations)) {
  message_ = "invalid instance:";
  for (const Violation& v : violations_) {
    message_ += " [" + v.location + ": " + v.message + "]";
  }
}

void require_valid(const Instance& instance) {
  auto violations = validate(instance);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
}

}  // namespace coflow
