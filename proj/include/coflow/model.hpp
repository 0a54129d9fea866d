// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// Core domain types: coflows with sparse demand matrices on m identical
// N x N non-blocking network cores.
//
// All port, coflow, and core indices are 1-based. A coflow's demand matrix is
// stored as a list of flows sorted by (input, output); entries with zero
// demand are absent.

#ifndef COFLOW_MODEL_HPP_
#define COFLOW_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace coflow {

struct FlowKey {
  int input = 0;
  int output = 0;
  int coflow = 0;

  friend auto operator<=>(const FlowKey&, const FlowKey&) = default;
};

struct Flow {
  int input = 0;
  int output = 0;
  std::int64_t size = 0;  // data units

  friend bool operator==(const Flow&, const Flow&) = default;
};

struct Coflow {
  int id = 0;
  std::int64_t release = 0;  // time units
  double weight = 1.0;
  std::vector<Flow> flows;  // sorted by (input, output), sizes > 0

  std::int64_t total_size() const;
  std::int64_t max_flow_size() const;

  friend bool operator==(const Coflow&, const Coflow&) = default;
};

struct Instance {
  int cores = 1;
  int ports = 1;
  std::vector<Coflow> coflows;  // coflows[k - 1].id == k

  int size() const { return static_cast<int>(coflows.size()); }
  const Coflow& coflow(int id) const { return coflows.at(id - 1); }
  std::size_t flow_count() const;
  bool has_releases() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Sorts flows of every coflow into canonical (input, output) order and
// renumbers coflow ids densely in list order.
void canonicalize(Instance& instance);

// Per-port, per-coflow aggregated loads. O(N n) memory.
class PortLoadTable {
 public:
  PortLoadTable() = default;
  PortLoadTable(int ports, int coflows);

  int ports() const { return ports_; }
  int coflows() const { return coflows_; }

  // L_{i,k}: load of coflow k at input port i.
  std::int64_t input_load(int port, int coflow) const {
    return input_[index(port, coflow)];
  }
  // L_{j,k}: load of coflow k at output port j.
  std::int64_t output_load(int port, int coflow) const {
    return output_[index(port, coflow)];
  }
  std::int64_t input_total(int port) const { return input_total_[port - 1]; }
  std::int64_t output_total(int port) const { return output_total_[port - 1]; }

  // Largest single flow of coflow k leaving input port i (0 if none).
  std::int64_t input_max_flow(int port, int coflow) const {
    return input_max_[index(port, coflow)];
  }
  std::int64_t output_max_flow(int port, int coflow) const {
    return output_max_[index(port, coflow)];
  }
  // Sum of squared flow sizes of coflow k at the port.
  std::int64_t input_square_sum(int port, int coflow) const {
    return input_sq_[index(port, coflow)];
  }
  std::int64_t output_square_sum(int port, int coflow) const {
    return output_sq_[index(port, coflow)];
  }

 private:
  friend PortLoadTable compute_loads(const Instance& instance);

  std::size_t index(int port, int coflow) const {
    return static_cast<std::size_t>(port - 1) * coflows_ + (coflow - 1);
  }

  int ports_ = 0;
  int coflows_ = 0;
  std::vector<std::int64_t> input_;
  std::vector<std::int64_t> output_;
  std::vector<std::int64_t> input_max_;
  std::vector<std::int64_t> output_max_;
  std::vector<std::int64_t> input_sq_;
  std::vector<std::int64_t> output_sq_;
  std::vector<std::int64_t> input_total_;
  std::vector<std::int64_t> output_total_;
};

PortLoadTable compute_loads(const Instance& instance);

struct Violation {
  std::string location;
  std::string message;
};

// Every invariant violation in the instance; empty means valid.
std::vector<Violation> validate(const Instance& instance);

// Throws InvalidInstance listing the violations when validate() is non-empty.
void require_valid(const Instance& instance);

class InvalidInstance : public std::exception {
 public:
  explicit InvalidInstance(std::vector<Violation> violations);
  const char* what() const noexcept override { return message_.c_str(); }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
  std::string message_;
};

}  // namespace coflow

#endif  // COFLOW_MODEL_HPP_
