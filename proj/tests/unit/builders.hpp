// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef COFLOW_TESTS_BUILDERS_HPP_
#define COFLOW_TESTS_BUILDERS_HPP_

#include <initializer_list>
#include <vector>

#include "coflow/model.hpp"

namespace coflow::testing {

struct CoflowSpec {
  std::int64_t release = 0;
  double weight = 1;
  std::vector<Flow> flows;
};

// Ids are assigned 1..n in list order; flows are sorted by (i, j).
inline Instance make_instance(int cores, int ports, std::initializer_list<CoflowSpec> coflows) {
  Instance inst;
  inst.cores = cores;
  inst.ports = ports;
  for (const CoflowSpec& s : coflows) {
    Coflow c;
    c.release = s.release;
    c.weight = s.weight;
    c.flows = s.flows;
    inst.coflows.push_back(std::move(c));
  }
  canonicalize(inst);
  return inst;
}

// Two coflows, each one unit flow on (1,1), weights 1 and 2.
inline Instance unit_pair() {
  return make_instance(1, 1, {{0, 1, {{1, 1, 1}}}, {0, 2, {{1, 1, 1}}}});
}

}  // namespace coflow::testing

#endif  // COFLOW_TESTS_BUILDERS_HPP_
