// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

// JSON and CSV formats.
//
// Instance:
//   {"cores": m, "ports": N, "coflows": [{"id": k, "release": r,
//    "weight": w, "flows": [{"i": .., "j": .., "size": ..}, ...]}, ...]}
// Indices are 1-based. Integral weights are written as JSON integers.

#ifndef COFLOW_IO_HPP_
#define COFLOW_IO_HPP_

#include <iosfwd>
#include <string>

#include "coflow/model.hpp"
#include "coflow/primal_dual.hpp"
#include "coflow/scheduler.hpp"
#include "json.hpp"

namespace coflow {

nlohmann::ordered_json instance_to_json(const Instance& instance);
// Throws std::invalid_argument on schema errors; does not validate
// invariants (see validate()).
Instance instance_from_json(const nlohmann::json& doc);

std::string serialize_instance(const Instance& instance);
Instance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

nlohmann::ordered_json permutation_to_json(const Permutation& p);
// One JSON object per ordering step, newline separated.
std::string trace_to_json_lines(const DualTrace& trace);

nlohmann::ordered_json schedule_to_json(const Instance& instance,
                                        const ScheduleResult& result,
                                        bool include_timeline);
// Header "start,end,i,j,k,core".
std::string timeline_to_csv(const std::vector<Segment>& timeline);

// Shortest round-trip formatting for reported numbers.
std::string format_number(double value);

}  // namespace coflow

#endif  // COFLOW_IO_HPP_
