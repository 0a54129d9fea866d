// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "coflow/workload.hpp"

namespace coflow {

namespace {

constexpr std::int64_t kLinkUnitsPerSecond = 128;  // 128 MBps, 1 unit = 1 MB

template <typename T>
T next_token(std::istringstream& in, int line, const char* what) {
  T value{};
  if (!(in >> value)) {
    throw TraceParseError(line, std::string("expected ") + what);
  }
  return value;
}

}  // namespace

std::int64_t arrival_to_units(std::int64_t arrival_ms) {
  return std::llround(static_cast<double>(arrival_ms) * kLinkUnitsPerSecond /
                      1000.0);
}

std::vector<TraceCoflow> read_trace(std::istream& in) {
  std::string text;
  int line = 0;
  long long declared = -1;
  std::vector<TraceCoflow> out;

  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream tokens(text);
    if (declared < 0) {
      next_token<long long>(tokens, line, "machine count");
      declared = next_token<long long>(tokens, line, "coflow count");
      if (declared < 0) throw TraceParseError(line, "negative coflow count");
      continue;
    }

    TraceCoflow c;
    c.id = next_token<int>(tokens, line, "coflow id");
    c.arrival_ms = next_token<std::int64_t>(tokens, line, "arrival time");
    if (c.arrival_ms < 0) throw TraceParseError(line, "negative arrival time");
    const int mappers = next_token<int>(tokens, line, "mapper count");
    if (mappers < 0) throw TraceParseError(line, "negative mapper count");
    for (int s = 0; s < mappers; ++s) {
      c.mappers.push_back(next_token<int>(tokens, line, "mapper rack"));
    }
    const int reducers = next_token<int>(tokens, line, "reducer count");
    if (reducers < 0) throw TraceParseError(line, "negative reducer count");
    for (int s = 0; s < reducers; ++s) {
      const auto tok = next_token<std::string>(tokens, line, "reducer rack:MB");
      const auto colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size()) {
        throw TraceParseError(line, "malformed reducer '" + tok + "'");
      }
      std::size_t used_rack = 0, used_mb = 0;
      int rack = 0;
      double mb = 0;
      try {
        rack = std::stoi(tok.substr(0, colon), &used_rack);
        mb = std::stod(tok.substr(colon + 1), &used_mb);
      } catch (const std::exception&) {
        throw TraceParseError(line, "malformed reducer '" + tok + "'");
      }
      if (used_rack != colon || used_mb != tok.size() - colon - 1) {
        throw TraceParseError(line, "malformed reducer '" + tok + "'");
      }
      if (!(mb > 0)) throw TraceParseError(line, "shuffle size must be > 0");
      c.reducers.emplace_back(rack, mb);
    }
    std::string extra;
    if (tokens >> extra) {
      throw TraceParseError(line, "unexpected trailing token '" + extra + "'");
    }
    out.push_back(std::move(c));
  }

  if (declared < 0) throw TraceParseError(line, "missing header");
  if (static_cast<long long>(out.size()) != declared) {
    throw TraceParseError(line, "header declares " + std::to_string(declared) +
                                    " coflows, found " +
                                    std::to_string(out.size()));
  }
  return out;
}

Instance trace_to_instance(const std::vector<TraceCoflow>& trace, int ports,
                           const TraceOptions& options) {
  Instance inst;
  inst.cores = options.cores;
  inst.ports = ports;
  Rng rng(options.seed);
  std::uniform_int_distribution<int> weight(1, 100);

  for (const TraceCoflow& t : trace) {
    Coflow c;
    c.id = static_cast<int>(inst.coflows.size()) + 1;
    c.release = options.zero_release ? 0 : arrival_to_units(t.arrival_ms);
    c.weight = weight(rng);

    std::map<std::pair<int, int>, std::int64_t> cells;
    if (!t.mappers.empty()) {
      const double mappers = static_cast<double>(t.mappers.size());
      for (const auto& [rack, mb] : t.reducers) {
        const std::int64_t share =
            std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(mb / mappers)));
        const int j = rack - options.rack_base + 1;
        for (int mapper : t.mappers) {
          cells[{mapper - options.rack_base + 1, j}] += share;
        }
      }
    }
    for (const auto& [cell, size] : cells) {
      c.flows.push_back({cell.first, cell.second, size});
    }
    inst.coflows.push_back(std::move(c));
  }
  require_valid(inst);
  return inst;
}

Instance parse_trace(std::istream& in, int ports, const TraceOptions& options) {
  return trace_to_instance(read_trace(in), ports, options);
}

}  // namespace coflow
