// Copyright 2026 The coflow-pd Authors
// SPDX-License-Identifier: Apache-2.0

#include "coflow/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coflow {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw std::invalid_argument(where + ": missing field '" + key + "'");
  }
  try {
    if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_integer()) throw std::invalid_argument("not an integer");
    } else {
      if (!it->is_number()) throw std::invalid_argument("not a number");
    }
    return it->get<T>();
  } catch (const std::exception&) {
    throw std::invalid_argument(where + ": field '" + key + "' has wrong type");
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buf, end);
}

ordered_json instance_to_json(const Instance& instance) {
  ordered_json doc;
  doc["cores"] = instance.cores;
  doc["ports"] = instance.ports;
  doc["coflows"] = ordered_json::array();
  for (const Coflow& c : instance.coflows) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["release"] = c.release;
    jc["weight"] = number(c.weight);
    jc["flows"] = ordered_json::array();
    for (const Flow& f : c.flows) {
      jc["flows"].push_back({{"i", f.input}, {"j", f.output}, {"size", f.size}});
    }
    doc["coflows"].push_back(std::move(jc));
  }
  return doc;
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("instance must be a JSON object");
  Instance inst;
  inst.cores = field<int>(doc, "cores", "instance");
  inst.ports = field<int>(doc, "ports", "instance");
  auto it = doc.find("coflows");
  if (it == doc.end() || !it->is_array()) {
    throw std::invalid_argument("instance: 'coflows' must be an array");
  }
  for (const json& jc : *it) {
    Coflow c;
    c.id = field<int>(jc, "id", "coflow");
    const std::string where = "coflow " + std::to_string(c.id);
    c.release = field<std::int64_t>(jc, "release", where);
    c.weight = field<double>(jc, "weight", where);
    auto flows = jc.find("flows");
    if (flows == jc.end() || !flows->is_array()) {
      throw std::invalid_argument(where + ": 'flows' must be an array");
    }
    for (const json& jf : *flows) {
      c.flows.push_back({field<int>(jf, "i", where), field<int>(jf, "j", where),
                         field<std::int64_t>(jf, "size", where)});
    }
    inst.coflows.push_back(std::move(c));
  }
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return instance_from_json(doc);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

ordered_json permutation_to_json(const Permutation& p) {
  ordered_json doc;
  doc["granularity"] = std::string(to_string(p.granularity));
  doc["kappa"] = p.trace.kappa;
  doc["order"] = p.order;
  doc["dual_cost"] = p.dual_cost;
  return doc;
}

std::string trace_to_json_lines(const DualTrace& trace) {
  std::string out;
  for (const DualStep& s : trace.steps) {
    ordered_json row;
    row["position"] = s.position;
    row["coflow"] = s.coflow;
    row["branch"] = std::string(to_string(s.branch));
    row["side"] = std::string(to_string(s.side));
    row["port"] = s.port;
    row["bottleneck_load"] = s.bottleneck_load;
    row["value"] = s.value;
    row["increment"] = s.increment;
    row["residual"] = s.residual;
    row["delta"] = trace.delta.at(s.coflow - 1);
    out += row.dump();
    out += '\n';
  }
  return out;
}

ordered_json schedule_to_json(const Instance& instance,
                              const ScheduleResult& result,
                              bool include_timeline) {
  ordered_json doc;
  doc["objective"] = number(result.objective);
  doc["coflows"] = ordered_json::array();
  for (const Coflow& c : instance.coflows) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["completion"] = number(result.coflow_completion[c.id - 1]);
    jc["flows"] = ordered_json::array();
    for (std::size_t f = 0; f < c.flows.size(); ++f) {
      jc["flows"].push_back(
          {{"i", c.flows[f].input},
           {"j", c.flows[f].output},
           {"completion", number(result.flow_completion[c.id - 1][f])}});
    }
    doc["coflows"].push_back(std::move(jc));
  }
  if (include_timeline) {
    doc["timeline"] = ordered_json::array();
    for (const Segment& s : result.timeline) {
      doc["timeline"].push_back({{"start", number(s.start)},
                                 {"end", number(s.end)},
                                 {"i", s.flow.input},
                                 {"j", s.flow.output},
                                 {"k", s.flow.coflow},
                                 {"core", s.core}});
    }
  }
  return doc;
}

std::string timeline_to_csv(const std::vector<Segment>& timeline) {
  std::ostringstream out;
  out << "start,end,i,j,k,core\n";
  for (const Segment& s : timeline) {
    out << format_number(s.start) << ',' << format_number(s.end) << ','
        << s.flow.input << ',' << s.flow.output << ',' << s.flow.coflow << ','
        << s.core << '\n';
  }
  return out.str();
}

}  // namespace coflow
