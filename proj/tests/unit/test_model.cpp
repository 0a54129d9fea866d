#include <algorithm>
#include <numeric>

#include "builders.hpp"
#include "checks.hpp"
#include "coflow/model.hpp"
#include "doctest.h"

using namespace coflow;
using coflow::testing::make_instance;

namespace {

bool has_message(const std::vector<Violation>& v, const std::string& text) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.message == text; });
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("loads of an empty instance are zero") {
  Instance inst;
  inst.ports = 3;
  const PortLoadTable t = compute_loads(inst);
  for (int p = 1; p <= 3; ++p) {
    CHECK(t.input_total(p) == 0);
    CHECK(t.output_total(p) == 0);
  }
}

TEST_CASE("single flow loads both of its ports") {
  const Instance inst = make_instance(1, 1, {{0, 1, {{1, 1, 4}}}});
  const PortLoadTable t = compute_loads(inst);
  CHECK(t.input_total(1) == 4);
  CHECK(t.output_total(1) == 4);
  CHECK(t.input_load(1, 1) == 4);
  CHECK(t.input_max_flow(1, 1) == 4);
  CHECK(t.input_square_sum(1, 1) == 16);
}

TEST_CASE("row and column sums") {
  const Instance inst = make_instance(1, 2, {{0, 1, {{1, 1, 2}, {1, 2, 3}}}});
  const PortLoadTable t = compute_loads(inst);
  CHECK(t.input_total(1) == 5);
  CHECK(t.output_total(1) == 2);
  CHECK(t.output_total(2) == 3);
  CHECK(t.input_max_flow(1, 1) == 3);
  CHECK(t.input_square_sum(1, 1) == 13);
}

TEST_CASE("load consistency and determinism on generated instances") {
  for (std::size_t s = 0; s < 40; ++s) {
    const Instance inst = checks::corpus_instance(s);
    const PortLoadTable a = compute_loads(inst);
    const PortLoadTable b = compute_loads(inst);
    std::int64_t demand = 0;
    for (const Coflow& c : inst.coflows) demand += c.total_size();
    std::int64_t in = 0, out = 0;
    for (int p = 1; p <= inst.ports; ++p) {
      in += a.input_total(p);
      out += a.output_total(p);
      std::int64_t row = 0;
      for (int k = 1; k <= inst.size(); ++k) {
        row += a.input_load(p, k);
        CHECK(a.input_load(p, k) == b.input_load(p, k));
        CHECK(a.output_load(p, k) == b.output_load(p, k));
      }
      CHECK(row == a.input_total(p));
    }
    CHECK(in == demand);
    CHECK(out == demand);
  }
}

TEST_CASE("well-formed instance validates") {
  const Instance inst = make_instance(2, 3, {{0, 1, {{1, 1, 2}}}, {5, 3.5, {{3, 2, 1}}}});
  CHECK(validate(inst).empty());
  CHECK_NOTHROW(require_valid(inst));
}

TEST_CASE("explicit zero demand is rejected") {
  const Instance inst = make_instance(1, 2, {{0, 1, {{1, 1, 0}}}});
  const auto v = validate(inst);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "zero demand must be absent");
  CHECK(v[0].location == "coflow 1 flow (1,1)");
  CHECK_THROWS_AS(require_valid(inst), InvalidInstance);
}

TEST_CASE("output port beyond N is rejected") {
  const Instance inst = make_instance(1, 2, {{0, 1, {{1, 3, 1}}}});
  CHECK(has_message(validate(inst), "port out of range"));
}

TEST_CASE("other violations are all reported") {
  Instance inst = make_instance(0, 2, {{-1, 0, {{1, 1, -2}, {1, 1, 3}}}});
  inst.coflows.push_back(inst.coflows[0]);
  inst.coflows[1].id = 5;
  const auto v = validate(inst);
  CHECK(has_message(v, "cores must be >= 1"));
  CHECK(has_message(v, "release must be >= 0"));
  CHECK(has_message(v, "weight must be > 0"));
  CHECK(has_message(v, "demand must be positive"));
  CHECK(has_message(v, "duplicate (input, output) pair"));
  CHECK(has_message(v, "coflow ids must be 1..n without gaps (expected 2)"));
}

TEST_CASE("canonical order sorts flows and renumbers") {
  Instance inst;
  inst.ports = 3;
  inst.coflows.push_back({7, 0, 1, {{2, 1, 1}, {1, 3, 2}, {1, 2, 3}}});
  canonicalize(inst);
  CHECK(inst.coflows[0].id == 1);
  CHECK(inst.coflows[0].flows[0] == Flow{1, 2, 3});
  CHECK(inst.coflows[0].flows[2] == Flow{2, 1, 1});
  CHECK(inst.coflows[0].max_flow_size() == 3);
  CHECK(inst.coflows[0].total_size() == 6);
}

}  // TEST_SUITE
