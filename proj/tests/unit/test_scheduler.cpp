#include <cmath>
#include <vector>

#include "builders.hpp"
#include "checks.hpp"
#include "coflow/scheduler.hpp"
#include "doctest.h"

using namespace coflow;
using coflow::testing::make_instance;

namespace {

SimulationOptions with_timeline(bool parallel = true) {
  SimulationOptions o;
  o.record_timeline = true;
  o.parallel = parallel;
  return o;
}

bool identical(const ScheduleResult& a, const ScheduleResult& b) {
  return a.flow_completion == b.flow_completion &&
         a.coflow_completion == b.coflow_completion && a.objective == b.objective &&
         a.timeline == b.timeline;
}

}  // namespace

TEST_SUITE("scheduler") {

TEST_CASE("single core takes every flow") {
  const Instance inst = checks::corpus_instance(0);
  Instance one = inst;
  one.cores = 1;
  for (Granularity g : {Granularity::kFlow, Granularity::kCoflow}) {
    const Assignment a = assign(one, order_coflows(one, g), g);
    for (const auto& cores : a.flow_core) {
      for (int h : cores) CHECK(h == 1);
    }
  }
}

TEST_CASE("FDLS spreads flows that share ports") {
  // Two coflows on (1,1), processed 1 then 2: sizes 5 and 3.
  const Instance inst = make_instance(2, 1, {{0, 1, {{1, 1, 5}}}, {0, 1, {{1, 1, 3}}}});
  const Assignment a = assign_fdls(inst, fixed_order({1, 2}, Granularity::kFlow));
  CHECK(a.flow_core[0][0] == 1);
  CHECK(a.flow_core[1][0] == 2);
  CHECK(a.input_load(1, 1) == 5);
  CHECK(a.input_load(1, 2) == 3);
}

TEST_CASE("FDLS keeps disjoint flows on the lowest core") {
  const Instance inst = make_instance(2, 2, {{0, 1, {{1, 1, 6}, {2, 2, 4}}}});
  const Assignment a = assign_fdls(inst, fixed_order({1}, Granularity::kFlow));
  CHECK(a.flow_core[0] == std::vector<int>{1, 1});
}

TEST_CASE("FDLS places larger flows of a coflow first") {
  // (1,1):2 and (1,2):7 share input 1; the 7 goes first and takes core 1.
  const Instance inst = make_instance(2, 2, {{0, 1, {{1, 1, 2}, {1, 2, 7}}}});
  const Assignment a = assign_fdls(inst, fixed_order({1}, Granularity::kFlow));
  CHECK(a.flow_core[0] == std::vector<int>{2, 1});
}

TEST_CASE("CDLS moves an identical coflow to the idle core") {
  const Instance inst = make_instance(2, 1, {{0, 1, {{1, 1, 4}}}, {0, 1, {{1, 1, 4}}}});
  const Assignment a = assign_cdls(inst, fixed_order({1, 2}, Granularity::kCoflow));
  CHECK(a.coflow_core == std::vector<int>{1, 2});
}

TEST_CASE("CDLS ignores load on ports the coflow does not use") {
  const Instance inst = make_instance(2, 2, {{0, 1, {{1, 1, 8}}}, {0, 1, {{2, 2, 2}}}});
  const Assignment a = assign_cdls(inst, fixed_order({1, 2}, Granularity::kCoflow));
  CHECK(a.coflow_core == std::vector<int>{1, 1});
  CHECK(a.flow_core[1] == std::vector<int>{1});
}

TEST_CASE("assignment rejects a partial permutation") {
  const Instance inst = make_instance(1, 1, {{0, 1, {{1, 1, 1}}}, {0, 1, {{1, 1, 1}}}});
  CHECK_THROWS_AS(assign_fdls(inst, fixed_order({1}, Granularity::kFlow)),
                  std::invalid_argument);
  CHECK_THROWS_AS(assign_cdls(inst, fixed_order({1, 1}, Granularity::kCoflow)),
                  std::invalid_argument);
}

TEST_CASE("priority order by granularity") {
  const Instance inst =
      make_instance(1, 2, {{0, 1, {{1, 1, 2}, {1, 2, 7}, {2, 1, 7}}}, {0, 1, {{2, 2, 1}}}});
  const auto flow = priority_order(inst, fixed_order({2, 1}, Granularity::kFlow),
                                   Granularity::kFlow);
  const auto coflow = priority_order(inst, fixed_order({2, 1}, Granularity::kCoflow),
                                     Granularity::kCoflow);
  CHECK(flow == std::vector<FlowRef>{{2, 0}, {1, 1}, {1, 2}, {1, 0}});
  CHECK(coflow == std::vector<FlowRef>{{2, 0}, {1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("single flow completes at release plus size") {
  const Instance inst = make_instance(1, 1, {{2, 1, {{1, 1, 4}}}});
  const PipelineRun r = run_pipeline(inst, Granularity::kFlow);
  CHECK(r.result.coflow_completion[0] == 6.0);
  CHECK(r.result.objective == 6.0);
}

TEST_CASE("flows sharing an input run one after the other") {
  const Instance inst = make_instance(1, 2, {{0, 1, {{1, 1, 5}, {1, 2, 3}}}});
  const Permutation p = fixed_order({1}, Granularity::kFlow);
  const Assignment a = assign_fdls(inst, p);
  const ScheduleResult r = simulate(inst, p, a);
  CHECK(r.completion_of(inst, {1, 1, 1}) == 5.0);
  CHECK(r.completion_of(inst, {1, 2, 1}) == 8.0);
  CHECK(r.coflow_completion[0] == 8.0);
}

TEST_CASE("the same flows on different cores run together") {
  const Instance inst = make_instance(2, 2, {{0, 1, {{1, 1, 5}, {1, 2, 3}}}});
  const Permutation p = fixed_order({1}, Granularity::kFlow);
  Assignment a = assign_fdls(inst, p);
  REQUIRE(a.flow_core[0] == std::vector<int>{1, 2});
  const ScheduleResult r = simulate(inst, p, a);
  CHECK(r.completion_of(inst, {1, 1, 1}) == 5.0);
  CHECK(r.completion_of(inst, {1, 2, 1}) == 3.0);
  CHECK(r.coflow_completion[0] == 5.0);
}

TEST_CASE("a released higher-priority flow preempts at the event") {
  // Coflow 1 comes first in the order but is released at 2.
  const Instance inst = make_instance(1, 1, {{2, 1, {{1, 1, 3}}}, {0, 1, {{1, 1, 5}}}});
  const Permutation p = fixed_order({1, 2}, Granularity::kFlow);
  const ScheduleResult r = simulate(inst, p, assign_fdls(inst, p), with_timeline());
  CHECK(r.coflow_completion == std::vector<double>{5.0, 8.0});
  REQUIRE(r.timeline.size() == 3);
  CHECK(r.timeline[0] == Segment{0, 2, {1, 1, 2}, 1});
  CHECK(r.timeline[1] == Segment{2, 5, {1, 1, 1}, 1});
  CHECK(r.timeline[2] == Segment{5, 8, {1, 1, 2}, 1});
}

TEST_CASE("a blocked flow does not hold back lower-priority flows") {
  // (1,1) of coflow 2 waits for input 1, (2,1) of coflow 3 starts at once.
  const Instance inst = make_instance(
      1, 2, {{0, 1, {{1, 2, 4}}}, {0, 1, {{1, 1, 2}}}, {0, 1, {{2, 1, 3}}}});
  const Permutation p = fixed_order({1, 2, 3}, Granularity::kFlow);
  const ScheduleResult r = simulate(inst, p, assign_fdls(inst, p));
  CHECK(r.coflow_completion == std::vector<double>{4.0, 6.0, 3.0});
}

TEST_CASE("empty coflow completes at its release") {
  const Instance inst = make_instance(1, 1, {{7, 2, {}}, {0, 1, {{1, 1, 1}}}});
  const PipelineRun r = run_pipeline(inst, Granularity::kCoflow);
  CHECK(r.result.coflow_completion[0] == 7.0);
  CHECK(r.result.objective == 2 * 7.0 + 1.0);
}

TEST_CASE("simulation rejects a bad assignment") {
  const Instance inst = make_instance(2, 1, {{0, 1, {{1, 1, 1}}}});
  const Permutation p = fixed_order({1}, Granularity::kFlow);
  Assignment a = assign_fdls(inst, p);
  a.flow_core[0][0] = 3;
  CHECK_THROWS_AS(simulate(inst, p, a), std::invalid_argument);
  CHECK_THROWS_AS(simulate_reference(inst, p, a), std::invalid_argument);
  a.flow_core[0].clear();
  CHECK_THROWS_AS(simulate(inst, p, a), std::invalid_argument);
}

TEST_CASE("per-core and global-clock simulators agree bit for bit") {
  for (std::size_t s = 0; s < 120; ++s) {
    const Instance inst = checks::corpus_instance(s, 9);
    for (Granularity g : {Granularity::kFlow, Granularity::kCoflow}) {
      const Permutation p = order_coflows(inst, g);
      const Assignment a = assign(inst, p, g);
      const ScheduleResult par = simulate(inst, p, a, with_timeline(true));
      const ScheduleResult ser = simulate(inst, p, a, with_timeline(false));
      const ScheduleResult ref = simulate_reference(inst, p, a, true);
      CHECK_MESSAGE(identical(par, ser), "instance ", s);
      CHECK_MESSAGE(identical(par, ref), "instance ", s);
    }
  }
}

TEST_CASE("schedules are sound and event times integral") {
  for (std::size_t s = 0; s < 120; ++s) {
    const Instance inst = checks::corpus_instance(s, 13);
    for (Granularity g : {Granularity::kFlow, Granularity::kCoflow}) {
      const PipelineRun r = run_pipeline(inst, g, kDefaultKappa, with_timeline());
      const auto problems = checks::schedule(inst, r.permutation, r.assignment, r.result);
      CHECK_MESSAGE(problems.empty(), "instance ", s, ": ",
                    problems.empty() ? "" : problems.front());
      for (const Segment& seg : r.result.timeline) {
        CHECK(seg.start == std::floor(seg.start));
        CHECK(seg.end == std::floor(seg.end));
      }
    }
  }
}

TEST_CASE("completion bounds") {
  for (std::size_t s = 0; s < 200; ++s) {
    const Instance inst = checks::corpus_instance(s, 17);
    const PipelineRun f = run_pipeline(inst, Granularity::kFlow);
    const PipelineRun c = run_pipeline(inst, Granularity::kCoflow);
    CHECK(checks::flow_completion_bounds(inst, f.permutation, f.result).empty());
    CHECK(checks::completion_bounds(inst, c.permutation, c.result).empty());
    if (inst.cores >= 2) {
      CHECK(checks::completion_bounds(inst, f.permutation, f.result).empty());
    }
  }
}

TEST_CASE("largest-flow coflow bound can fail on one core") {
  // The per-flow bound holds; replacing d_f by the coflow's largest flow
  // under a negative (1 - 2/m) factor does not.
  const Instance inst = make_instance(
      1, 6,
      {{0, 1, {{2, 2, 10}, {4, 5, 10}}}, {0, 1, {{6, 6, 12}, {4, 3, 10}, {2, 3, 1}}}});
  const Permutation p = fixed_order({1, 2}, Granularity::kFlow);
  const ScheduleResult r = simulate(inst, p, assign_fdls(inst, p));
  CHECK(r.coflow_completion[1] == 21.0);
  CHECK(checks::completion_bound_values(inst, p)[1] == 20.0);
  CHECK(checks::flow_completion_bounds(inst, p, r).empty());
  CHECK_FALSE(checks::completion_bounds(inst, p, r).empty());
}

TEST_CASE("one core makes both granularities identical") {
  for (std::size_t s = 0; s < 40; ++s) {
    Instance inst = checks::corpus_instance(s, 21);
    inst.cores = 1;
    const Permutation p = order_flow_level(inst);
    const Assignment fa = assign_fdls(inst, p);
    const Assignment ca = assign_cdls(inst, p);
    CHECK(fa.flow_core == ca.flow_core);
    CHECK(simulate(inst, p, fa).coflow_completion.size() == inst.coflows.size());
  }
}

}  // TEST_SUITE
