#include "coflow/experiment.hpp"
#include "doctest.h"

using namespace coflow;

namespace {

ExperimentConfig small(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  c.coflows = {8};
  c.cores = {2};
  c.instances = 6;
  c.seed = 4;
  return c;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("same config gives the same report") {
  const ExperimentConfig c = small(ExperimentKind::kBox);
  const ExperimentReport a = run_experiment(c);
  const ExperimentReport b = run_experiment(c);
  CHECK(rows_to_csv(a) == rows_to_csv(b));
  CHECK(summary_to_json(a) == summary_to_json(b));
  REQUIRE(a.rows.size() == 6);
  CHECK(a.points.size() == 1);
  CHECK(a.points[0].point == "n=8,m=2");
}

TEST_CASE("parallel batch equals serial batch") {
  for (Granularity g : {Granularity::kFlow, Granularity::kCoflow}) {
    ExperimentConfig c = small(ExperimentKind::kRatioVsCoflows);
    c.granularity = g;
    c.coflows = {2, 6, 10};
    c.parallel = true;
    const std::string par = rows_to_csv(run_experiment(c));
    c.parallel = false;
    CHECK(rows_to_csv(run_experiment(c)) == par);
  }
}

TEST_CASE("core sweep reuses instance seeds") {
  ExperimentConfig c = small(ExperimentKind::kRatioVsCores);
  c.cores = {1, 3};
  const ExperimentReport r = run_experiment(c);
  REQUIRE(r.rows.size() == 12);
  for (std::size_t s = 0; s < 6; ++s) {
    CHECK(r.rows[s].seed == r.rows[s + 6].seed);
    CHECK(r.rows[s].point == "m=1");
    CHECK(r.rows[s + 6].point == "m=3");
  }
}

TEST_CASE("density sweep labels and ratios") {
  ExperimentConfig c = small(ExperimentKind::kDensity);
  const ExperimentReport r = run_experiment(c);
  REQUIRE(r.points.size() == 3);
  CHECK(r.points[0].point == "dense");
  CHECK(r.points[1].point == "sparse");
  CHECK(r.points[2].point == "combined");
  for (const InstanceRow& row : r.rows) CHECK(row.ratio >= 1.0 - 1e-9);
}

TEST_CASE("a lone single-flow coflow on one core has ratio one") {
  // Sparse coflows on two ports hold one or two flows; the single-flow draws
  // meet the dual exactly.
  ExperimentConfig c = small(ExperimentKind::kBox);
  c.coflows = {1};
  c.cores = {1};
  c.ports = 2;
  c.density = Density::kSparse;
  c.instances = 20;
  int exact = 0;
  for (const InstanceRow& row : run_experiment(c).rows) {
    CHECK(row.ratio >= 1.0 - 1e-12);
    exact += row.ratio == doctest::Approx(1.0).epsilon(1e-12);
  }
  CHECK(exact > 0);
}

TEST_CASE("cdf run keeps completion times") {
  const ExperimentReport r = run_experiment(small(ExperimentKind::kCdf));
  REQUIRE(r.completion.has_value());
  CHECK(r.completion->count == 6 * 8);
  CHECK(completion_cdf_to_csv(*r.completion).rfind("time_units,seconds,fraction\n", 0) == 0);
  CHECK(ratio_cdf_to_csv(r).rfind("point,ratio,fraction\n", 0) == 0);
}

TEST_CASE("config errors") {
  ExperimentConfig c = small(ExperimentKind::kBox);
  c.instances = 0;
  CHECK_THROWS_AS(check_config(c), std::invalid_argument);
  c = small(ExperimentKind::kBox);
  c.kappa = 0;
  CHECK_THROWS_AS(check_config(c), std::invalid_argument);
  c = small(ExperimentKind::kBox);
  c.ports = 3;
  CHECK_THROWS_AS(check_config(c), std::invalid_argument);
  c = small(ExperimentKind::kTraceThreshold);
  CHECK_THROWS_AS(check_config(c), std::invalid_argument);
  c = small(ExperimentKind::kRatioVsCores);
  c.cores = {2, 0};
  CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
  CHECK(parse_experiment_kind("ratio-vs-cores") == ExperimentKind::kRatioVsCores);
  CHECK_THROWS_AS(parse_experiment_kind("histogram"), std::invalid_argument);
}

}  // TEST_SUITE
