// Copyright 2026 The craneplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "craneplan/error.hpp"
#include "craneplan/validation.hpp"
#include "support/test_problems.hpp"

using namespace craneplan;
using craneplan::testing::ReferenceScenario;

namespace {

// Payload hanging still for `nodes - 1` seconds.
Trajectory Hover(const Scenario& sc, int nodes) {
  Trajectory t;
  for (int k = 0; k < nodes; ++k) {
    TrajectoryNode n;
    n.x_p = 0.0;
    n.state = {static_cast<double>(k), 0.0, 3.0, 0.0, 3.0, 0.0, 0.0, 0.0};
    n.upper_bound = sc.crane.h;
    t.nodes.push_back(n);
  }
  t.controls.assign(nodes - 1, Controls{0.0, sc.crane.m2 * sc.crane.g});
  t.objective = nodes - 1.0;
  return t;
}

DenseSample At(double x_p, double y_p, double theta = 0.0) {
  DenseSample s;
  s.state.x_p = x_p;
  s.state.y_p = y_p;
  s.state.l = y_p;
  s.state.theta = theta;
  return s;
}

}  // namespace

TEST_CASE("hover re-simulates to itself") {
  const Scenario sc = ReferenceScenario();
  const Trajectory t = Hover(sc, 5);
  const DenseTrajectory d = SimulateTimeDomain(t, sc);
  REQUIRE(d.node_samples.size() == 5);
  CHECK(d.samples[d.node_samples[4]].t == doctest::Approx(4.0).epsilon(1e-14));
  const TimeState& end = d.samples.back().state;
  const TimeState start{0.0, 0.0, 3.0, 0.0, 3.0, 0.0, 0.0, 0.0};
  const auto a = end.ToArray(), b = start.ToArray();
  for (int j = 0; j < kNumStates; ++j) CHECK(std::abs(a[j] - b[j]) <= 1e-12);
  // Steps never exceed T / 5000.
  for (std::size_t i = 1; i < d.samples.size(); ++i) {
    CHECK(d.samples[i].t - d.samples[i - 1].t <= 4.0 / 5000 + 1e-12);
  }
}

TEST_CASE("clearance is checked against the local ceiling") {
  const Scenario sc = ReferenceScenario();
  const std::vector<DenseSample> below{At(0.78, 1.9), At(0.8, 1.9), At(0.82, 1.9)};
  ClearanceSummary c = CheckClearance(below, sc.profile, sc.crane, sc.bounds.y_floor);
  CHECK(c.max_clearance_violation == 0.0);
  CHECK(c.max_floor_violation == 0.0);

  const std::vector<DenseSample> above{At(0.78, 2.1), At(0.8, 2.1, -0.05), At(0.82, 2.1)};
  c = CheckClearance(above, sc.profile, sc.crane, sc.bounds.y_floor);
  CHECK(c.max_clearance_violation == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(c.sway_peak == doctest::Approx(0.05));

  const std::vector<DenseSample> high{At(0.05, 0.1)};
  c = CheckClearance(high, sc.profile, sc.crane, sc.bounds.y_floor);
  CHECK(c.max_floor_violation == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("rigid-body lower bound") {
  Scenario sc = ReferenceScenario();
  CHECK(AnalyticLowerBound(sc) == doctest::Approx(2.6833).epsilon(1e-4));
  CHECK(AnalyticLowerBound(sc) == doctest::Approx(2.0 * std::sqrt(1.8)).epsilon(1e-15));
  sc.x_end = sc.x_start;
  CHECK(AnalyticLowerBound(sc) == 0.0);
  sc.x_end = sc.x_start + 4.0;
  CHECK(AnalyticLowerBound(sc) == doctest::Approx(5.3666).epsilon(1e-4));
  sc.bounds.ft_max = 0.0;
  CHECK_THROWS_AS(AnalyticLowerBound(sc), Error);
}

TEST_CASE("non-monotone node times yield an infinite report") {
  const Scenario sc = ReferenceScenario();
  Trajectory t = Hover(sc, 4);
  t.nodes[2].state.t = 0.5;
  CHECK_THROWS_AS(SimulateTimeDomain(t, sc), Error);
  const ValidationReport v = ValidateTrajectory(t, sc);
  CHECK_FALSE(v.time_monotone);
  CHECK(std::isinf(v.terminal_error));
  CHECK(std::isinf(v.max_clearance_violation));
}

TEST_CASE("a collapsing rope is a simulation blow-up") {
  const Scenario sc = ReferenceScenario();
  Trajectory t = Hover(sc, 3);
  for (TrajectoryNode& n : t.nodes) n.state.l = n.state.y_p = 0.05;
  for (Controls& c : t.controls) c.hoist_force = 8.0;
  try {
    SimulateTimeDomain(t, sc);
    FAIL("expected blow-up");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSimulationBlowup);
  }
}
