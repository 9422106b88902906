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
#include <filesystem>
#include <random>
#include <sstream>
#include <string>

#include <doctest.h>

#include "craneplan/error.hpp"
#include "craneplan/planner.hpp"
#include "craneplan/scenario_io.hpp"
#include "craneplan/trajectory_io.hpp"
#include "support/test_problems.hpp"

using namespace craneplan;
using craneplan::testing::ReferenceScenario;

namespace {

ErrorCode ParseError(const std::string& text, std::string* message = nullptr) {
  try {
    ParseScenario(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("document parsed");
  return ErrorCode::kInvalidArgument;
}

std::string Replace(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

std::string ReferenceText() { return RenderScenario(ReferenceScenario()); }

int CountLines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("bundled scenario") {
  const Scenario sc = ReferenceScenario();
  CHECK(sc.crane.m1 == 1.2);
  CHECK(sc.crane.m2 == 0.6);
  CHECK(sc.intervals == 100);
  CHECK(sc.profile.width() == 0.08);
  CHECK(sc.profile.centers() == std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
  CHECK(sc.profile.heights() == std::vector<double>{0.5, 1.0, 1.0, 1.0, 2.0, 2.0, 2.4, 2.5, 1.0});
  CHECK(sc.boundary.initial == SpatialState{0, 0, 3, 0, 3, 0, 0, 0});
  CHECK(sc.bounds.fh_max == 8.0);
  CHECK(sc.epsilon_v == 0.01);
}

TEST_CASE("render and parse round trip") {
  CHECK(ParseScenario(ReferenceText()) == ReferenceScenario());

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Scenario sc = ReferenceScenario();
    sc.crane.m1 = 0.5 + U(rng);
    sc.crane.g = 9.0 + U(rng);
    sc.x_end = 1.0 + U(rng);
    sc.bounds.theta_max = 0.05 + 0.1 * U(rng);
    sc.bounds.ft_min = -U(rng) - 0.1;
    if (trial % 2) sc.bounds.v_max = 1.0 + U(rng);
    std::vector<double> centers, heights;
    const int n = static_cast<int>(U(rng) * 5);
    for (int i = 0; i < n; ++i) {
      centers.push_back(0.2 * (i + 1) + 0.01 * U(rng));
      heights.push_back(2.0 * U(rng));
    }
    sc.profile = StackProfile(centers, heights, 0.05 + 0.05 * U(rng));
    sc.intervals = 2 + trial;
    sc.solver.tol = 1e-8 * (1.0 + U(rng));
    sc.solver.barrier_shrink = 0.1 + 0.5 * U(rng);
    CHECK(ParseScenario(RenderScenario(sc)) == sc);
  }
}

TEST_CASE("solver section is optional") {
  std::string text = ReferenceText();
  text = text.substr(0, text.find("[solver]"));
  const Scenario sc = ParseScenario(text);
  CHECK(sc.intervals == 100);
  CHECK(sc.solver == SolverOptions{});
}

TEST_CASE("parse errors name the key and line") {
  std::string msg;
  SUBCASE("missing section") {
    std::string text = ReferenceText();
    const auto a = text.find("[stacks]"), b = text.find("[solver]");
    text.erase(a, b - a);
    CHECK(ParseError(text, &msg) == ErrorCode::kMissingKey);
    CHECK(msg.find("stacks") != std::string::npos);
  }
  SUBCASE("missing key") {
    const std::string text = Replace(ReferenceText(), "Fh_max = 8\n", "");
    CHECK(ParseError(text, &msg) == ErrorCode::kMissingKey);
    CHECK(msg.find("Fh_max") != std::string::npos);
  }
  SUBCASE("length mismatch") {
    const std::string text = Replace(ReferenceText(), "2.5, 1\n", "2.5\n");
    CHECK(ParseError(text, &msg) == ErrorCode::kLengthMismatch);
    CHECK(msg.find("line") != std::string::npos);
    CHECK(msg.find("heights") != std::string::npos);
  }
  SUBCASE("bad number") {
    const std::string text = Replace(ReferenceText(), "m2 = 0.59999999999999998", "m2 = 0.6kg");
    CHECK(ParseError(text, &msg) == ErrorCode::kBadNumber);
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("m2") != std::string::npos);
  }
  SUBCASE("inverted bounds") {
    const std::string text = Replace(ReferenceText(), "l_max = 4.5", "l_max = -1");
    CHECK(ParseError(text, &msg) == ErrorCode::kBoundsInverted);
    CHECK(msg.find("l_max") != std::string::npos);
  }
  SUBCASE("unknown key") {
    const std::string text = Replace(ReferenceText(), "[path]\n", "[path]\nx_middle = 0.5\n");
    CHECK(ParseError(text, &msg) == ErrorCode::kInvalidArgument);
    CHECK(msg.find("x_middle") != std::string::npos);
  }
  SUBCASE("unreadable file") {
    try {
      LoadScenario("/nonexistent/scenario.scn");
      FAIL("loaded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kIo);
    }
  }
}

TEST_CASE("trajectory CSV") {
  const Scenario sc = ReferenceScenario();
  const PlanResult plan = Plan(sc);
  REQUIRE(plan.trajectory);
  std::ostringstream out;
  WriteTrajectoryCsv(*plan.trajectory, out);
  const std::string csv = out.str();
  CHECK(csv.substr(0, csv.find('\n')) == "x_p,t,v_p,y_p,w_p,l,l_dot,theta,theta_dot,F_t,F_h,s,y_bound");
  CHECK(CountLines(csv) == 102);

  std::istringstream in(csv);
  const Trajectory back = ReadTrajectoryCsv(in);
  REQUIRE(back.nodes.size() == 101);
  CHECK(back.nodes[0].state.t == 0.0);
  CHECK(back.nodes[0].state.theta == 0.0);
  CHECK(back.nodes[80].x_p == doctest::Approx(0.8));
  CHECK(back.nodes[80].upper_bound == 2.0);
  CHECK(back.nodes[80].stack_height == 2.5);
  CHECK(back.objective == doctest::Approx(plan.trajectory->objective).epsilon(1e-8));
  for (int k = 0; k < 100; ++k) {
    CHECK(back.controls[k].trolley_force ==
          doctest::Approx(plan.trajectory->controls[k].trolley_force).epsilon(1e-8));
  }
  // The last row repeats the final interval's controls.
  const std::string last = csv.substr(csv.rfind('\n', csv.size() - 2) + 1);
  const std::string prev_tail = csv.substr(0, csv.rfind('\n', csv.size() - 2));
  const std::string prev = prev_tail.substr(prev_tail.rfind('\n') + 1);
  auto controls_of = [](const std::string& row) {
    std::string s = row;
    for (int i = 0; i < 9; ++i) s = s.substr(s.find(',') + 1);
    return s.substr(0, s.rfind(',', s.rfind(',') - 1));
  };
  CHECK(controls_of(last) == controls_of(prev));
}

TEST_CASE("CSV reader rejects malformed input") {
  std::istringstream wrong_header("x_p,t\n0,0\n");
  CHECK_THROWS_AS(ReadTrajectoryCsv(wrong_header), Error);
  std::istringstream bad_cell(std::string("x_p,t,v_p,y_p,w_p,l,l_dot,theta,theta_dot,F_t,F_h,s,y_bound\n") +
                              "0,0,0,3,0,3,0,0,0,abc,0,0,4.5\n0.5,1,0,3,0,3,0,0,0,0,0,0,4.5\n");
  try {
    ReadTrajectoryCsv(bad_cell);
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadNumber);
  }
  CHECK_THROWS_AS(ReadTrajectoryCsv(std::filesystem::path("/nonexistent.csv")), Error);
}

TEST_CASE("profile CSV") {
  const Scenario sc = ReferenceScenario();
  std::ostringstream out;
  WriteProfileCsv(sc, out);
  const std::string csv = out.str();
  CHECK(csv.substr(0, csv.find('\n')) == "x_p,s,bound");
  CHECK(CountLines(csv) == 1001);
  CHECK(csv.substr(csv.rfind('\n', csv.size() - 2) + 1) == "1,0,4.5\n");
}

TEST_CASE("report document") {
  Scenario sc = ReferenceScenario();
  sc.intervals = 20;
  const PlanResult plan = Plan(sc);
  const std::string json = RenderReportJson(plan);
  CHECK(json.find("\"status\": \"converged\"") != std::string::npos);
  CHECK(json.find("\"num_variables\": 208") != std::string::npos);
  CHECK(json.find("\"terminal_error\"") != std::string::npos);

  sc.bounds.v_max = 0.0;
  const PlanResult failed = Plan(sc);
  CHECK_FALSE(failed.trajectory);
  const std::string fj = RenderReportJson(failed);
  CHECK(fj.find("\"status\": \"infeasible\"") != std::string::npos);
  CHECK(fj.find("\"validation\": null") != std::string::npos);
}

TEST_CASE("pre-solve checks") {
  Scenario sc = ReferenceScenario();
  CheckResult c = CheckScenario(sc);
  CHECK(c.feasible);
  CHECK(c.num_variables == 1008);

  sc.profile = StackProfile({0.1, 0.5}, {1.0, 4.6}, 0.08);
  c = CheckScenario(sc);
  CHECK_FALSE(c.feasible);
  CHECK(c.message.find("stack 1") != std::string::npos);
  CHECK(c.message.find("4.6") != std::string::npos);

  sc = ReferenceScenario();
  sc.bounds.v_max = 0.0;
  c = CheckScenario(sc);
  CHECK_FALSE(c.feasible);
  CHECK(c.message.find("empty box") != std::string::npos);
}
