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

#include <algorithm>
#include <random>
#include <vector>

#include <doctest.h>

#include "craneplan/error.hpp"
#include "craneplan/stack_profile.hpp"
#include "craneplan/transcription.hpp"

using namespace craneplan;

namespace {

StackProfile Reference() {
  return StackProfile({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9},
                      {0.5, 1.0, 1.0, 1.0, 2.0, 2.0, 2.4, 2.5, 1.0}, 0.08);
}

}  // namespace

TEST_CASE("stack heights") {
  const StackProfile p = Reference();
  CHECK(p.HeightAt(0.5) == 2.0);
  CHECK(p.HeightAt(0.05) == 0.0);
  CHECK(p.HeightAt(0.66) == 2.4);  // closed left edge of the stack at 0.7
  CHECK(p.HeightAt(0.74) == 2.4);
  CHECK(p.HeightAt(0.95) == 0.0);
  CHECK(p.max_height() == 2.5);
}

TEST_CASE("payload ceiling") {
  const StackProfile p = Reference();
  const CraneParams params;
  CHECK(PayloadUpperBound(p, params, 0.8) == 2.0);
  CHECK(PayloadUpperBound(p, params, 0.05) == 4.5);
  CHECK(PayloadUpperBound(p, params, 0.5) == 2.5);
  CHECK_THROWS_AS(PayloadUpperBound(StackProfile({0.5}, {4.6}, 0.08), params, 0.5, 0.15), Error);
}

TEST_CASE("sampled bounds") {
  const CraneParams params;
  SUBCASE("single stack") {
    const StackProfile p({0.5}, {2.0}, 0.08);
    const std::vector<double> grid{0.45, 0.48, 0.5};
    const std::vector<BoundSample> b = SampleBounds(p, params, grid);
    REQUIRE(b.size() == 3);
    CHECK(b[0].upper_bound == 4.5);
    CHECK(b[1].upper_bound == 2.5);
    CHECK(b[2].upper_bound == 2.5);
  }
  SUBCASE("empty profile") {
    const std::vector<double> grid = MakeGrid(0.0, 1.0, 10);
    for (const BoundSample& s : SampleBounds(StackProfile(), params, grid)) CHECK(s.upper_bound == 4.5);
  }
  SUBCASE("reference profile on the 101-node grid") {
    const std::vector<double> grid = MakeGrid(0.0, 1.0, 100);
    const std::vector<BoundSample> b = SampleBounds(Reference(), params, grid);
    REQUIRE(b.size() == 101);
    // Each closed footprint [c - 0.04, c + 0.04] holds 9 grid nodes.
    int lowered = 0;
    for (const BoundSample& s : b) lowered += s.upper_bound < 4.5;
    CHECK(lowered == 81);
    CHECK(b[5].upper_bound == 4.5);
    CHECK(b[6].upper_bound == 4.0);
    CHECK(b[14].upper_bound == 4.0);
    CHECK(b[15].upper_bound == 4.5);
    CHECK(b[80].upper_bound == 2.0);
  }
}

TEST_CASE("profile construction errors") {
  try {
    StackProfile({0.1, 0.2}, {1.0}, 0.08);
    FAIL("expected length mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLengthMismatch);
  }
  CHECK_THROWS_AS(StackProfile({0.2, 0.1}, {1.0, 1.0}, 0.08), Error);
  CHECK_THROWS_AS(StackProfile({0.1}, {-1.0}, 0.08), Error);
  CHECK_THROWS_AS(StackProfile({0.1}, {1.0}, 0.0), Error);
}

TEST_CASE("property: heights are bounded and overlaps take the maximum") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(U(rng) * 6);
    std::vector<double> centers, heights;
    double c = U(rng) * 0.2;
    for (int i = 0; i < n; ++i) {
      centers.push_back(c);
      heights.push_back(3.0 * U(rng));
      c += 0.01 + 0.2 * U(rng);
    }
    const double width = 0.02 + 0.2 * U(rng);
    const StackProfile p(centers, heights, width);
    for (int q = 0; q < 50; ++q) {
      const double x = -0.2 + 2.0 * U(rng);
      double expected = 0.0;
      for (int i = 0; i < n; ++i) {
        if (x >= centers[i] - width / 2 && x <= centers[i] + width / 2) expected = std::max(expected, heights[i]);
      }
      const double s = p.HeightAt(x);
      CHECK(s == expected);
      CHECK(s >= 0.0);
      CHECK(s <= p.max_height());
    }
  }
}

TEST_CASE("property: sampling is pointwise") {
  const StackProfile p = Reference();
  const CraneParams params;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> grid(500);
  for (double& x : grid) x = U(rng);
  std::sort(grid.begin(), grid.end());
  const std::vector<BoundSample> b = SampleBounds(p, params, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(b[i].x_p == grid[i]);
    CHECK(b[i].upper_bound == PayloadUpperBound(p, params, grid[i]));
  }
}

TEST_CASE("property: reference profile has nine disjoint footprints") {
  const StackProfile p = Reference();
  // Walk a fine grid and count maximal runs with s > 0.
  int runs = 0;
  bool inside = false;
  for (int i = 0; i <= 100000; ++i) {
    const bool now = p.HeightAt(i * 1e-5) > 0.0;
    runs += now && !inside;
    inside = now;
  }
  CHECK(runs == 9);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    CHECK(p.centers()[i + 1] - p.centers()[i] > p.width());
  }
}
