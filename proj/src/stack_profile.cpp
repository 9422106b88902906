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

#include "craneplan/stack_profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

// Footprint edges are computed as c +- w/2 in floating point, so a grid node
// meant to sit exactly on an edge may land a few ulps outside. Membership is
// widened by this much (always toward inclusion).
constexpr double kEdgeTolerance = 1e-9;

}  // namespace

StackProfile::StackProfile(std::vector<double> centers, std::vector<double> heights,
                           double width)
    : centers_(std::move(centers)), heights_(std::move(heights)), width_(width) {
  if (centers_.size() != heights_.size()) {
    std::ostringstream msg;
    msg << "stack centers (" << centers_.size() << ") and heights (" << heights_.size()
        << ") differ in length";
    throw Error(ErrorCode::kLengthMismatch, msg.str());
  }
  if (!(width_ > 0.0)) throw Error(ErrorCode::kInvalidArgument, "stack width must be positive");
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (!(heights_[i] >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "stack " + std::to_string(i) + " has a negative height");
    }
    if (i > 0 && !(centers_[i] > centers_[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "stack centers must be strictly increasing");
    }
  }
}

double StackProfile::max_height() const {
  return heights_.empty() ? 0.0 : *std::max_element(heights_.begin(), heights_.end());
}

bool StackProfile::InFootprint(std::size_t i, double x_p) const {
  return std::abs(x_p - centers_[i]) <= 0.5 * width_ + kEdgeTolerance;
}

double StackProfile::HeightAt(double x_p) const {
  double s = 0.0;
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    if (InFootprint(i, x_p)) s = std::max(s, heights_[i]);
  }
  return s;
}

double PayloadUpperBound(const StackProfile& profile, const CraneParams& params, double x_p,
                         double y_floor) {
  const double bound = params.h - profile.HeightAt(x_p);
  if (bound < y_floor) {
    std::ostringstream msg;
    msg << "payload ceiling " << bound << " m at x_p = " << x_p
        << " is below the y_p floor " << y_floor << " m";
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (profile.InFootprint(i, x_p) && params.h - profile.heights()[i] < y_floor) {
        msg << " (stack " << i << " at x = " << profile.centers()[i] << ", height "
            << profile.heights()[i] << " m)";
        break;
      }
    }
    throw Error(ErrorCode::kInfeasibleProfile, msg.str());
  }
  return bound;
}

std::vector<BoundSample> SampleBounds(const StackProfile& profile, const CraneParams& params,
                                      std::span<const double> grid, double y_floor) {
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw Error(ErrorCode::kInvalidArgument, "bound grid must be sorted ascending");
  }
  std::vector<BoundSample> out;
  out.reserve(grid.size());
  for (double x : grid) {
    out.push_back({x, profile.HeightAt(x), PayloadUpperBound(profile, params, x, y_floor)});
  }
  return out;
}

}  // namespace craneplan
