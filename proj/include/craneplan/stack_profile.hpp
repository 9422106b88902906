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

#pragma once

#include <span>
#include <vector>

#include "craneplan/crane_model.hpp"

namespace craneplan {

// Container stacks along the horizontal axis, all sharing one footprint width.
// Each footprint is the closed interval [center - width/2, center + width/2].
class StackProfile {
 public:
  StackProfile() = default;

  // Throws kLengthMismatch if the sequences differ in length and
  // kInvalidArgument on negative heights, non-positive width or centers that
  // are not strictly increasing.
  StackProfile(std::vector<double> centers, std::vector<double> heights, double width);

  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& heights() const { return heights_; }
  double width() const { return width_; }
  std::size_t size() const { return centers_.size(); }
  bool empty() const { return centers_.empty(); }
  double max_height() const;

  // s(x_p): the tallest stack whose footprint contains x_p, 0 if none.
  double HeightAt(double x_p) const;

  // True if x_p lies in the footprint of stack i.
  bool InFootprint(std::size_t i, double x_p) const;

  friend bool operator==(const StackProfile&, const StackProfile&) = default;

 private:
  std::vector<double> centers_;
  std::vector<double> heights_;
  double width_ = 0.08;
};

// Node position paired with the y_p ceiling imposed there.
struct BoundSample {
  double x_p;
  double stack_height;
  double upper_bound;
};

// h - s(x_p). Throws kInfeasibleProfile when the ceiling drops below `y_floor`.
double PayloadUpperBound(const StackProfile& profile, const CraneParams& params, double x_p,
                         double y_floor = 0.0);

// Elementwise PayloadUpperBound over an ascending grid. This is the only stack
// information the transcription consumes.
std::vector<BoundSample> SampleBounds(const StackProfile& profile, const CraneParams& params,
                                      std::span<const double> grid, double y_floor = 0.0);

}  // namespace craneplan
