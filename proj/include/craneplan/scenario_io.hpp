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

#include <filesystem>
#include <string>
#include <string_view>

#include "craneplan/scenario.hpp"

namespace craneplan {

// Sectioned key = value text:
//
//   [crane]     m1, m2, g, h
//   [path]      x_start, x_end
//   [boundary]  t_0 and <state>_0 / <state>_f for v_p, y_p, w_p, l, l_dot,
//               theta, theta_dot
//   [bounds]    t_min, v_min_interior, y_floor, l_min, l_max, theta_max,
//               Ft_min, Ft_max, Fh_min, Fh_max; optional v_max
//   [stacks]    centers, heights (comma-separated), width
//   [solver]    all optional: intervals, tol, max_iter, epsilon_v,
//               barrier_init, barrier_shrink, regularization
//
// '#' starts a comment. Errors carry kMissingKey, kBadNumber,
// kLengthMismatch, kBoundsInverted or kInvalidArgument and name the key and
// line.
Scenario ParseScenario(std::string_view text);

// Reads and parses a file. Throws kIo if it cannot be read.
Scenario LoadScenario(const std::filesystem::path& path);

// Inverse of ParseScenario; numbers are written with 17 significant digits.
std::string RenderScenario(const Scenario& scenario);

}  // namespace craneplan
