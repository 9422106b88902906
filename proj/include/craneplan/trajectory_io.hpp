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
#include <iosfwd>
#include <string>

#include "craneplan/scenario.hpp"
#include "craneplan/transcription.hpp"

namespace craneplan {

// Frozen column order of the trajectory CSV.
inline constexpr const char* kTrajectoryHeader =
    "x_p,t,v_p,y_p,w_p,l,l_dot,theta,theta_dot,F_t,F_h,s,y_bound";

// One row per node, 9 significant digits. Row k carries the controls of
// interval k; the last row repeats those of interval N - 1.
void WriteTrajectoryCsv(const Trajectory& trajectory, std::ostream& out);
void WriteTrajectoryCsv(const Trajectory& trajectory, const std::filesystem::path& path);

// Reads a CSV written by WriteTrajectoryCsv. Throws kInvalidArgument on a
// wrong header or column count, kBadNumber on unparsable cells, kIo if the
// file cannot be read.
Trajectory ReadTrajectoryCsv(std::istream& in);
Trajectory ReadTrajectoryCsv(const std::filesystem::path& path);

// x_p, s, bound at `samples` uniform positions over the scenario's path.
void WriteProfileCsv(const Scenario& scenario, std::ostream& out, int samples = 1000);
void WriteProfileCsv(const Scenario& scenario, const std::filesystem::path& path,
                     int samples = 1000);

}  // namespace craneplan
