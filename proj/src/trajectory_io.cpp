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

#include "craneplan/trajectory_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

constexpr int kColumns = 13;

void Cell(std::ostream& out, double v, bool last = false) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  out << buf << (last ? '\n' : ',');
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  return file;
}

void Close(std::ofstream& file, const std::filesystem::path& path) {
  file.close();
  if (!file) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

}  // namespace

void WriteTrajectoryCsv(const Trajectory& trajectory, std::ostream& out) {
  if (trajectory.controls.empty() || trajectory.nodes.size() != trajectory.controls.size() + 1) {
    throw Error(ErrorCode::kDimensionMismatch, "trajectory needs N + 1 nodes and N >= 1 controls");
  }
  out << kTrajectoryHeader << '\n';
  for (std::size_t k = 0; k < trajectory.nodes.size(); ++k) {
    const TrajectoryNode& n = trajectory.nodes[k];
    const Controls& u = trajectory.controls[std::min(k, trajectory.controls.size() - 1)];
    const SpatialState& s = n.state;
    for (double v : {n.x_p, s.t, s.v_p, s.y_p, s.w_p, s.l, s.l_dot, s.theta, s.theta_dot,
                     u.trolley_force, u.hoist_force, n.stack_height}) {
      Cell(out, v);
    }
    Cell(out, n.upper_bound, true);
  }
}

void WriteTrajectoryCsv(const Trajectory& trajectory, const std::filesystem::path& path) {
  std::ofstream file = OpenForWrite(path);
  WriteTrajectoryCsv(trajectory, file);
  Close(file, path);
}

Trajectory ReadTrajectoryCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kInvalidArgument, "empty trajectory CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryHeader) {
    throw Error(ErrorCode::kInvalidArgument, "unexpected trajectory CSV header: " + line);
  }
  std::vector<std::array<double, kColumns>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, kColumns> row{};
    int col = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      if (col == kColumns) {
        throw Error(ErrorCode::kInvalidArgument,
                    "line " + std::to_string(line_no) + ": too many columns");
      }
      const auto [ptr, ec] = std::from_chars(p, end, row[col]);
      if (ec != std::errc() || (ptr != end && *ptr != ',')) {
        throw Error(ErrorCode::kBadNumber, "line " + std::to_string(line_no) + ", column " +
                                               std::to_string(col + 1) + ": not a number");
      }
      ++col;
      if (ptr == end) break;
      p = ptr + 1;
    }
    if (col != kColumns) {
      throw Error(ErrorCode::kInvalidArgument, "line " + std::to_string(line_no) + ": expected " +
                                                   std::to_string(kColumns) + " columns");
    }
    rows.push_back(row);
  }
  if (rows.size() < 2) throw Error(ErrorCode::kInvalidArgument, "trajectory CSV needs >= 2 rows");

  Trajectory traj;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    TrajectoryNode node;
    node.x_p = r[0];
    node.state = {r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8]};
    node.stack_height = r[11];
    node.upper_bound = r[12];
    traj.nodes.push_back(node);
    if (k + 1 < rows.size()) traj.controls.push_back({r[9], r[10]});
  }
  traj.objective = traj.nodes.back().state.t;
  return traj;
}

Trajectory ReadTrajectoryCsv(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot open trajectory file " + path.string());
  return ReadTrajectoryCsv(file);
}

void WriteProfileCsv(const Scenario& scenario, std::ostream& out, int samples) {
  if (samples < 2) throw Error(ErrorCode::kInvalidArgument, "profile needs >= 2 samples");
  out << "x_p,s,bound\n";
  const double step = (scenario.x_end - scenario.x_start) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double x = i + 1 == samples ? scenario.x_end : scenario.x_start + i * step;
    const double s = scenario.profile.HeightAt(x);
    Cell(out, x);
    Cell(out, s);
    Cell(out, scenario.crane.h - s, true);
  }
}

void WriteProfileCsv(const Scenario& scenario, const std::filesystem::path& path, int samples) {
  std::ofstream file = OpenForWrite(path);
  WriteProfileCsv(scenario, file, samples);
  Close(file, path);
}

}  // namespace craneplan
