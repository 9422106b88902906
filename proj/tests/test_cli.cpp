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

// Drives the command-line tool as a subprocess and checks the exit-status contract.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

const std::string kCli = CRANEPLAN_CLI;
const std::string kScenario = std::string(CRANEPLAN_SOURCE_DIR) + "/scenarios/reference.scn";

fs::path Dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "craneplan_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int Lines(const fs::path& p) {
  int n = 0;
  for (char c : Slurp(p)) n += c == '\n';
  return n;
}

// Runs the tool with `args`; stdout and stderr land in files under Dir().
int Run(const std::string& args) {
  const std::string cmd = "'" + kCli + "' " + args + " >'" + (Dir() / "stdout").string() + "' 2>'" +
                          (Dir() / "stderr").string() + "'";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string Stderr() { return Slurp(Dir() / "stderr"); }

fs::path WriteScenario(const std::string& name, const std::string& from, const std::string& to) {
  std::string text = Slurp(kScenario);
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
  const fs::path p = Dir() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("plan writes a trajectory and a report") {
  const fs::path csv = Dir() / "plan.csv", json = Dir() / "plan.json";
  CHECK(Run("plan '" + kScenario + "' -o '" + csv.string() + "' --report '" + json.string() + "'") == 0);
  CHECK(Lines(csv) == 102);
  const std::string report = Slurp(json);
  CHECK(report.find("\"status\": \"converged\"") != std::string::npos);
  CHECK(report.find("\"num_variables\": 1008") != std::string::npos);
  CHECK(Slurp(Dir() / "stdout").find("converged") != std::string::npos);

  CHECK(Run("validate '" + kScenario + "' '" + csv.string() + "'") == 0);
  CHECK(Slurp(Dir() / "stdout").find("clearance violation") != std::string::npos);
}

TEST_CASE("flags override the scenario file") {
  const fs::path csv = Dir() / "n200.csv", json = Dir() / "n200.json";
  CHECK(Run("plan '" + kScenario + "' -o '" + csv.string() + "' --report '" + json.string() +
            "' --intervals 200 --tol 1e-6") == 0);
  const std::string report = Slurp(json);
  CHECK(report.find("\"intervals\": 200") != std::string::npos);
  CHECK(report.find("\"num_variables\": 2008") != std::string::npos);
  CHECK(Lines(csv) == 202);
}

TEST_CASE("check reports the offending stack") {
  CHECK(Run("check '" + kScenario + "'") == 0);
  const fs::path tall = WriteScenario("tall.scn", "heights = 0.5, 1.0, 1.0, 1.0, 2.0",
                                      "heights = 0.5, 1.0, 1.0, 1.0, 4.6");
  CHECK(Run("check '" + tall.string() + "'") == 1);
  CHECK(Stderr().find("stack 4") != std::string::npos);
  CHECK(Stderr().find("4.6") != std::string::npos);
}

TEST_CASE("infeasible and unconverged solves exit 1") {
  const fs::path toy = WriteScenario("toy.scn", "y_floor = 0.15", "v_max = 0\ny_floor = 0.15");
  CHECK(Run("plan '" + toy.string() + "' -o '" + (Dir() / "toy.csv").string() + "'") == 1);
  CHECK_FALSE(fs::exists(Dir() / "toy.csv"));
  const fs::path capped = WriteScenario("capped.scn", "tol = 1e-6", "tol = 1e-6\nmax_iter = 2");
  CHECK(Run("plan '" + capped.string() + "' -o '" + (Dir() / "capped.csv").string() + "'") == 1);
}

TEST_CASE("profile export") {
  const fs::path csv = Dir() / "profile.csv";
  CHECK(Run("profile '" + kScenario + "' -o '" + csv.string() + "'") == 0);
  CHECK(Lines(csv) == 1001);
}

TEST_CASE("usage, I/O and parse errors exit 2") {
  CHECK(Run("") == 2);
  CHECK(Run("launch '" + kScenario + "'") == 2);
  CHECK(Stderr().find("Usage") != std::string::npos);
  CHECK(Run("plan '" + kScenario + "' -o x.csv --bogus") == 2);
  CHECK(Stderr().find("Usage") != std::string::npos);
  CHECK(Run("plan '" + kScenario + "'") == 2);
  CHECK(Run("plan '" + kScenario + "' -o x.csv --intervals 1") == 2);
  CHECK(Run("check /nonexistent.scn") == 2);
  const fs::path broken = WriteScenario("broken.scn", "m1 = 1.2", "m1 = heavy");
  CHECK(Run("check '" + broken.string() + "'") == 2);
  CHECK(Stderr().find("line") != std::string::npos);
  const fs::path garbage = Dir() / "garbage.csv";
  std::ofstream(garbage) << "not,a,trajectory\n";
  CHECK(Run("validate '" + kScenario + "' '" + garbage.string() + "'") == 2);
  CHECK(Run("profile '" + kScenario + "' -o /nonexistent/dir/p.csv") == 2);
  CHECK(Run("--help") == 0);
}
