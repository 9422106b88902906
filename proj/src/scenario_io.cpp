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

#include "craneplan/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

constexpr const char* kSections[] = {"crane", "path", "boundary", "bounds", "stacks", "solver"};

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

struct Section {
  int line = 0;
  std::map<std::string, Entry> entries;
};

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void Fail(ErrorCode code, int line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw Error(code, msg.str());
}

std::map<std::string, Section> Tokenize(std::string_view text) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') Fail(ErrorCode::kInvalidArgument, line_no, "unterminated section header");
      const std::string name(Trim(line.substr(1, line.size() - 2)));
      if (std::find(std::begin(kSections), std::end(kSections), name) == std::end(kSections)) {
        Fail(ErrorCode::kInvalidArgument, line_no, "unknown section [" + name + "]");
      }
      if (sections.count(name)) Fail(ErrorCode::kInvalidArgument, line_no, "duplicate section [" + name + "]");
      current = &sections[name];
      current->line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      Fail(ErrorCode::kInvalidArgument, line_no, "expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key(Trim(line.substr(0, eq)));
    if (key.empty()) Fail(ErrorCode::kInvalidArgument, line_no, "empty key");
    if (current == nullptr) Fail(ErrorCode::kInvalidArgument, line_no, "key '" + key + "' outside any section");
    if (current->entries.count(key)) Fail(ErrorCode::kInvalidArgument, line_no, "duplicate key '" + key + "'");
    current->entries[key] = {std::string(Trim(line.substr(eq + 1))), line_no};
  }
  return sections;
}

std::optional<double> ToDouble(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || std::isnan(v)) return std::nullopt;
  return v;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Section> sections) : sections_(std::move(sections)) {}

  // Required numeric key.
  double Number(const std::string& section, const std::string& key) {
    const Entry& e = Require(section, key);
    const auto v = ToDouble(e.value);
    if (!v) Fail(ErrorCode::kBadNumber, e.line, "key '" + key + "': '" + e.value + "' is not a number");
    return *v;
  }

  double Number(const std::string& section, const std::string& key, double fallback) {
    return Has(section, key) ? Number(section, key) : fallback;
  }

  int Integer(const std::string& section, const std::string& key, int fallback) {
    if (!Has(section, key)) return fallback;
    const Entry& e = Require(section, key);
    const std::string_view s = Trim(e.value);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      Fail(ErrorCode::kBadNumber, e.line, "key '" + key + "': '" + e.value + "' is not an integer");
    }
    return v;
  }

  std::vector<double> List(const std::string& section, const std::string& key) {
    const Entry& e = Require(section, key);
    std::vector<double> out;
    if (Trim(e.value).empty()) return out;
    std::string_view rest = e.value;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto v = ToDouble(item);
      if (!v) {
        Fail(ErrorCode::kBadNumber, e.line,
             "key '" + key + "': '" + std::string(Trim(item)) + "' is not a number");
      }
      out.push_back(*v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return out;
  }

  int Line(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return 0;
    const auto e = s->second.entries.find(key);
    return e == s->second.entries.end() ? s->second.line : e->second.line;
  }

  void RejectUnknown() const {
    for (const auto& [name, section] : sections_) {
      for (const auto& [key, entry] : section.entries) {
        if (!entry.used) Fail(ErrorCode::kInvalidArgument, entry.line, "unknown key '" + key + "' in [" + name + "]");
      }
    }
  }

 private:
  bool Has(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.entries.count(key);
  }

  Entry& Require(const std::string& section, const std::string& key) {
    const auto s = sections_.find(section);
    if (s == sections_.end()) {
      throw Error(ErrorCode::kMissingKey, "missing section [" + section + "] (needed for key '" + key + "')");
    }
    const auto e = s->second.entries.find(key);
    if (e == s->second.entries.end()) {
      Fail(ErrorCode::kMissingKey, s->second.line, "missing key '" + key + "' in [" + section + "]");
    }
    e->second.used = true;
    return e->second;
  }

  std::map<std::string, Section> sections_;
};

// Checks that carry the key and line into the message.
class Checker {
 public:
  explicit Checker(const Reader& reader) : reader_(reader) {}

  void Positive(double v, const std::string& section, const std::string& key) const {
    if (!(v > 0.0)) Fail(ErrorCode::kInvalidArgument, reader_.Line(section, key), "key '" + key + "' must be positive");
  }

  void Ordered(double lo, double hi, const std::string& section, const std::string& lo_key,
               const std::string& hi_key) const {
    if (!(lo <= hi)) {
      std::ostringstream what;
      what << "bounds inverted: " << lo_key << " = " << lo << " > " << hi_key << " = " << hi;
      Fail(ErrorCode::kBoundsInverted, reader_.Line(section, hi_key), what.str());
    }
  }

  void Within(double v, double lo, double hi, const std::string& key) const {
    if (!(v >= lo && v <= hi)) {
      std::ostringstream what;
      what << "boundary value " << key << " = " << v << " outside [" << lo << ", " << hi << "]";
      Fail(ErrorCode::kInvalidArgument, reader_.Line("boundary", key), what.str());
    }
  }

 private:
  const Reader& reader_;
};

// (file suffix, member) pairs of the boundary section, time excluded.
struct BoundaryField {
  const char* name;
  double SpatialState::*member;
};
constexpr BoundaryField kBoundaryFields[] = {
    {"v_p", &SpatialState::v_p},       {"y_p", &SpatialState::y_p},
    {"w_p", &SpatialState::w_p},       {"l", &SpatialState::l},
    {"l_dot", &SpatialState::l_dot},   {"theta", &SpatialState::theta},
    {"theta_dot", &SpatialState::theta_dot},
};

}  // namespace

Scenario ParseScenario(std::string_view text) {
  Reader in(Tokenize(text));
  const Checker check(in);
  Scenario sc;

  sc.crane.m1 = in.Number("crane", "m1");
  sc.crane.m2 = in.Number("crane", "m2");
  sc.crane.g = in.Number("crane", "g");
  sc.crane.h = in.Number("crane", "h");
  check.Positive(sc.crane.m1, "crane", "m1");
  check.Positive(sc.crane.m2, "crane", "m2");
  check.Positive(sc.crane.g, "crane", "g");
  check.Positive(sc.crane.h, "crane", "h");

  sc.x_start = in.Number("path", "x_start");
  sc.x_end = in.Number("path", "x_end");
  if (!(sc.x_end > sc.x_start)) {
    Fail(ErrorCode::kInvalidArgument, in.Line("path", "x_end"), "x_end must exceed x_start");
  }

  sc.boundary.initial.t = in.Number("boundary", "t_0");
  for (const BoundaryField& f : kBoundaryFields) {
    sc.boundary.initial.*f.member = in.Number("boundary", std::string(f.name) + "_0");
    sc.boundary.terminal.*f.member = in.Number("boundary", std::string(f.name) + "_f");
  }
  sc.boundary.terminal.t = 0.0;

  VariableBounds& b = sc.bounds;
  b.t_min = in.Number("bounds", "t_min");
  b.v_min_interior = in.Number("bounds", "v_min_interior");
  b.v_max = in.Number("bounds", "v_max", b.v_max);
  b.y_floor = in.Number("bounds", "y_floor");
  b.l_min = in.Number("bounds", "l_min");
  b.l_max = in.Number("bounds", "l_max");
  b.theta_max = in.Number("bounds", "theta_max");
  b.ft_min = in.Number("bounds", "Ft_min");
  b.ft_max = in.Number("bounds", "Ft_max");
  b.fh_min = in.Number("bounds", "Fh_min");
  b.fh_max = in.Number("bounds", "Fh_max");
  check.Ordered(b.l_min, b.l_max, "bounds", "l_min", "l_max");
  check.Ordered(0.0, b.theta_max, "bounds", "0", "theta_max");
  check.Ordered(b.ft_min, b.ft_max, "bounds", "Ft_min", "Ft_max");
  check.Ordered(b.fh_min, b.fh_max, "bounds", "Fh_min", "Fh_max");
  check.Ordered(0.0, b.v_max, "bounds", "0", "v_max");
  if (!(b.y_floor <= sc.crane.h)) {
    Fail(ErrorCode::kBoundsInverted, in.Line("bounds", "y_floor"), "bounds inverted: y_floor exceeds h");
  }

  std::vector<double> centers = in.List("stacks", "centers");
  std::vector<double> heights = in.List("stacks", "heights");
  const double width = in.Number("stacks", "width");
  if (centers.size() != heights.size()) {
    std::ostringstream what;
    what << "key 'heights' has " << heights.size() << " entries but 'centers' has " << centers.size();
    Fail(ErrorCode::kLengthMismatch, in.Line("stacks", "heights"), what.str());
  }
  try {
    sc.profile = StackProfile(std::move(centers), std::move(heights), width);
  } catch (const Error& e) {
    Fail(e.code(), in.Line("stacks", "centers"), std::string("[stacks] ") + e.what());
  }

  SolverOptions& so = sc.solver;
  sc.intervals = in.Integer("solver", "intervals", sc.intervals);
  so.tol = in.Number("solver", "tol", so.tol);
  so.max_iter = in.Integer("solver", "max_iter", so.max_iter);
  sc.epsilon_v = in.Number("solver", "epsilon_v", sc.epsilon_v);
  so.barrier_init = in.Number("solver", "barrier_init", so.barrier_init);
  so.barrier_shrink = in.Number("solver", "barrier_shrink", so.barrier_shrink);
  so.regularization = in.Number("solver", "regularization", so.regularization);
  if (sc.intervals < 2) Fail(ErrorCode::kInvalidArgument, in.Line("solver", "intervals"), "intervals must be >= 2");
  if (so.max_iter < 1) Fail(ErrorCode::kInvalidArgument, in.Line("solver", "max_iter"), "max_iter must be >= 1");
  check.Positive(so.tol, "solver", "tol");
  check.Positive(sc.epsilon_v, "solver", "epsilon_v");
  check.Positive(so.barrier_init, "solver", "barrier_init");
  check.Positive(so.regularization, "solver", "regularization");
  if (!(so.barrier_shrink < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, in.Line("solver", "barrier_shrink"), "barrier_shrink must be < 1");
  }
  check.Positive(so.barrier_shrink, "solver", "barrier_shrink");

  check.Within(sc.boundary.initial.t, b.t_min, INFINITY, "t_0");
  for (const char* end : {"_0", "_f"}) {
    const SpatialState& s = end[1] == '0' ? sc.boundary.initial : sc.boundary.terminal;
    check.Within(s.v_p, 0.0, b.v_max, std::string("v_p") + end);
    check.Within(s.y_p, b.y_floor, sc.crane.h, std::string("y_p") + end);
    check.Within(s.l, b.l_min, b.l_max, std::string("l") + end);
    check.Within(s.theta, -b.theta_max, b.theta_max, std::string("theta") + end);
  }

  in.RejectUnknown();
  sc.Validate();
  return sc;
}

Scenario LoadScenario(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot open scenario file " + path.string());
  std::ostringstream text;
  text << file.rdbuf();
  if (file.bad()) throw Error(ErrorCode::kIo, "cannot read scenario file " + path.string());
  return ParseScenario(text.str());
}

std::string RenderScenario(const Scenario& sc) {
  std::string out;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  auto kv = [&](const std::string& key, const std::string& value) {
    out += key + " = " + value + "\n";
  };
  auto list = [&](const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + num(values[i]);
    return s;
  };

  out += "[crane]\n";
  kv("m1", num(sc.crane.m1));
  kv("m2", num(sc.crane.m2));
  kv("g", num(sc.crane.g));
  kv("h", num(sc.crane.h));

  out += "\n[path]\n";
  kv("x_start", num(sc.x_start));
  kv("x_end", num(sc.x_end));

  out += "\n[boundary]\n";
  kv("t_0", num(sc.boundary.initial.t));
  for (const BoundaryField& f : kBoundaryFields) {
    kv(std::string(f.name) + "_0", num(sc.boundary.initial.*f.member));
    kv(std::string(f.name) + "_f", num(sc.boundary.terminal.*f.member));
  }

  const VariableBounds& b = sc.bounds;
  out += "\n[bounds]\n";
  kv("t_min", num(b.t_min));
  kv("v_min_interior", num(b.v_min_interior));
  if (std::isfinite(b.v_max)) kv("v_max", num(b.v_max));
  kv("y_floor", num(b.y_floor));
  kv("l_min", num(b.l_min));
  kv("l_max", num(b.l_max));
  kv("theta_max", num(b.theta_max));
  kv("Ft_min", num(b.ft_min));
  kv("Ft_max", num(b.ft_max));
  kv("Fh_min", num(b.fh_min));
  kv("Fh_max", num(b.fh_max));

  out += "\n[stacks]\n";
  kv("centers", list(sc.profile.centers()));
  kv("heights", list(sc.profile.heights()));
  kv("width", num(sc.profile.width()));

  out += "\n[solver]\n";
  kv("intervals", std::to_string(sc.intervals));
  kv("tol", num(sc.solver.tol));
  kv("max_iter", std::to_string(sc.solver.max_iter));
  kv("epsilon_v", num(sc.epsilon_v));
  kv("barrier_init", num(sc.solver.barrier_init));
  kv("barrier_shrink", num(sc.solver.barrier_shrink));
  kv("regularization", num(sc.solver.regularization));
  return out;
}

}  // namespace craneplan
