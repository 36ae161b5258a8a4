// Copyright 2026 The dtcm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "scenario_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace dtcm_cli {

// Generated from presets/*.conf at build time.
extern const char* const kPresetNames[];
extern const char* const kPresetTexts[];
extern const std::size_t kPresetCount;

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double plain_number(const std::string& text, const std::string& whole) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value))
    throw ConfigError("not a number: '" + whole + "'");
  return value;
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

dtcm_pair parse_pair_label(const std::string& s) {
  if (s == "AB") return DTCM_PAIR_AB;
  if (s == "AC") return DTCM_PAIR_AC;
  if (s == "BD") return DTCM_PAIR_BD;
  if (s == "CD") return DTCM_PAIR_CD;
  throw ConfigError("pairs: unknown pair '" + s + "' (expected AB, AC, BD or CD)");
}

void check_field(const std::string& key, const std::string& value) {
  dtcm_field field{};
  if (dtcm_field_parse(value.c_str(), &field) != DTCM_OK)
    throw ConfigError(key + ": " + dtcm_last_error());
}

void check_alpha(double a) {
  if (!(a >= 0.0 && a <= std::numbers::pi / 2))
    throw ConfigError("alpha: value " + format_exact(a) + " outside [0, pi/2]");
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> out(steps);
  const double step = (stop - start) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) out[k] = start + step * static_cast<double>(k);
  out.back() = stop;
  return out;
}

std::vector<double> AngleSpec::points() const { return grid ? grid->points() : values; }

double parse_real(const std::string& text) {
  const std::string s = trim(text);
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return plain_number(s, text);

  std::string coef = trim(s.substr(0, pos));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double value = std::numbers::pi;
  if (coef == "-") {
    value = -value;
  } else if (!coef.empty() && coef != "+") {
    value *= plain_number(coef, text);
  }
  const std::string rest = trim(s.substr(pos + 2));
  if (rest.empty()) return value;
  if (rest.front() != '/') throw ConfigError("not a number: '" + text + "'");
  const double denominator = plain_number(trim(rest.substr(1)), text);
  if (denominator == 0.0) throw ConfigError("division by zero in '" + text + "'");
  return value / denominator;
}

GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("grid '" + text + "' is not start:stop:steps");
  GridSpec grid;
  grid.start = parse_real(parts[0]);
  grid.stop = parse_real(parts[1]);
  const std::string& n = parts[2];
  const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), grid.steps);
  if (n.empty() || ec != std::errc() || ptr != n.data() + n.size())
    throw ConfigError("grid '" + text + "': steps must be a whole number");
  if (grid.steps < 2) throw ConfigError("grid '" + text + "' needs at least 2 points");
  if (!(grid.stop > grid.start)) throw ConfigError("grid '" + text + "' needs stop > start");
  return grid;
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig config;
  std::vector<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    seen.push_back(key);

    if (key == "model") {
      if (value == "dtcm") config.model = DTCM_MODEL_DTCM;
      else if (value == "djcm") config.model = DTCM_MODEL_DJCM;
      else throw ConfigError("model: expected dtcm or djcm, got '" + value + "'");
    } else if (key == "bell_type") {
      if (value == "psi") config.bell = DTCM_BELL_PSI;
      else if (value == "phi") config.bell = DTCM_BELL_PHI;
      else throw ConfigError("bell_type: expected psi or phi, got '" + value + "'");
    } else if (key == "alpha") {
      if (value.find(':') != std::string::npos) {
        config.alpha.grid = parse_grid(value);
        check_alpha(config.alpha.grid->start);
        check_alpha(config.alpha.grid->stop);
      } else {
        for (const auto& item : split(value, ',')) {
          const double a = parse_real(item);
          check_alpha(a);
          config.alpha.values.push_back(a);
        }
      }
    } else if (key == "field_a" || key == "field_b") {
      check_field(key, value);
      (key == "field_a" ? config.field_a : config.field_b) = value;
    } else if (key == "tau") {
      config.tau = parse_grid(value);
      if (config.tau.start < 0.0) throw ConfigError("tau: grid must start at tau >= 0");
    } else if (key == "pairs") {
      for (const auto& item : split(value, ',')) {
        if (item.empty()) continue;
        const auto p = parse_pair_label(item);
        if (std::find(config.pairs.begin(), config.pairs.end(), p) != config.pairs.end())
          throw ConfigError("pairs: '" + item + "' listed twice");
        config.pairs.push_back(p);
      }
      if (config.pairs.empty()) throw ConfigError("pairs: list is empty");
      std::sort(config.pairs.begin(), config.pairs.end());
    } else if (key == "output") {
      config.output = value;
    } else if (key == "zero_tol") {
      config.zero_tol = parse_real(value);
      if (!(config.zero_tol > 0.0)) throw ConfigError("zero_tol: must be positive");
    } else if (key == "min_zero_points") {
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), config.min_zero_points);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size() || config.min_zero_points == 0)
        throw ConfigError("min_zero_points: expected a positive whole number");
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  for (const char* required : {"model", "bell_type", "alpha", "field_a", "field_b", "tau", "pairs"}) {
    if (std::find(seen.begin(), seen.end(), required) == seen.end())
      throw ConfigError(std::string("missing key '") + required + "'");
  }
  if (config.model == DTCM_MODEL_DJCM) {
    for (auto p : config.pairs)
      if (p != DTCM_PAIR_AB) throw ConfigError(std::string("pairs: djcm has only the AB pair, got ") + pair_label(p));
  }
  return config;
}

std::string serialize_config(const ScenarioConfig& config) {
  std::ostringstream out;
  out << "model = " << (config.model == DTCM_MODEL_DTCM ? "dtcm" : "djcm") << '\n';
  out << "bell_type = " << (config.bell == DTCM_BELL_PSI ? "psi" : "phi") << '\n';
  out << "alpha = ";
  if (config.alpha.grid) {
    const auto& g = *config.alpha.grid;
    out << format_exact(g.start) << ':' << format_exact(g.stop) << ':' << g.steps;
  } else {
    for (std::size_t k = 0; k < config.alpha.values.size(); ++k)
      out << (k ? ", " : "") << format_exact(config.alpha.values[k]);
  }
  out << '\n';
  out << "field_a = " << config.field_a << '\n';
  out << "field_b = " << config.field_b << '\n';
  out << "tau = " << format_exact(config.tau.start) << ':' << format_exact(config.tau.stop) << ':'
      << config.tau.steps << '\n';
  out << "pairs = ";
  for (std::size_t k = 0; k < config.pairs.size(); ++k) out << (k ? ", " : "") << pair_label(config.pairs[k]);
  out << '\n';
  if (!config.output.empty()) out << "output = " << config.output << '\n';
  out << "zero_tol = " << format_exact(config.zero_tol) << '\n';
  out << "min_zero_points = " << config.min_zero_points << '\n';
  return out.str();
}

const char* pair_label(dtcm_pair pair) {
  switch (pair) {
    case DTCM_PAIR_AB:
      return "AB";
    case DTCM_PAIR_AC:
      return "AC";
    case DTCM_PAIR_BD:
      return "BD";
    case DTCM_PAIR_CD:
      return "CD";
  }
  return "??";
}

std::vector<std::string> preset_names() { return {kPresetNames, kPresetNames + kPresetCount}; }

std::string preset_text(const std::string& name) {
  for (std::size_t k = 0; k < kPresetCount; ++k)
    if (name == kPresetNames[k]) return kPresetTexts[k];
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace dtcm_cli
