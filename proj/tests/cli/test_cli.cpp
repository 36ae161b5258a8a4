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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "scenario_config.hpp"

using namespace dtcm_cli;
using std::numbers::pi;

namespace {

const char* kBase =
    "model = dtcm\n"
    "bell_type = psi\n"
    "alpha = pi/4\n"
    "field_a = vacuum\n"
    "field_b = vacuum\n"
    "tau = 0:2:21\n"
    "pairs = AB\n";

std::string with(const std::string& key, const std::string& value) {
  std::istringstream in(kBase);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) {
      if (!value.empty() || key == "pairs") out += key + " = " + value + "\n";
    } else {
      out += line + "\n";
    }
  }
  return out;
}

std::string render(void (*writer)(const ScenarioConfig&, unsigned, std::ostream&), const ScenarioConfig& c,
                   unsigned threads = 1) {
  std::ostringstream out;
  writer(c, threads, out);
  return out.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DTCM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("numbers and pi expressions") {
  CHECK(parse_real("0.3") == 0.3);
  CHECK(parse_real(" 1e-9 ") == 1e-9);
  CHECK(parse_real("pi") == pi);
  CHECK(parse_real("pi/4") == pi / 4);
  CHECK(parse_real("-pi/2") == -pi / 2);
  CHECK(parse_real("3pi/8") == 3 * pi / 8);
  CHECK(parse_real("0.05pi") == 0.05 * pi);
  CHECK(parse_real("0.25*pi") == 0.25 * pi);
  for (const char* bad : {"", "abc", "pi/", "pi/0", "2pix", "1.2.3", "nan"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_real(bad), ConfigError);
  }
}

TEST_CASE("grid specs") {
  const auto g = parse_grid("0:25:2501");
  CHECK(g.steps == 2501);
  const auto pts = g.points();
  CHECK(pts.back() == 25.0);
  CHECK(pts[1] == doctest::Approx(0.01));
  CHECK(parse_grid("0:pi/2:51").points().back() == pi / 2);
  for (const char* bad : {"0:1:1", "0:1:0", "1:1:5", "2:1:5", "0:1", "0:1:2:3", "0:1:x", "0:1:-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_grid(bad), ConfigError);
  }
}

TEST_CASE("config parsing") {
  const auto c = parse_config(std::string("# comment line\n") + kBase + "output = out.csv  # trailing comment\n");
  CHECK(c.model == DTCM_MODEL_DTCM);
  CHECK(c.bell == DTCM_BELL_PSI);
  CHECK(c.alpha.points() == std::vector<double>{pi / 4});
  CHECK(c.tau.steps == 21);
  CHECK(c.pairs == std::vector<dtcm_pair>{DTCM_PAIR_AB});
  CHECK(c.output == "out.csv");
  CHECK(c.zero_tol == 1e-9);
  CHECK(c.min_zero_points == 3);

  CHECK(parse_config(with("pairs", "CD, AB, BD")).pairs ==
        std::vector<dtcm_pair>{DTCM_PAIR_AB, DTCM_PAIR_BD, DTCM_PAIR_CD});
  CHECK(parse_config(with("alpha", "0:pi/2:11")).alpha.points().size() == 11);
  CHECK(parse_config(with("alpha", "0, 0.1pi, pi/2")).alpha.points().size() == 3);
}

TEST_CASE("config errors name the offending key") {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(with("model", "")).find("model") != std::string::npos);
  CHECK(message(with("model", "jc")).find("model") != std::string::npos);
  CHECK(message(with("bell_type", "chi")).find("bell_type") != std::string::npos);
  CHECK(message(with("tau", "0:2:1")).find("at least 2 points") != std::string::npos);
  CHECK(message(with("tau", "-1:2:10")).find("tau") != std::string::npos);
  CHECK(message(with("alpha", "2")).find("alpha") != std::string::npos);
  CHECK(message(with("alpha", "0:pi:5")).find("alpha") != std::string::npos);
  CHECK(message(with("pairs", "")).find("pairs") != std::string::npos);
  CHECK(message(with("pairs", "AB, XY")).find("XY") != std::string::npos);
  CHECK(message(with("pairs", "AB, AB")).find("twice") != std::string::npos);
  CHECK(message(with("field_a", "fock:-2")).find("field_a") != std::string::npos);
  CHECK(message(std::string(kBase) + "colour = red\n").find("colour") != std::string::npos);
  CHECK(message(std::string(kBase) + "tau = 0:1:5\n").find("duplicate") != std::string::npos);
  CHECK(message(std::string(kBase) + "just words\n").find("line 8") != std::string::npos);
  CHECK(message(with("model", "djcm") + "").find("no error") != std::string::npos);
  CHECK(message(with("pairs", "BD").replace(0, 12, "model = djcm")).find("djcm") != std::string::npos);
}

TEST_CASE("shipped presets match the repository files") {
  const auto names = preset_names();
  CHECK(names.size() == 11);
  CHECK(names.front() == "fig2");
  CHECK(names.back() == "fig11");
  for (const auto& name : names) {
    std::ifstream in(std::string(DTCM_PRESET_DIR) + "/" + name + ".conf");
    REQUIRE(in.good());
    std::stringstream text;
    text << in.rdbuf();
    CHECK(preset_text(name) == text.str());
    CHECK_NOTHROW(parse_config(preset_text(name)));
  }
  CHECK_THROWS_AS(preset_text("fig12"), ConfigError);
}

TEST_CASE("every preset round-trips through its serialized config") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto original = parse_config(preset_text(name));
    const std::string serialized = serialize_config(original);
    const auto reparsed = parse_config(serialized);
    CHECK(serialize_config(reparsed) == serialized);
    CHECK(render(write_simulate, reparsed, 0) == render(write_simulate, original, 0));
  }
}

TEST_CASE("simulate output") {
  auto c = parse_config(with("pairs", "CD, AB"));
  c.alpha = AngleSpec{std::nullopt, {0.2, 0.5}};
  const std::string serial = render(write_simulate, c, 1);
  CHECK(serial == render(write_simulate, c, 4));
  CHECK(serial == render(write_simulate, c, 1));

  const auto rows = csv_rows(serial);
  REQUIRE(rows.size() == 1 + 2 * 21 * 2);
  CHECK(rows[0] == std::vector<std::string>{"tau", "alpha", "pair", "concurrence"});
  // alpha-major, then tau, then pair in lexicographic order
  CHECK(rows[1] == std::vector<std::string>{"0", "0.2", "AB", rows[1][3]});
  CHECK(rows[2][2] == "CD");
  CHECK(rows[3][0] == "0.1");
  CHECK(rows[43][1] == "0.5");
  // 12 significant digits
  CHECK(rows[1][3] == "0.389418342309");
  CHECK(serial.find('\r') == std::string::npos);
}

TEST_CASE("fig3a and fig3b curves") {
  const auto a = parse_config(preset_text("fig3a"));
  const auto dtcm = run_sweep(a, 0);
  const auto b = parse_config(preset_text("fig3b"));
  const auto djcm = run_sweep(b, 0);
  const std::size_t quarter = 2;  // alpha = pi/4
  REQUIRE(dtcm.alphas[quarter] == pi / 4);

  bool touched = false;
  for (std::size_t t = 0; t < dtcm.taus.size() && dtcm.taus[t] < pi / 2; ++t) touched |= dtcm.at(quarter, 0, t) < 1e-9;
  CHECK(touched);

  const double step = djcm.taus[1] - djcm.taus[0];
  for (std::size_t a_idx = 0; a_idx < djcm.alphas.size(); ++a_idx) {
    std::size_t argmin = 0;
    for (std::size_t t = 1; djcm.taus[t] < 3.0; ++t) {
      if (djcm.at(a_idx, 0, t) < djcm.at(a_idx, 0, argmin)) argmin = t;
      if (std::abs(djcm.taus[t] - pi / 2) > step) CHECK(djcm.at(a_idx, 0, t) > 1e-9);
    }
    CHECK(std::abs(djcm.taus[argmin] - pi / 2) <= step);
  }
}

TEST_CASE("events output") {
  SUBCASE("BD birth at alpha = 0") {
    auto c = parse_config(preset_text("fig7"));
    const auto rows = csv_rows(render(write_events, c));
    CHECK(rows[0] == std::vector<std::string>{"alpha", "pair", "death_time", "revival_time", "birth_time"});
    REQUIRE(rows.size() == 5);
    CHECK(rows[1][0] == "0");
    CHECK(rows[1][1] == "BD");
    CHECK(rows[1][4] == "0");
  }
  SUBCASE("one-cavity phi boundary at sin^2 alpha = 1/2") {
    auto c = parse_config(with("model", "djcm"));
    c.bell = DTCM_BELL_PHI;
    c.alpha = AngleSpec{parse_grid("0.05pi:0.45pi:9"), {}};
    c.tau = parse_grid("0:25:2501");
    const auto rows = csv_rows(render(write_events, c));
    REQUIRE(rows.size() == 10);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const double alpha = std::stod(rows[r][0]);
      const double s2 = std::sin(alpha) * std::sin(alpha);
      if (std::abs(s2 - 0.5) < 0.08) continue;
      CAPTURE(alpha);
      CHECK(!rows[r][2].empty() == (s2 < 0.5));
    }
  }
}

TEST_CASE("plot data") {
  SUBCASE("layout") {
    auto c = parse_config(with("pairs", "AB, BD"));
    c.alpha = AngleSpec{std::nullopt, {0.1, 0.7}};
    const std::string text = render(write_plotdata, c);
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 4 + 2 + 4);
    CHECK(lines[0] == "# pair AB");
    CHECK(lines[1].rfind("21 0 0.1 0.2", 0) == 0);
    CHECK(lines[2].rfind("0.1 ", 0) == 0);
    CHECK(lines[4].empty());
    CHECK(lines[6] == "# pair BD");
  }
  auto matrix = [](const std::string& preset) {
    std::istringstream in(render(write_plotdata, parse_config(preset_text(preset)), 0));
    std::string line;
    std::getline(in, line);  // pair header
    std::getline(in, line);
    std::istringstream head(line);
    std::size_t n = 0;
    head >> n;
    std::vector<double> taus(n);
    for (auto& t : taus) head >> t;
    std::vector<std::pair<double, std::vector<double>>> rows;
    while (std::getline(in, line) && !line.empty()) {
      std::istringstream ls(line);
      double alpha = 0.0;
      ls >> alpha;
      std::vector<double> values(n);
      for (auto& v : values) ls >> v;
      rows.emplace_back(alpha, values);
    }
    return std::pair{taus, rows};
  };
  SUBCASE("fig2: a zero trench at every entangled angle") {
    const auto [taus, rows] = matrix("fig2");
    CHECK(rows.size() == 51);
    for (const auto& [alpha, values] : rows) {
      if (alpha < 1e-9 || std::abs(alpha - pi / 2) < 1e-9) continue;
      bool zero = false;
      for (std::size_t t = 0; t < taus.size() && taus[t] < pi / 2; ++t) zero |= values[t] < 1e-9;
      CAPTURE(alpha);
      CHECK(zero);
    }
  }
  SUBCASE("fig9: early zeros only below sin^2 alpha = 1/sqrt(2)") {
    const auto [taus, rows] = matrix("fig9");
    for (const auto& [alpha, values] : rows) {
      if (alpha < 1e-9 || std::abs(alpha - pi / 2) < 1e-9) continue;
      bool zero = false;
      for (std::size_t t = 1; t < taus.size() && taus[t] < 3.0; ++t) zero |= values[t] < 1e-9;
      if (zero) CHECK(std::sin(alpha) * std::sin(alpha) < 1.0 / std::sqrt(2.0));
    }
  }
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("presets") == 0);
  CHECK(run_cli("simulate --preset fig3a --threads 2") == 0);
  CHECK(run_cli("simulate --preset nope") == 2);
  CHECK(run_cli("simulate") == 2);
  CHECK(run_cli("simulate --preset fig2 --config x.conf") == 2);
  CHECK(run_cli("simulate --config /nonexistent/file.conf") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("verify quick") == 0);
  CHECK(run_cli("verify quick --inject-fault") == 1);
  CHECK(run_cli("verify medium") == 2);

  const auto one_point = temp_file("dtcm_one_point.conf", with("tau", "0:1:1"));
  CHECK(run_cli("simulate --config " + one_point.string()) == 2);
  const auto no_pairs = temp_file("dtcm_no_pairs.conf", with("pairs", ""));
  CHECK(run_cli("plotdata --config " + no_pairs.string()) == 2);

  const auto out = std::filesystem::temp_directory_path() / "dtcm_fig4.csv";
  std::filesystem::remove(out);
  CHECK(run_cli("simulate --preset fig4 --out " + out.string()) == 0);
  CHECK(std::filesystem::file_size(out) > 0);
  std::filesystem::remove(one_point);
  std::filesystem::remove(no_pairs);
  std::filesystem::remove(out);
}
