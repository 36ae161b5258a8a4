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


// dtcm: sweeps, events, plot data and self-verification for the double
// Tavis-Cummings simulator.
//
//   dtcm simulate --preset fig2 --out fig2.csv
//   dtcm events   --config my.conf
//   dtcm plotdata --preset fig9 --threads 0
//   dtcm verify full
//   dtcm config   --preset fig7          # print the preset as a config file

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "scenario_config.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kNumericalError = 3 };

struct SourceOptions {
  std::string config_path;
  std::string preset;
  std::string out_path;
  unsigned threads = 0;
};

void add_source_options(CLI::App* cmd, SourceOptions& opts, bool with_output) {
  auto* config = cmd->add_option("--config", opts.config_path, "scenario config file (key = value lines)");
  auto* preset = cmd->add_option("--preset", opts.preset, "shipped preset: fig2 .. fig11");
  config->excludes(preset);
  if (with_output) {
    cmd->add_option("--out", opts.out_path, "output path (default: config 'output' key, else stdout)");
    cmd->add_option("--threads", opts.threads, "worker threads, 0 = all cores")->capture_default_str();
  }
}

dtcm_cli::ScenarioConfig load(const SourceOptions& opts) {
  if (!opts.preset.empty()) return dtcm_cli::parse_config(dtcm_cli::preset_text(opts.preset));
  if (opts.config_path.empty()) throw dtcm_cli::ConfigError("one of --config or --preset is required");
  std::ifstream in(opts.config_path);
  if (!in) throw dtcm_cli::ConfigError("cannot read config file '" + opts.config_path + "'");
  std::stringstream text;
  text << in.rdbuf();
  return dtcm_cli::parse_config(text.str());
}

template <class Writer>
int emit(const SourceOptions& opts, Writer&& write) {
  const auto config = load(opts);
  const std::string path = opts.out_path.empty() ? config.output : opts.out_path;
  // Render fully before touching the output file so failures leave no partial file.
  std::ostringstream buffer;
  write(config, opts.threads, buffer);
  if (path.empty() || path == "-") {
    std::cout << buffer.str() << std::flush;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dtcm_cli::ConfigError("cannot write output file '" + path + "'");
    out << buffer.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact entanglement dynamics of two atom pairs in two cavities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dtcm_version()));

  SourceOptions sim_opts, ev_opts, plot_opts, cfg_opts;
  auto* simulate = app.add_subcommand("simulate", "concurrence sweep as CSV (tau,alpha,pair,concurrence)");
  add_source_options(simulate, sim_opts, true);
  auto* events = app.add_subcommand("events", "sudden death / birth events per alpha and pair");
  add_source_options(events, ev_opts, true);
  auto* plotdata = app.add_subcommand("plotdata", "alpha x tau concurrence matrix per pair");
  add_source_options(plotdata, plot_opts, true);
  auto* config = app.add_subcommand("config", "print the resolved scenario as a config file");
  add_source_options(config, cfg_opts, false);

  std::string level = "quick";
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault, "flip a sign in one amplitude to check the suites catch it");

  app.add_subcommand("presets", "list shipped presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (simulate->parsed()) return emit(sim_opts, dtcm_cli::write_simulate);
    if (events->parsed()) return emit(ev_opts, dtcm_cli::write_events);
    if (plotdata->parsed()) return emit(plot_opts, dtcm_cli::write_plotdata);
    if (config->parsed()) {
      std::cout << dtcm_cli::serialize_config(load(cfg_opts));
      return kOk;
    }
    if (verify->parsed()) return dtcm_cli::run_verify(level == "full", inject_fault, std::cout) ? kOk : kVerifyFailed;
    for (const auto& name : dtcm_cli::preset_names()) std::cout << name << '\n';
    return kOk;
  } catch (const dtcm_cli::ConfigError& e) {
    std::cerr << "dtcm: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const dtcm_cli::NumericalFailure& e) {
    std::cerr << "dtcm: numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "dtcm: " << e.what() << '\n';
    return kNumericalError;
  }
}
