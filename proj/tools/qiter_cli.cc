// Copyright 2026 The qiter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qiter/experiment.hpp"

namespace {

int write_artifact(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents;
    return qiter::kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return qiter::kExitConfig;
  }
  out << contents;
  return qiter::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle query machine simulator and hybrid-argument verifier"};
  app.set_version_flag("--version", "qiter 0.1.0");

  std::string command;
  std::string config_path;
  unsigned n = 0, big_t = 0, small_t = 0, trials = 0;
  double theta = 0.0, alpha = 0.0;
  std::uint64_t seed = 0, replay = 0;
  std::string program, format, out;

  app.add_option("command", command, "lemma1 | lemma2 | adversary | demo")
      ->required();
  app.add_option("--config", config_path, "JSON config file; flags override it");
  auto* o_n = app.add_option("--n", n, "word width");
  auto* o_big_t = app.add_option("--T", big_t, "iteration count");
  auto* o_small_t =
      app.add_option("--t", small_t, "query count (lemma2: largest t)");
  auto* o_theta = app.add_option("--theta", theta, "theorem 1 mass threshold");
  auto* o_alpha = app.add_option("--alpha", alpha, "theorem 1 threshold T^-alpha");
  auto* o_trials = app.add_option("--trials", trials, "randomized instances");
  auto* o_seed = app.add_option("--seed", seed, "experiment seed");
  auto* o_program =
      app.add_option("--program", program, "naive | undersample | grover");
  auto* o_format = app.add_option("--format", format, "csv | json");
  auto* o_out = app.add_option("--out", out, "report path (default stdout)");
  auto* o_replay = app.add_option("--replay", replay, "rerun one instance id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qiter::kExitOk : qiter::kExitConfig;
  }

  qiter::ExperimentConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read " << config_path << "\n";
      return qiter::kExitConfig;
    }
    try {
      cfg = qiter::config_from_json(qiter::Json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return qiter::kExitConfig;
    }
  }
  cfg.command = command;
  if (*o_n) cfg.n = n;
  if (*o_big_t) cfg.T = big_t;
  if (*o_small_t) cfg.t = small_t;
  if (*o_theta) cfg.theta = theta;
  if (*o_alpha) cfg.alpha = alpha;
  if (*o_trials) cfg.trials = trials;
  if (*o_seed) cfg.seed = seed;
  if (*o_program) cfg.program = program;
  if (*o_format) cfg.format = format;
  if (*o_out) cfg.out = out;
  if (*o_replay) cfg.replay = replay;

  qiter::CommandResult result;
  try {
    result = qiter::run_command(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qiter::kExitConfig;
  }
  if (result.exit_code == qiter::kExitConfig) {
    std::cerr << result.summary;
    return result.exit_code;
  }
  if (const int code = write_artifact(cfg.out, result.artifact); code != 0) {
    return code;
  }
  std::cerr << result.summary;
  return result.exit_code;
}
