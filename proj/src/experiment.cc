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

#include "qiter/experiment.hpp"

#include <cmath>
#include <vector>

#include <fmt/core.h>

#include "qiter/adversary.hpp"
#include "qiter/algorithms.hpp"
#include "qiter/corpus.hpp"
#include "qiter/metrics.hpp"

namespace qiter {
namespace {

constexpr std::uint64_t kDemoSeed = 2026;
constexpr unsigned kDefaultLemma2MaxT = 4;

struct LemmaRow {
  std::uint64_t instance_id;
  unsigned n;
  std::uint64_t T;
  std::size_t t;
  std::uint64_t seed;
  std::uint64_t instance_seed;
  LemmaReport report;
  Json extra;
};

std::string lemma_csv_line(const LemmaRow& row) {
  return fmt::format("{},{},{},{},{},{},{},{},{}\n", row.instance_id, row.n,
                     row.T, row.t, format_double(row.report.lhs),
                     format_double(row.report.rhs),
                     format_double(row.report.slack),
                     row.report.holds ? "true" : "false", row.seed);
}

Json lemma_json_row(const LemmaRow& row) {
  Json j{{"instance_id", row.instance_id},
         {"n", row.n},
         {"T", row.T},
         {"t", row.t},
         {"seed", row.seed},
         {"instance_seed", row.instance_seed}};
  const Json report = lemma_report_to_json(row.report);
  for (const auto& [k, v] : report.items()) j[k] = v;
  for (const auto& [k, v] : row.extra.items()) j[k] = v;
  return j;
}

std::vector<std::uint64_t> instance_ids(const ExperimentConfig& cfg) {
  if (cfg.replay) return {*cfg.replay};
  std::vector<std::uint64_t> ids(cfg.trials);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) ids[i] = i;
  return ids;
}

CommandResult finish_lemma(const ExperimentConfig& cfg,
                           const std::vector<LemmaRow>& rows) {
  CommandResult result;
  bool all_hold = true;
  for (const auto& row : rows) {
    if (!row.report.holds) {
      all_hold = false;
      result.summary += fmt::format(
          "violated: instance {} (lhs {} > rhs {}); replay with --seed {} "
          "--replay {}\n",
          row.instance_id, format_double(row.report.lhs),
          format_double(row.report.rhs), row.seed, row.instance_id);
    }
  }
  if (cfg.format == "json") {
    Json out{{"command", cfg.command}, {"config", config_to_json(cfg)}};
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(lemma_json_row(row));
    out["rows"] = std::move(arr);
    out["all_hold"] = all_hold;
    result.artifact = out.dump(2) + "\n";
  } else {
    result.artifact = std::string(kLemmaCsvHeader) + "\n";
    for (const auto& row : rows) result.artifact += lemma_csv_line(row);
  }
  result.summary += fmt::format("{}: {} instances, {}\n", cfg.command,
                                rows.size(),
                                all_hold ? "all hold" : "VIOLATION");
  result.exit_code = all_hold ? kExitOk : kExitBoundViolation;
  return result;
}

double theorem1_theta(const ExperimentConfig& cfg) {
  if (cfg.theta) return *cfg.theta;
  return std::pow(static_cast<double>(cfg.T), -*cfg.alpha);
}

std::string adversary_csv(const ExperimentConfig& cfg,
                          const AdversaryReport& r) {
  const double bound =
      r.mode == AdversaryMode::kTheorem2 ? r.query_bound : r.chain_bound;
  std::string out =
      "instance_id,n,T,t,lhs,rhs,slack,holds,seed,family,mode,tau,"
      "mutation_word,mutation_value,bound,success_f,success_g,gap,diverge,"
      "non_contradictory\n";
  out += fmt::format(
      "0,{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.n, r.T,
      r.t, format_double(r.lhs), format_double(r.rhs),
      format_double(r.rhs - r.lhs), r.all_checks_hold() ? "true" : "false",
      r.seed, cfg.program,
      r.mode == AdversaryMode::kTheorem2 ? "theorem2" : "theorem1", r.tau,
      r.mutation_word, r.mutation_value, format_double(bound),
      format_double(r.success_base), format_double(r.success_mutated),
      format_double(r.success_gap), r.outputs_diverge ? "true" : "false",
      r.non_contradictory() ? "true" : "false");
  return out;
}

}  // namespace

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig cfg;
  try {
    if (j.contains("command")) cfg.command = j["command"].get<std::string>();
    if (j.contains("n")) cfg.n = j["n"].get<unsigned>();
    if (j.contains("T")) cfg.T = j["T"].get<unsigned>();
    if (j.contains("t")) cfg.t = j["t"].get<unsigned>();
    if (j.contains("theta")) cfg.theta = j["theta"].get<double>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<unsigned>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("program")) cfg.program = j["program"].get<std::string>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("replay")) cfg.replay = j["replay"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("bad config file: {}", e.what()));
  }
  return cfg;
}

Json config_to_json(const ExperimentConfig& cfg) {
  Json j{{"command", cfg.command}, {"n", cfg.n}, {"T", cfg.T}};
  if (cfg.t) j["t"] = *cfg.t;
  if (cfg.theta) j["theta"] = *cfg.theta;
  if (cfg.alpha) j["alpha"] = *cfg.alpha;
  j["trials"] = cfg.trials;
  if (cfg.seed) j["seed"] = *cfg.seed;
  j["program"] = cfg.program;
  j["format"] = cfg.format;
  if (cfg.replay) j["replay"] = *cfg.replay;
  return j;
}

void validate_config(const ExperimentConfig& cfg) {
  const std::string& c = cfg.command;
  if (c != "lemma1" && c != "lemma2" && c != "adversary" && c != "demo") {
    throw ConfigError(fmt::format("unknown command '{}'", c));
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("--format must be csv or json");
  }
  if (cfg.trials < 1) throw ConfigError("--trials must be >= 1");
  if (cfg.n < 1) throw ConfigError("--n must be >= 1");
  if (c != "demo" && !cfg.seed) {
    throw ConfigError("--seed is required for randomized commands");
  }
  if (cfg.replay && *cfg.replay >= cfg.trials) {
    throw ConfigError("--replay id must be below --trials");
  }
  if (c == "lemma1" || c == "lemma2") {
    if (cfg.n > kMaxLemmaWidth) {
      throw ConfigError(fmt::format("--n must be <= {}", kMaxLemmaWidth));
    }
    if (c == "lemma2" && cfg.t && *cfg.t < 1) {
      throw ConfigError("--t must be >= 1");
    }
    return;
  }
  if (cfg.n > kMaxOrbitWidth) {
    throw ConfigError(fmt::format(
        "--n must be <= {} for full-orbit experiments", kMaxOrbitWidth));
  }
  if (cfg.T < 1) throw ConfigError("--T must be >= 1");
  if (c == "demo") return;
  if (cfg.program != "naive" && cfg.program != "undersample" &&
      cfg.program != "grover") {
    throw ConfigError(fmt::format("unknown program family '{}'", cfg.program));
  }
  if (cfg.theta && cfg.alpha) {
    throw ConfigError("--theta and --alpha are mutually exclusive");
  }
  if (cfg.theta && !(*cfg.theta > 0.0 && *cfg.theta <= 1.0)) {
    throw ConfigError("--theta must lie in (0, 1]");
  }
  if (cfg.alpha && !(*cfg.alpha >= 0.0)) {
    throw ConfigError("--alpha must be >= 0");
  }
  const bool theorem1 = cfg.theta || cfg.alpha;
  if (!theorem1 && cfg.T > (1u << cfg.n)) {
    throw ConfigError("theorem 2 mode needs T <= 2^n");
  }
  const unsigned t = cfg.t.value_or(1);
  if (cfg.program == "undersample" && (t < 1 || t >= cfg.T)) {
    throw ConfigError("undersample needs 1 <= t < T");
  }
  if (cfg.program == "grover" && cfg.n < 2) {
    throw ConfigError("grover needs n >= 2");
  }
}

CommandResult run_lemma1(const ExperimentConfig& cfg, Execution exec) {
  const std::uint64_t seed = *cfg.seed;
  const auto ids = instance_ids(cfg);
  auto rows = map_instances(
      ids.size(),
      [&](std::size_t k) {
        const std::uint64_t id = ids[k];
        const std::uint64_t s = instance_seed(seed, id);
        const Lemma1Instance inst = make_lemma1_instance(cfg.n, s);
        LemmaRow row{id, cfg.n, 0, 1, seed, s,
                     check_lemma1(inst.state, inst.f, inst.g), Json::object()};
        row.extra["support"] = inst.state.support_size();
        row.extra["disagreements"] = disagreement_count(inst.f, inst.g);
        return row;
      },
      exec);
  return finish_lemma(cfg, rows);
}

CommandResult run_lemma2(const ExperimentConfig& cfg, Execution exec) {
  const std::uint64_t seed = *cfg.seed;
  const unsigned max_t = cfg.t.value_or(kDefaultLemma2MaxT);
  const auto ids = instance_ids(cfg);
  auto rows = map_instances(
      ids.size(),
      [&](std::size_t k) {
        const std::uint64_t id = ids[k];
        const std::uint64_t s = instance_seed(seed, id);
        // Every eighth instance writes f(a) back so g = f.
        const Lemma2Instance inst =
            make_lemma2_instance(cfg.n, max_t, s, id % 8 == 0);
        LemmaRow row{id,
                     cfg.n,
                     0,
                     inst.program.query_count(),
                     seed,
                     s,
                     check_lemma2(inst.program, inst.f, inst.a, inst.to,
                                  inst.input),
                     Json::object()};
        row.extra["a"] = inst.a.value();
        row.extra["to"] = inst.to.value();
        row.extra["input"] = inst.input.value();
        row.extra["program"] = "random";
        return row;
      },
      exec);
  return finish_lemma(cfg, rows);
}

CommandResult run_adversary(const ExperimentConfig& cfg) {
  const std::uint64_t seed = *cfg.seed;
  const unsigned t = cfg.t.value_or(1);
  const ProgramSpec spec = make_program(cfg.program, cfg.n, cfg.T, t);
  const LengthPreservingFn f = random_full_cycle(cfg.n, seed);
  CommandResult result;
  Json out{{"command", "adversary"},
           {"config", config_to_json(cfg)},
           {"family", spec.family},
           {"program", program_to_json(spec.program)}};

  std::optional<AdversaryReport> report;
  if (cfg.theta || cfg.alpha) {
    auto outcome =
        construct_adversary_t1(spec.program, f, cfg.T, theorem1_theta(cfg), seed);
    if (auto* inf = std::get_if<Infeasibility>(&outcome)) {
      out["report"] = infeasibility_to_json(*inf);
      result.exit_code = kExitInfeasible;
      result.summary = fmt::format("adversary: infeasible at step {}: {}\n",
                                   inf->failing_step, inf->reason);
      if (cfg.format == "json") {
        result.artifact = out.dump(2) + "\n";
      } else {
        result.artifact = fmt::format(
            "instance_id,n,T,t,feasible,failing_step,theta,seed\n"
            "0,{},{},{},false,{},{},{}\n",
            cfg.n, cfg.T, spec.program.query_count(), inf->failing_step,
            format_double(inf->theta), seed);
      }
      return result;
    }
    report = std::get<AdversaryReport>(std::move(outcome));
  } else {
    report = construct_adversary_t2(spec.program, f, cfg.T, seed);
  }

  const AdversaryReport& r = *report;
  out["report"] = adversary_report_to_json(r);
  result.artifact =
      cfg.format == "json" ? out.dump(2) + "\n" : adversary_csv(cfg, r);
  result.exit_code = r.all_checks_hold() ? kExitOk : kExitBoundViolation;
  result.summary = fmt::format(
      "adversary ({}): lhs {} rhs {} gap {} diverge {}{}\n", spec.family,
      format_double(r.lhs), format_double(r.rhs), format_double(r.success_gap),
      r.outputs_diverge ? "yes" : "no",
      r.non_contradictory() ? "; bound non-contradictory (rhs >= 1)" : "");
  for (const auto& c : r.checks) {
    if (!c.holds) {
      result.summary += fmt::format("violated: {} ({} > {})\n", c.name,
                                    format_double(c.lhs), format_double(c.rhs));
    }
  }
  return result;
}

CommandResult run_demo(const ExperimentConfig& cfg) {
  const std::uint64_t seed = cfg.seed.value_or(kDemoSeed);
  const unsigned n = cfg.n;
  const std::uint64_t T = std::min<std::uint64_t>(cfg.T, 1u << n);
  struct DemoRow {
    std::string program;
    std::size_t t;
    std::uint64_t T;
    double success_f;
    double success_g;
    double lhs;
    double rhs;
    double bound;
  };
  std::vector<DemoRow> rows;
  const LengthPreservingFn f = random_full_cycle(n, seed);

  const auto naive =
      construct_adversary_t2(naive_iteration_program(n, T), f, T, seed);
  rows.push_back({"naive", naive.t, T, naive.success_base,
                  naive.success_mutated, naive.lhs, naive.rhs,
                  naive.query_bound});

  if (n >= 2) {
    const unsigned k = static_cast<unsigned>(std::floor(
        M_PI / 4.0 / std::asin(std::pow(2.0, -0.5 * n))));
    const BitWord marked(n, instance_seed(seed, 1) % (1u << n));
    const LengthPreservingFn oracle = grover_oracle(n, marked);
    const QueryProgram grover = grover_program(n, k);
    const BitWord zero = BitWord::zeros(n);
    const LemmaReport lemma =
        check_lemma2(grover, oracle, marked, zero, zero);
    const LengthPreservingFn unmarked = mutate(oracle, marked, zero);
    rows.push_back({"grover", k, 0,
                    success_probability(run(grover, oracle, zero), marked),
                    success_probability(run(grover, unmarked, zero), marked),
                    lemma.lhs, lemma.rhs, lemma.rhs});
  }

  if (T >= 2) {
    const auto under =
        construct_adversary_t2(undersampling_program(n, T, 1), f, T, seed);
    rows.push_back({"undersample", under.t, T, under.success_base,
                    under.success_mutated, under.lhs, under.rhs,
                    under.query_bound});
  }

  CommandResult result;
  result.summary = fmt::format("{:<12} {:>3} {:>4} {:>10} {:>10} {:>10} {:>10}\n",
                               "program", "t", "T", "success_f", "success_g",
                               "lhs", "bound");
  bool ok = true;
  for (const auto& r : rows) {
    result.summary += fmt::format(
        "{:<12} {:>3} {:>4} {:>10.6f} {:>10.6f} {:>10.6f} {:>10.6f}\n",
        r.program, r.t, r.T, r.success_f, r.success_g, r.lhs, r.bound);
    ok = ok && r.lhs <= r.rhs + kInequalitySlack;
  }
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"program", r.program},
                     {"t", r.t},
                     {"T", r.T},
                     {"success_f", r.success_f},
                     {"success_g", r.success_g},
                     {"lhs", r.lhs},
                     {"rhs", r.rhs},
                     {"bound", r.bound}});
    }
    result.artifact =
        Json{{"command", "demo"}, {"seed", seed}, {"rows", std::move(arr)}}
            .dump(2) +
        "\n";
  } else {
    result.artifact = "program,t,T,success_f,success_g,lhs,rhs,bound\n";
    for (const auto& r : rows) {
      result.artifact += fmt::format(
          "{},{},{},{},{},{},{},{}\n", r.program, r.t, r.T,
          format_double(r.success_f), format_double(r.success_g),
          format_double(r.lhs), format_double(r.rhs), format_double(r.bound));
    }
  }
  result.exit_code = ok ? kExitOk : kExitBoundViolation;
  return result;
}

CommandResult run_command(const ExperimentConfig& cfg, Execution exec) {
  try {
    validate_config(cfg);
  } catch (const ConfigError& e) {
    return CommandResult{kExitConfig, "", fmt::format("error: {}\n", e.what())};
  }
  if (cfg.command == "lemma1") return run_lemma1(cfg, exec);
  if (cfg.command == "lemma2") return run_lemma2(cfg, exec);
  if (cfg.command == "adversary") return run_adversary(cfg);
  return run_demo(cfg);
}

}  // namespace qiter
