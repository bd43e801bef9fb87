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

#ifndef QITER_EXPERIMENT_HPP_
#define QITER_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qiter/batch.hpp"
#include "qiter/serialize.hpp"

namespace qiter {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitBoundViolation = 2;
inline constexpr int kExitInfeasible = 3;

inline constexpr unsigned kMaxOrbitWidth = 6;
inline constexpr unsigned kMaxLemmaWidth = 10;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  std::string command;
  unsigned n = 4;
  unsigned T = 16;
  std::optional<unsigned> t;  // lemma2: largest program t (default 4)
  std::optional<double> theta;
  std::optional<double> alpha;
  unsigned trials = 100;
  std::optional<std::uint64_t> seed;
  std::string program = "undersample";
  std::string format = "csv";
  std::string out;
  std::optional<std::uint64_t> replay;
};

// Keys mirror the long flag names.
ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& cfg);

// Throws ConfigError.
void validate_config(const ExperimentConfig& cfg);

struct CommandResult {
  int exit_code = kExitOk;
  std::string artifact;  // report file contents
  std::string summary;   // human-readable lines for stdout/stderr
};

CommandResult run_lemma1(const ExperimentConfig& cfg,
                         Execution exec = Execution::kParallel);
CommandResult run_lemma2(const ExperimentConfig& cfg,
                         Execution exec = Execution::kParallel);
CommandResult run_adversary(const ExperimentConfig& cfg);
CommandResult run_demo(const ExperimentConfig& cfg);

// Validates and dispatches on cfg.command. Config problems become
// kExitConfig with the message in `summary`.
CommandResult run_command(const ExperimentConfig& cfg,
                          Execution exec = Execution::kParallel);

inline constexpr const char* kLemmaCsvHeader =
    "instance_id,n,T,t,lhs,rhs,slack,holds,seed";

}  // namespace qiter

#endif  // QITER_EXPERIMENT_HPP_
