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

#ifndef QITER_METRICS_HPP_
#define QITER_METRICS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qiter/machine.hpp"
#include "qiter/oracle.hpp"
#include "qiter/state.hpp"

namespace qiter {

// One measured instance of an inequality lhs <= rhs.
struct LemmaReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = true;   // lhs <= rhs + kInequalitySlack
  // Per-query contributions to rhs (Lemma 2: 2 * sqrt(delta_a(chi_i))).
  std::vector<double> terms;
  std::uint64_t f_fingerprint = 0;
  std::uint64_t g_fingerprint = 0;
};

LemmaReport make_report(double lhs, double rhs);

// delta_a: total squared amplitude on basis states whose query-word section
// equals a.
double query_mass(const QuantumState& state, const BitWord& a);
double query_mass(const QuantumState& state, std::uint64_t a);

// Nonzero delta_a for every word a.
std::map<std::uint64_t, double> query_mass_distribution(
    const QuantumState& state);

// d_a = sqrt(delta_a).
double query_amplitude(const QuantumState& state, std::uint64_t a);

// d_S(f, g) = sqrt(sum of delta_a over {a : f(a) != g(a)}).
double oracle_distance(const QuantumState& state, const LengthPreservingFn& f,
                       const LengthPreservingFn& g);

// |Qu_f(state) - Qu_g(state)| against 2 d_S(f, g).
LemmaReport check_lemma1(const QuantumState& state, const LengthPreservingFn& f,
                         const LengthPreservingFn& g);

// Runs `program` under f and under g = mutate(f, a, to) and compares the
// final distance with 2 * sum_i sqrt(delta_a(chi_i)) over pre-query states.
LemmaReport check_lemma2(const QueryProgram& program,
                         const LengthPreservingFn& f, const BitWord& a,
                         const BitWord& to, const BitWord& input);

}  // namespace qiter

#endif  // QITER_METRICS_HPP_
