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

#include "qiter/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

namespace qiter {

LemmaReport make_report(double lhs, double rhs) {
  LemmaReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = lhs <= rhs + kInequalitySlack;
  return r;
}

double query_mass(const QuantumState& state, std::uint64_t a) {
  const RegisterLayout& layout = state.layout();
  double mass = 0.0;
  for (const auto& [key, amp] : state.entries()) {
    if (layout.query_word(key) == a) mass += std::norm(amp);
  }
  return mass;
}

double query_mass(const QuantumState& state, const BitWord& a) {
  if (a.width() != state.layout().query_width()) {
    throw std::invalid_argument(fmt::format(
        "word width {} does not match query width {}", a.width(),
        state.layout().query_width()));
  }
  return query_mass(state, a.value());
}

std::map<std::uint64_t, double> query_mass_distribution(
    const QuantumState& state) {
  const RegisterLayout& layout = state.layout();
  std::map<std::uint64_t, double> out;
  for (const auto& [key, amp] : state.entries()) {
    out[layout.query_word(key)] += std::norm(amp);
  }
  return out;
}

double query_amplitude(const QuantumState& state, std::uint64_t a) {
  return std::sqrt(query_mass(state, a));
}

double oracle_distance(const QuantumState& state, const LengthPreservingFn& f,
                       const LengthPreservingFn& g) {
  const unsigned n = state.layout().query_width();
  if (f.width() != n || g.width() != n) {
    throw std::invalid_argument("oracle width does not match the state");
  }
  double mass = 0.0;
  for (const auto& [word, delta] : query_mass_distribution(state)) {
    if (f(word) != g(word)) mass += delta;
  }
  return std::sqrt(mass);
}

LemmaReport check_lemma1(const QuantumState& state, const LengthPreservingFn& f,
                         const LengthPreservingFn& g) {
  const double lhs = state_distance(apply_query(state, f), apply_query(state, g));
  LemmaReport r = make_report(lhs, 2.0 * oracle_distance(state, f, g));
  r.f_fingerprint = f.fingerprint();
  r.g_fingerprint = g.fingerprint();
  return r;
}

LemmaReport check_lemma2(const QueryProgram& program,
                         const LengthPreservingFn& f, const BitWord& a,
                         const BitWord& to, const BitWord& input) {
  const LengthPreservingFn g = mutate(f, a, to);
  const Trace under_f = run(program, f, input);
  const Trace under_g = run(program, g, input);
  std::vector<double> terms;
  terms.reserve(under_f.query_count());
  double rhs = 0.0;
  for (const auto& chi : under_f.pre_query) {
    terms.push_back(2.0 * query_amplitude(chi, a.value()));
    rhs += terms.back();
  }
  LemmaReport r = make_report(
      state_distance(under_f.final_state, under_g.final_state), rhs);
  r.terms = std::move(terms);
  r.f_fingerprint = f.fingerprint();
  r.g_fingerprint = g.fingerprint();
  return r;
}

}  // namespace qiter
