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

#include "qiter/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <fmt/core.h>

#include "qiter/metrics.hpp"

namespace qiter {
namespace {

void require_full_cycle(const LengthPreservingFn& f) {
  if (!orbit(f, BitWord::zeros(f.width()), f.domain_size()).is_full_cycle()) {
    throw std::invalid_argument("adversary needs a full-cycle oracle");
  }
}

// k-fold iteration of f with f(at) replaced by y, without copying the table.
std::uint64_t iterate_patched(const LengthPreservingFn& f, std::uint64_t at,
                              std::uint64_t y, std::uint64_t k,
                              std::uint64_t x) {
  for (std::uint64_t s = 0; s < k; ++s) x = x == at ? y : f(x);
  return x;
}

void add_check(AdversaryReport& r, std::string name, double lhs, double rhs) {
  r.checks.push_back({std::move(name), lhs, rhs, lhs <= rhs + kInequalitySlack});
}

// Runs the program under base and mutated, filling the shared report fields.
void compare_runs(const QueryProgram& program, AdversaryReport& r) {
  const BitWord zero = BitWord::zeros(r.n);
  const Trace under_base = run(program, r.base, zero);
  const Trace under_mut = run(program, r.mutated, zero);

  r.target_base = iterate(r.base, r.T, std::uint64_t{0});
  r.target_mutated = iterate(r.mutated, r.T, std::uint64_t{0});
  r.outputs_diverge = r.target_base != r.target_mutated;

  r.lhs = state_distance(under_base.final_state, under_mut.final_state);
  r.rhs = 0.0;
  r.rhs_terms.clear();
  for (const auto& chi : under_base.pre_query) {
    r.rhs_terms.push_back(2.0 * query_amplitude(chi, r.mutation_word));
    r.rhs += r.rhs_terms.back();
  }

  auto prob = [&](const Trace& tr, std::uint64_t target) {
    return output_probability(tr.final_state, tr.output_start, tr.output_len,
                              target);
  };
  r.success_base = prob(under_base, r.target_base);
  r.success_mutated = prob(under_mut, r.target_mutated);
  r.cross_base = prob(under_base, r.target_mutated);
  r.cross_mutated = prob(under_mut, r.target_base);
  r.success_gap = std::max(std::abs(r.success_base - r.cross_mutated),
                           std::abs(r.cross_base - r.success_mutated));

  add_check(r, "lemma2", r.lhs, r.rhs);
  add_check(r, "probability_gap", r.success_gap, 2.0 * r.lhs);
}

}  // namespace

QueryMatrix::QueryMatrix(std::size_t rows, std::size_t cols,
                         std::vector<std::uint64_t> orbit_words)
    : rows_(rows),
      cols_(cols),
      entries_(rows * cols, 0.0),
      orbit_words_(std::move(orbit_words)) {
  if (orbit_words_.size() != cols) {
    throw std::invalid_argument("one orbit word per column expected");
  }
}

double QueryMatrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) s += at(i, j);
  return s;
}

double QueryMatrix::column_sum(std::size_t j) const {
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, j);
  return s;
}

QueryMatrix build_query_matrix(const Trace& trace, const LengthPreservingFn& f,
                               std::uint64_t T) {
  std::vector<std::uint64_t> words(T + 1);
  words[0] = 0;
  for (std::uint64_t j = 1; j <= T; ++j) words[j] = f(words[j - 1]);
  QueryMatrix m(trace.query_count(), T + 1, words);
  for (std::size_t i = 0; i < trace.query_count(); ++i) {
    const auto dist = query_mass_distribution(trace.pre_query[i]);
    for (std::size_t j = 0; j <= T; ++j) {
      auto it = dist.find(words[j]);
      if (it != dist.end()) m.at(i, j) = it->second;
    }
  }
  return m;
}

TauChoice select_tau(const QueryMatrix& matrix) {
  if (matrix.cols() < 2) throw std::invalid_argument("select_tau needs T >= 1");
  TauChoice best{0, matrix.column_sum(0)};
  for (std::size_t j = 1; j + 1 < matrix.cols(); ++j) {
    const double s = matrix.column_sum(j);
    if (s < best.column_sum) best = {j, s};
  }
  return best;
}

std::vector<std::uint64_t> seeded_word_order(unsigned n, std::uint64_t seed) {
  std::vector<std::uint64_t> order(std::uint64_t{1} << n);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::optional<std::uint64_t> find_divergent_mutation(
    const LengthPreservingFn& f, std::uint64_t at, std::uint64_t T,
    const std::vector<std::uint64_t>& order, Execution exec) {
  const std::uint64_t reference = iterate(f, T, std::uint64_t{0});
  const std::uint64_t current = f(at);
  auto hit = first_match(
      order.size(),
      [&](std::size_t idx) {
        const std::uint64_t y = order[idx];
        return y != current &&
               iterate_patched(f, at, y, T, std::uint64_t{0}) != reference;
      },
      exec);
  if (!hit) return std::nullopt;
  return order[*hit];
}

HybridChainReport verify_hybrid_chain(
    const QueryProgram& program, const std::vector<LengthPreservingFn>& oracles,
    const BitWord& input) {
  const std::size_t t = program.query_count();
  if (oracles.size() != t + 1) {
    throw std::invalid_argument(fmt::format(
        "hybrid chain needs {} oracles, got {}", t + 1, oracles.size()));
  }
  for (std::size_t i = 0; i + 1 < oracles.size(); ++i) {
    if (disagreement_count(oracles[i], oracles[i + 1]) > 1) {
      throw std::invalid_argument(fmt::format(
          "oracles {} and {} differ on more than one word", i, i + 1));
    }
  }
  const LengthPreservingFn& last = oracles.back();
  HybridChainReport r;
  QuantumState hybrid = prepare(program, input);
  QuantumState reference = hybrid;
  double delta_sum = 0.0;
  for (std::size_t i = 0; i <= t; ++i) {
    const double partial = state_distance(hybrid, reference);
    r.partials.push_back(partial);
    r.holds.push_back(partial <= delta_sum + kInequalitySlack);
    r.all_hold = r.all_hold && r.holds.back();
    if (i == t) break;
    QuantumState next = advance(program, i, hybrid, oracles[i]);
    r.deltas.push_back(
        state_distance(next, advance(program, i, hybrid, last)));
    delta_sum += r.deltas.back();
    reference = advance(program, i, reference, last);
    hybrid = std::move(next);
  }
  return r;
}

bool AdversaryReport::all_checks_hold() const {
  if (!outputs_diverge) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.holds; });
}

AdversaryReport construct_adversary_t2(const QueryProgram& program,
                                       const LengthPreservingFn& f,
                                       std::uint64_t T, std::uint64_t seed) {
  const unsigned n = f.width();
  if (program.layout().query_width() != n) {
    throw std::invalid_argument("oracle width does not match the program");
  }
  if (T == 0 || T > f.domain_size()) {
    throw std::invalid_argument(
        fmt::format("theorem 2 construction needs 1 <= T <= 2^n, got T={}", T));
  }
  require_full_cycle(f);

  const Trace trace = run(program, f, BitWord::zeros(n));
  QueryMatrix matrix = build_query_matrix(trace, f, T);
  const TauChoice choice = select_tau(matrix);
  const std::uint64_t at = matrix.orbit_words()[choice.tau];

  const auto y =
      find_divergent_mutation(f, at, T, seeded_word_order(n, seed ^ 0x7a75));
  if (!y) {
    throw std::logic_error("no divergent mutation exists for a full cycle");
  }

  AdversaryReport r{.mode = AdversaryMode::kTheorem2,
                    .n = n,
                    .T = T,
                    .t = program.query_count(),
                    .seed = seed,
                    .original = f,
                    .base = f,
                    .mutated = mutate(f, BitWord(n, at), BitWord(n, *y)),
                    .mutation_word = at,
                    .mutation_value = *y};
  r.tau = choice.tau;
  r.column_sum = choice.column_sum;
  compare_runs(program, r);

  const double t = static_cast<double>(r.t);
  const double big_t = static_cast<double>(T);
  r.coarse_bound = 2.0 * std::sqrt(t * r.column_sum);
  r.query_bound = 2.0 * t / std::sqrt(big_t);
  r.checks.push_back({"pigeonhole", r.column_sum, t / big_t,
                      r.column_sum <= t / big_t + kNormTolerance});
  add_check(r, "cauchy_schwarz", r.rhs, r.coarse_bound);
  add_check(r, "distance_bound", r.lhs, r.query_bound);
  r.matrix = std::move(matrix);
  return r;
}

std::variant<AdversaryReport, Infeasibility> construct_adversary_t1(
    const QueryProgram& program, const LengthPreservingFn& f, std::uint64_t T,
    double theta, std::uint64_t seed) {
  const unsigned n = f.width();
  if (program.layout().query_width() != n) {
    throw std::invalid_argument("oracle width does not match the program");
  }
  if (T == 0) throw std::invalid_argument("T must be >= 1");
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("theta must lie in (0, 1]");
  }
  require_full_cycle(f);

  const std::size_t t = program.query_count();
  const std::uint64_t size = f.domain_size();
  std::vector<std::uint64_t> orbit_words(size);
  for (std::uint64_t j = 1; j < size; ++j) orbit_words[j] = f(orbit_words[j - 1]);

  // admissible[a] tracks membership in T_i: delta_a <= theta on every state
  // xi_0 .. xi_i seen so far.
  std::vector<bool> admissible(size, true);
  auto restrict_to_light = [&](const QuantumState& xi) {
    for (const auto& [word, delta] : query_mass_distribution(xi)) {
      if (delta > theta) admissible[word] = false;
    }
  };
  auto admissible_count = [&] {
    return static_cast<std::size_t>(
        std::count(admissible.begin(), admissible.end(), true));
  };

  const BitWord zero = BitWord::zeros(n);
  std::vector<QuantumState> xi{prepare(program, zero)};
  restrict_to_light(xi[0]);
  std::vector<LengthPreservingFn> oracles{f};
  std::vector<std::uint64_t> x{0};

  for (std::size_t i = 0; i < t; ++i) {
    const std::uint64_t xi_word = x[i];
    // Mutating at x_i is only allowed if x_i was light on xi_0 .. xi_i.
    const bool may_mutate = admissible[xi_word];
    xi.push_back(advance(program, i, xi[i], oracles[i]));
    restrict_to_light(xi[i + 1]);

    const LengthPreservingFn& current = oracles[i];
    std::optional<std::uint64_t> chosen;
    for (std::uint64_t j = 0; j < size && !chosen; ++j) {
      const std::uint64_t candidate = orbit_words[j];
      if (candidate != current(xi_word) && !may_mutate) continue;
      bool stays = true;
      std::uint64_t w = xi_word;
      for (std::uint64_t s = 1; s <= T && stays; ++s) {
        w = w == xi_word ? candidate : current(w);
        stays = admissible[w];
      }
      if (stays) chosen = candidate;
    }
    if (!chosen) {
      return Infeasibility{
          i,
          fmt::format("no orbit word keeps {} iterates inside the {} "
                      "admissible words after query {}",
                      T, admissible_count(), i),
          theta, x, admissible_count()};
    }
    oracles.push_back(
        mutate(current, BitWord(n, xi_word), BitWord(n, *chosen)));
    x.push_back(*chosen);
  }

  const LengthPreservingFn& last = oracles.back();
  const std::uint64_t x_t = x.back();
  const auto y =
      find_divergent_mutation(last, x_t, T, seeded_word_order(n, seed ^ 0x7a71));
  if (!y) {
    return Infeasibility{t,
                         fmt::format("changing f_t at x_t cannot change the "
                                     "{}-th iterate of 0",
                                     T),
                         theta, x, admissible_count()};
  }

  AdversaryReport r{.mode = AdversaryMode::kTheorem1,
                    .n = n,
                    .T = T,
                    .t = t,
                    .seed = seed,
                    .original = f,
                    .base = last,
                    .mutated = mutate(last, BitWord(n, x_t), BitWord(n, *y)),
                    .mutation_word = x_t,
                    .mutation_value = *y};
  r.theta = theta;
  r.chain_words = x;
  r.chain = verify_hybrid_chain(program, oracles, zero);
  compare_runs(program, r);

  const double td = static_cast<double>(t);
  const double root_theta = std::sqrt(theta);
  r.delta_bound = 2.0 * std::sqrt(td * theta);
  r.chain_bound = 6.0 * std::pow(td, 2.5) * root_theta;

  double delta_sum = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    add_check(r, fmt::format("delta_{}", i), r.chain.deltas[i], r.delta_bound);
    add_check(r, fmt::format("lemma3_{}", i + 1), r.chain.partials[i + 1],
              delta_sum + r.chain.deltas[i]);
    delta_sum += r.chain.deltas[i];
    add_check(r, fmt::format("partial_{}", i + 1), r.chain.partials[i + 1],
              static_cast<double>(i + 1) * r.delta_bound);
  }
  QuantumState reference = xi[0];
  for (std::size_t i = 0; i <= t; ++i) {
    add_check(r, fmt::format("light_target_{}", i), query_mass(xi[i], x_t),
              theta);
    if (i == t) break;
    const double amp = query_amplitude(reference, x_t);
    r.target_amplitudes.push_back(amp);
    add_check(r, fmt::format("target_amplitude_{}", i), amp,
              3.0 * std::pow(td, 1.5) * root_theta);
    reference = advance(program, i, reference, last);
  }
  add_check(r, "chain_bound", r.lhs, r.chain_bound);
  return r;
}

}  // namespace qiter
