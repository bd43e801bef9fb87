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

#ifndef QITER_ADVERSARY_HPP_
#define QITER_ADVERSARY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qiter/batch.hpp"
#include "qiter/machine.hpp"
#include "qiter/oracle.hpp"

namespace qiter {

// a_ij = delta_{f^j(0)}(chi_i) for query-reading states i = 0..t-1 and orbit
// positions j = 0..T.
class QueryMatrix {
 public:
  QueryMatrix(std::size_t rows, std::size_t cols,
              std::vector<std::uint64_t> orbit_words);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  double row_sum(std::size_t i) const;
  double column_sum(std::size_t j) const;
  const std::vector<std::uint64_t>& orbit_words() const { return orbit_words_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
  std::vector<std::uint64_t> orbit_words_;
};

struct TauChoice {
  std::size_t tau;
  double column_sum;
};

QueryMatrix build_query_matrix(const Trace& trace, const LengthPreservingFn& f,
                               std::uint64_t T);

// Column in [0, T) with the smallest sum; smallest index on ties.
TauChoice select_tau(const QueryMatrix& matrix);

// Words in a seeded random order; the mutation searches walk this order.
std::vector<std::uint64_t> seeded_word_order(unsigned n, std::uint64_t seed);

// First y in `order` with y != f(at) such that g = mutate(f, at, y) gives
// g^{T}(0) != f^{T}(0).
std::optional<std::uint64_t> find_divergent_mutation(
    const LengthPreservingFn& f, std::uint64_t at, std::uint64_t T,
    const std::vector<std::uint64_t>& order,
    Execution exec = Execution::kParallel);

struct HybridChainReport {
  std::vector<double> deltas;    // Delta_i, i = 0..t-1
  std::vector<double> partials;  // d_i = |xi_i - xi'_i|, i = 0..t
  std::vector<bool> holds;       // d_i <= sum_{k<i} Delta_k + slack
  bool all_hold = true;
};

// Compares the hybrid run (oracle f_i at query i) with the reference run that
// uses f_t throughout. `oracles` holds f_0 .. f_t.
HybridChainReport verify_hybrid_chain(
    const QueryProgram& program, const std::vector<LengthPreservingFn>& oracles,
    const BitWord& input);

enum class AdversaryMode { kTheorem2, kTheorem1 };

struct AdversaryReport {
  AdversaryMode mode = AdversaryMode::kTheorem2;
  unsigned n = 0;
  std::uint64_t T = 0;
  std::size_t t = 0;
  std::uint64_t seed = 0;

  LengthPreservingFn original;  // f as supplied
  LengthPreservingFn base;      // f (theorem 2) or f_t (theorem 1)
  LengthPreservingFn mutated;   // g (theorem 2) or phi (theorem 1)
  std::uint64_t mutation_word = 0;
  std::uint64_t mutation_value = 0;

  std::uint64_t target_base = 0;     // base^{T}(0)
  std::uint64_t target_mutated = 0;  // mutated^{T}(0)
  bool outputs_diverge = false;

  double lhs = 0.0;  // final-state distance between the two runs
  double rhs = 0.0;  // 2 * sum_i sqrt(delta_x(chi_i))
  std::vector<double> rhs_terms;

  double success_base = 0.0;     // P[target_base] under base
  double success_mutated = 0.0;  // P[target_mutated] under mutated
  double cross_base = 0.0;       // P[target_mutated] under base
  double cross_mutated = 0.0;    // P[target_base] under mutated
  double success_gap = 0.0;      // largest same-outcome probability change

  // Theorem 2 fields.
  std::optional<QueryMatrix> matrix;
  std::size_t tau = 0;
  double column_sum = 0.0;
  double coarse_bound = 0.0;  // 2 sqrt(t * column_sum)
  double query_bound = 0.0;   // 2t / sqrt(T)

  // Theorem 1 fields.
  double theta = 0.0;
  std::vector<std::uint64_t> chain_words;  // x_0 .. x_t
  HybridChainReport chain;
  std::vector<double> target_amplitudes;  // d_x(xi'_i), i = 0..t-1
  double delta_bound = 0.0;               // 2 sqrt(t theta)
  double chain_bound = 0.0;               // 6 t^{5/2} sqrt(theta)

  struct Check {
    std::string name;
    double lhs;
    double rhs;
    bool holds;
  };
  std::vector<Check> checks;

  // rhs >= 1: the bound does not rule out distinguishing f from g.
  bool non_contradictory() const { return rhs >= 1.0; }
  bool all_checks_hold() const;
};

struct Infeasibility {
  std::size_t failing_step = 0;
  std::string reason;
  double theta = 0.0;
  std::vector<std::uint64_t> chain_words;
  std::size_t admissible_words = 0;  // |T_i| at the failing step
};

// Theorem 2 construction on input 0^n. Requires f to be a full cycle and
// 1 <= T <= 2^n so the orbit positions 0..T-1 are distinct words.
AdversaryReport construct_adversary_t2(const QueryProgram& program,
                                       const LengthPreservingFn& f,
                                       std::uint64_t T, std::uint64_t seed);

// Theorem 1 construction with mass threshold theta in (0, 1] standing in for
// 1/T^alpha.
std::variant<AdversaryReport, Infeasibility> construct_adversary_t1(
    const QueryProgram& program, const LengthPreservingFn& f, std::uint64_t T,
    double theta, std::uint64_t seed);

}  // namespace qiter

#endif  // QITER_ADVERSARY_HPP_
