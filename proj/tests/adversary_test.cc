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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qiter/algorithms.hpp"
#include "qiter/corpus.hpp"

namespace qiter {
namespace {

TEST(QueryMatrixTest, NaiveProgramIsDiagonal) {
  const LengthPreservingFn f = random_full_cycle(2, 4);
  const Trace trace = run(naive_iteration_program(2, 4), f, BitWord::zeros(2));
  const QueryMatrix m = build_query_matrix(trace, f, 4);
  ASSERT_EQ(m.rows(), 4u);
  ASSERT_EQ(m.cols(), 5u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_NEAR(m.at(i, j), i == j ? 1.0 : 0.0, 1e-12);
    }
  }
  const TauChoice choice = select_tau(m);
  EXPECT_EQ(choice.tau, 0u);
  EXPECT_NEAR(choice.column_sum, 1.0, 1e-12);
}

TEST(QueryMatrixTest, SingleQueryAtZero) {
  const LengthPreservingFn f = random_full_cycle(4, 1);
  const Trace trace = run(undersampling_program(4, 16, 1), f, BitWord::zeros(4));
  const QueryMatrix m = build_query_matrix(trace, f, 16);
  ASSERT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.at(0, 0), 1.0);
  for (std::size_t j = 1; j < 16; ++j) EXPECT_EQ(m.at(0, j), 0.0);
  // T = 2^n closes the cycle, so column T is word 0 again.
  EXPECT_EQ(m.at(0, 16), 1.0);
  const TauChoice choice = select_tau(m);
  EXPECT_EQ(choice.tau, 1u);
  EXPECT_EQ(choice.column_sum, 0.0);
}

TEST(QueryMatrixTest, OffOrbitQueriesGiveZeroMatrix) {
  // Orbit positions 0..2 are 00, 01, 10; the program only asks 11.
  const LengthPreservingFn f(2, {1, 2, 3, 0});
  const QueryProgram program(RegisterLayout(0, 2), {QueryStep{}});
  const Trace trace = run(program, f, BitWord(2, 3));
  const QueryMatrix m = build_query_matrix(trace, f, 3);
  const TauChoice choice = select_tau(m);
  EXPECT_EQ(choice.tau, 0u);
  EXPECT_EQ(choice.column_sum, 0.0);
}

TEST(QueryMatrixTest, RowsSumToAtMostOne) {
  // Needs T < 2^n so the T + 1 orbit positions are distinct words.
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 2 + trial % 3;
    const std::uint64_t T = (std::uint64_t{1} << n) - 1;
    const QueryProgram program = random_program(RegisterLayout(1, n), 1 + trial % 4, rng);
    const LengthPreservingFn f = random_full_cycle(n, rng());
    const QueryMatrix m = build_query_matrix(run(program, f, BitWord::zeros(n)), f, T);
    for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_LE(m.row_sum(i), 1.0 + 1e-9);
  }
}

TEST(FindDivergentMutationTest, SerialAndParallelAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LengthPreservingFn f = random_full_cycle(5, seed);
    const auto order = seeded_word_order(5, seed);
    const std::uint64_t at = iterate(f, seed % 20, std::uint64_t{0});
    const auto serial = find_divergent_mutation(f, at, 20, order, Execution::kSerial);
    const auto parallel = find_divergent_mutation(f, at, 20, order, Execution::kParallel);
    ASSERT_TRUE(serial.has_value());
    EXPECT_EQ(serial, parallel);
    const LengthPreservingFn g = mutate(f, BitWord(5, at), BitWord(5, *serial));
    EXPECT_NE(iterate(g, 20, std::uint64_t{0}), iterate(f, 20, std::uint64_t{0}));
  }
}

TEST(HybridChainTest, EqualOraclesGiveZero) {
  const LengthPreservingFn f = random_full_cycle(3, 2);
  const HybridChainReport r = verify_hybrid_chain(
      naive_iteration_program(3, 3), {f, f, f, f}, BitWord::zeros(3));
  for (double d : r.deltas) EXPECT_EQ(d, 0.0);
  for (double d : r.partials) EXPECT_EQ(d, 0.0);
  EXPECT_TRUE(r.all_hold);
}

TEST(HybridChainTest, SingleQueryTelescopesExactly) {
  Rng rng(6);
  const QueryProgram program = random_program(RegisterLayout(1, 2), 1, rng);
  const LengthPreservingFn f0 = random_function(2, 1);
  const LengthPreservingFn f1 = mutate(f0, BitWord(2, 0), BitWord(2, f0(0) ^ 3));
  const HybridChainReport r = verify_hybrid_chain(program, {f0, f1}, BitWord::zeros(2));
  ASSERT_EQ(r.deltas.size(), 1u);
  ASSERT_EQ(r.partials.size(), 2u);
  EXPECT_NEAR(r.partials[1], r.deltas[0], 1e-12);
}

TEST(HybridChainTest, RejectsMultiWordSteps) {
  const LengthPreservingFn f(2, {1, 2, 3, 0});
  const LengthPreservingFn g(2, {0, 1, 3, 0});
  EXPECT_THROW(verify_hybrid_chain(naive_iteration_program(2, 1), {f, g},
                                   BitWord::zeros(2)),
               std::invalid_argument);
}

TEST(HybridChainTest, RandomChainsSatisfyTelescope) {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + trial % 3;
    const unsigned t = 1 + trial % 4;
    const QueryProgram program = random_program(RegisterLayout(1, n), t, rng);
    std::vector<LengthPreservingFn> chain{random_function(n, rng())};
    for (unsigned i = 0; i < t; ++i) chain.push_back(random_disagreement(chain.back(), 1, rng));
    const HybridChainReport r = verify_hybrid_chain(program, chain, BitWord::zeros(n));
    EXPECT_TRUE(r.all_hold) << "trial " << trial;
  }
}

TEST(AdversaryT2Test, SingleQueryProgramCannotTell) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LengthPreservingFn f = random_full_cycle(4, seed);
    const AdversaryReport r = construct_adversary_t2(undersampling_program(4, 16, 1), f, 16, seed);
    EXPECT_TRUE(r.outputs_diverge);
    EXPECT_NE(r.target_base, r.target_mutated);
    EXPECT_EQ(r.column_sum, 0.0);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.success_gap, 0.0);
    EXPECT_FALSE(r.success_base >= kSuccessThreshold &&
                 r.success_mutated >= kSuccessThreshold);
    EXPECT_TRUE(r.all_checks_hold());
    EXPECT_EQ(r.query_bound, 0.5);
  }
}

TEST(AdversaryT2Test, NaiveProgramIsNonContradictory) {
  const LengthPreservingFn f = random_full_cycle(4, 12);
  const AdversaryReport r = construct_adversary_t2(naive_iteration_program(4, 16), f, 16, 12);
  EXPECT_TRUE(r.outputs_diverge);
  EXPECT_GE(r.lhs, 1.0);
  EXPECT_NEAR(r.rhs, 2.0, 1e-12);
  EXPECT_TRUE(r.non_contradictory());
  EXPECT_TRUE(r.all_checks_hold());
  EXPECT_NEAR(r.success_base, 1.0, 1e-9);
  EXPECT_NEAR(r.success_mutated, 1.0, 1e-9);
}

TEST(AdversaryT2Test, RejectsBadPreconditions) {
  const QueryProgram program = undersampling_program(3, 8, 1);
  EXPECT_THROW(construct_adversary_t2(program, LengthPreservingFn::identity(3), 8, 0),
               std::invalid_argument);
  EXPECT_THROW(construct_adversary_t2(program, random_full_cycle(3, 0), 9, 0),
               std::invalid_argument);
  EXPECT_THROW(construct_adversary_t2(program, random_full_cycle(3, 0), 0, 0),
               std::invalid_argument);
}

TEST(AdversaryT2Test, BoundsHoldOverRandomPrograms) {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 2 + trial % 3;
    const std::uint64_t T = std::uint64_t{1} << n;
    const QueryProgram program = random_program(RegisterLayout(1, n), 1 + trial % 4, rng);
    const LengthPreservingFn f = random_full_cycle(n, rng());
    const AdversaryReport r = construct_adversary_t2(program, f, T, trial);
    EXPECT_TRUE(r.outputs_diverge);
    EXPECT_LE(r.lhs, r.rhs + kInequalitySlack);
    EXPECT_LE(r.lhs, r.query_bound + kInequalitySlack);
    EXPECT_LE(r.column_sum, static_cast<double>(r.t) / T + 1e-9);
    EXPECT_LE(r.success_gap, 2.0 * r.lhs + kInequalitySlack);
    EXPECT_TRUE(r.all_checks_hold());
  }
}

TEST(AdversaryT1Test, VacuousThresholdAlwaysSucceeds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LengthPreservingFn f = random_full_cycle(4, seed);
    for (unsigned t : {1u, 2u, 3u}) {
      const auto outcome =
          construct_adversary_t1(undersampling_program(4, 16, t), f, 16, 1.0, seed);
      ASSERT_TRUE(std::holds_alternative<AdversaryReport>(outcome));
      const auto& r = std::get<AdversaryReport>(outcome);
      EXPECT_TRUE(r.outputs_diverge);
      EXPECT_TRUE(r.chain.all_hold);
      EXPECT_EQ(r.chain_words.size(), t + 1);
    }
  }
}

TEST(AdversaryT1Test, ProducedInstancesSatisfyInequalities) {
  Rng rng(19);
  int produced = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 4 + trial % 2;
    const std::uint64_t T = 4;
    const unsigned t = 1 + trial % 3;
    const QueryProgram program = random_program(RegisterLayout(1, n), t, rng);
    const LengthPreservingFn f = random_full_cycle(n, rng());
    const double theta = trial % 2 == 0 ? 0.5 : 0.25;
    const auto outcome = construct_adversary_t1(program, f, T, theta, trial);
    if (const auto* inf = std::get_if<Infeasibility>(&outcome)) {
      EXPECT_LE(inf->failing_step, t);
      EXPECT_FALSE(inf->reason.empty());
      continue;
    }
    ++produced;
    const auto& r = std::get<AdversaryReport>(outcome);
    EXPECT_TRUE(r.outputs_diverge);
    EXPECT_TRUE(r.chain.all_hold);
    for (double delta : r.chain.deltas) {
      EXPECT_LE(delta, r.delta_bound + kInequalitySlack);
    }
    EXPECT_TRUE(r.all_checks_hold());
  }
  EXPECT_GT(produced, 0);
}

TEST(AdversaryT1Test, TightThresholdReportsInfeasibility) {
  // Sixteen iterates cannot avoid the one heavy word of a basis query.
  const auto outcome = construct_adversary_t1(undersampling_program(4, 16, 1),
                                              random_full_cycle(4, 3), 16, 0.5, 3);
  ASSERT_TRUE(std::holds_alternative<Infeasibility>(outcome));
  EXPECT_EQ(std::get<Infeasibility>(outcome).failing_step, 0u);
}

TEST(AdversaryT1Test, RejectsBadTheta) {
  const QueryProgram program = undersampling_program(3, 4, 1);
  EXPECT_THROW(construct_adversary_t1(program, random_full_cycle(3, 0), 4, 0.0, 0),
               std::invalid_argument);
  EXPECT_THROW(construct_adversary_t1(program, random_full_cycle(3, 0), 4, 1.5, 0),
               std::invalid_argument);
}

}  // namespace
}  // namespace qiter
