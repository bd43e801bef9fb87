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

#include "qiter/state.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "dense_reference.hpp"
#include "qiter/corpus.hpp"

namespace qiter {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(BasisStateTest, PlacesUnitAmplitudeOnWord) {
  const QuantumState s = basis_state(RegisterLayout(0, 1), "00");
  ASSERT_EQ(s.support_size(), 1u);
  EXPECT_EQ(s.amplitude(0), Complex(1.0, 0.0));

  const QuantumState t = basis_state(RegisterLayout(1, 1), "101");
  ASSERT_EQ(t.support_size(), 1u);
  EXPECT_EQ(t.amplitude(parse_key("101")), Complex(1.0, 0.0));
}

TEST(BasisStateTest, AllZeroWordIsStartState) {
  const RegisterLayout layout(4, 3);
  const QuantumState s = basis_state(layout, std::string(layout.total(), '0'));
  EXPECT_EQ(s, basis_state(layout, BasisKey{0}));
}

TEST(BasisStateTest, RejectsLengthMismatch) {
  EXPECT_THROW(basis_state(RegisterLayout(0, 1), "000"), std::invalid_argument);
}

TEST(StateDistanceTest, Examples) {
  const RegisterLayout layout(0, 1);
  const QuantumState zero = basis_state(layout, "00");
  const QuantumState one = basis_state(layout, "10");
  EXPECT_EQ(state_distance(zero, zero), 0.0);
  EXPECT_NEAR(state_distance(zero, one), std::sqrt(2.0), 1e-15);

  const QuantumState plus = QuantumState::from_entries(
      layout, {{parse_key("00"), kInvSqrt2}, {parse_key("10"), kInvSqrt2}});
  // Frozen from tests/oracles/dense_values.py.
  EXPECT_NEAR(state_distance(zero, plus), 0.7653668647301795, 1e-12);
}

TEST(StateDistanceTest, RejectsLayoutMismatch) {
  EXPECT_THROW(state_distance(basis_state(RegisterLayout(0, 1), BasisKey{0}),
                              basis_state(RegisterLayout(1, 1), BasisKey{0})),
               std::invalid_argument);
}

TEST(ApplyWorkingTest, IdentityLeavesStateUnchanged) {
  Rng rng(3);
  const RegisterLayout layout(2, 2);
  const QuantumState s = random_state(layout, rng);
  const std::vector<unsigned> targets{1, 4};
  EXPECT_EQ(apply_working(s, targets, DenseUnitary::identity(2)), s);
}

TEST(ApplyWorkingTest, HadamardOnZero) {
  const RegisterLayout layout(1, 1);
  const std::vector<unsigned> target{0};
  const QuantumState out =
      apply_working(basis_state(layout, "000"), target, DenseUnitary::hadamard());
  EXPECT_NEAR(out.amplitude(parse_key("000")).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(out.amplitude(parse_key("100")).real(), kInvSqrt2, 1e-15);
  EXPECT_EQ(out.support_size(), 2u);
}

TEST(ApplyWorkingTest, HadamardPairGivesQuarterMasses) {
  const RegisterLayout layout(0, 2);
  const std::vector<unsigned> targets{0, 1};
  const QuantumState out = apply_working(basis_state(layout, BasisKey{0}),
                                         targets, DenseUnitary::hadamard_all(2));
  const auto marginal = measure_marginal(out, targets);
  ASSERT_EQ(marginal.size(), 4u);
  for (const auto& [word, p] : marginal) EXPECT_NEAR(p, 0.25, 1e-15);
}

TEST(ApplyWorkingTest, RejectsBadTargetsAndMatrices) {
  const QuantumState s = basis_state(RegisterLayout(0, 1), BasisKey{0});
  const std::vector<unsigned> two{0, 1};
  const std::vector<unsigned> out_of_range{2};
  const std::vector<unsigned> repeated{0, 0};
  EXPECT_THROW(apply_working(s, two, DenseUnitary::hadamard()),
               std::invalid_argument);
  EXPECT_THROW(apply_working(s, out_of_range, DenseUnitary::hadamard()),
               std::invalid_argument);
  EXPECT_THROW(apply_working(s, repeated, DenseUnitary::identity(2)),
               std::invalid_argument);

  Eigen::MatrixXcd not_unitary(2, 2);
  not_unitary << 1, 1, 0, 1;
  EXPECT_THROW(DenseUnitary{not_unitary}, std::invalid_argument);
  EXPECT_THROW(DenseUnitary(Eigen::MatrixXcd::Identity(3, 3)),
               std::invalid_argument);
  EXPECT_THROW(DenseUnitary(Eigen::MatrixXcd::Identity(8, 8), 2),
               std::invalid_argument);
}

TEST(ApplyWorkingTest, MatchesDenseReference) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const RegisterLayout layout(trial % 3, 1 + trial % 3);
    const QuantumState s = random_state(layout, rng);
    const unsigned arity = 1 + trial % 3;
    std::vector<unsigned> all(layout.total());
    std::iota(all.begin(), all.end(), 0u);
    std::shuffle(all.begin(), all.end(), rng);
    const std::vector<unsigned> targets(all.begin(), all.begin() + arity);
    const DenseUnitary u = random_unitary(arity, rng);

    const auto expected =
        testing::dense_apply(testing::to_dense(s), layout.total(), targets,
                             u.matrix());
    const auto actual = testing::to_dense(apply_working(s, targets, u));
    EXPECT_LT(testing::dense_distance(expected, actual), 1e-12);
  }
}

TEST(ApplyBasisPermutationTest, IdentityAndSectionSwap) {
  const RegisterLayout layout(0, 2);
  const QuantumState s = basis_state(layout, "0111");
  EXPECT_EQ(apply_basis_permutation(s, [](BasisKey k) { return k; }), s);

  const auto swap = [&](BasisKey k) {
    return BasisKey{layout.compose(0, layout.answer_word(k),
                                   layout.query_word(k))};
  };
  EXPECT_EQ(apply_basis_permutation(s, swap), basis_state(layout, "1101"));
}

TEST(ApplyBasisPermutationTest, InverseRestoresState) {
  Rng rng(5);
  const RegisterLayout layout(1, 2);
  const QuantumState s = random_state(layout, rng);
  const BasisKey mask = low_mask(layout.total());
  const auto rotate = [&](BasisKey k) { return (k + 3) & mask; };
  const auto unrotate = [&](BasisKey k) { return (k + mask + 1 - 3) & mask; };
  const QuantumState back =
      apply_basis_permutation(apply_basis_permutation(s, rotate), unrotate);
  EXPECT_LE(state_distance(back, s), 1e-12);
}

TEST(ApplyBasisPermutationTest, RejectsNonInjectiveMaps) {
  const QuantumState small = basis_state(RegisterLayout(0, 2), BasisKey{0});
  EXPECT_THROW(
      apply_basis_permutation(small, [](BasisKey k) { return k >> 1; }),
      std::invalid_argument);

  // 40 qubits: sampled check.
  const QuantumState wide = basis_state(RegisterLayout(36, 2), BasisKey{0});
  EXPECT_THROW(
      apply_basis_permutation(wide, [](BasisKey k) { return k & ~BasisKey{1}; }),
      std::invalid_argument);
}

TEST(MeasureMarginalTest, Examples) {
  const RegisterLayout layout(0, 1);
  const std::vector<unsigned> both{0, 1};
  const auto full = measure_marginal(basis_state(layout, "10"), both);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full.at(parse_key("10")), 1.0);

  const QuantumState uniform =
      apply_working(basis_state(layout, "00"), both, DenseUnitary::hadamard_all(2));
  const std::vector<unsigned> first{0};
  const auto half = measure_marginal(uniform, first);
  EXPECT_NEAR(half.at(0), 0.5, 1e-15);
  EXPECT_NEAR(half.at(1), 0.5, 1e-15);
}

// Properties over seeded random states.

TEST(StatePropertyTest, OperationsPreserveNorm) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const RegisterLayout layout(trial % 4, 1 + trial % 4);
    const QuantumState s = random_state(layout, rng);
    const unsigned arity = 1 + trial % std::min(3u, layout.total());
    std::vector<unsigned> targets(arity);
    std::iota(targets.begin(), targets.end(), layout.total() - arity);
    const QuantumState w = apply_working(s, targets, random_unitary(arity, rng));
    EXPECT_NEAR(w.norm(), s.norm(), kNormTolerance);

    const BasisKey mask = low_mask(layout.total());
    const QuantumState p =
        apply_basis_permutation(s, [&](BasisKey k) { return (~k) & mask; });
    EXPECT_NEAR(p.norm(), s.norm(), kNormTolerance);
  }
}

TEST(StatePropertyTest, WorkingTransformIsLocal) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const RegisterLayout layout(2, 2);  // 6 qubits
    const QuantumState s = random_state(layout, rng);
    const std::vector<unsigned> targets{0, 3};
    const std::vector<unsigned> others{1, 2, 4, 5};
    const auto before = measure_marginal(s, others);
    const auto after =
        measure_marginal(apply_working(s, targets, random_unitary(2, rng)), others);
    for (const auto& [word, p] : before) {
      const auto it = after.find(word);
      EXPECT_NEAR(it == after.end() ? 0.0 : it->second, p, kNormTolerance);
    }
  }
}

TEST(StatePropertyTest, DenseAndPermutationPathsAgree) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const RegisterLayout layout(trial % 3, 1 + trial % 3);
    const unsigned total = layout.total();
    const QuantumState s = random_state(layout, rng);
    std::vector<BasisKey> image(std::size_t{1} << total);
    std::iota(image.begin(), image.end(), BasisKey{0});
    std::shuffle(image.begin(), image.end(), rng);
    const BasisMap p = [&](BasisKey k) { return image[static_cast<std::size_t>(k)]; };

    std::vector<unsigned> all(total);
    std::iota(all.begin(), all.end(), 0u);
    const QuantumState by_dense = apply_working(s, all, permutation_matrix(total, p));
    const QuantumState by_perm = apply_basis_permutation(s, p);
    EXPECT_LE(state_distance(by_dense, by_perm), kNormTolerance);
  }
}

}  // namespace
}  // namespace qiter
