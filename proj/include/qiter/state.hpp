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

#ifndef QITER_STATE_HPP_
#define QITER_STATE_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qiter/bits.hpp"

namespace qiter {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kPruneThreshold = 1e-12;
inline constexpr double kInequalitySlack = 1e-8;
inline constexpr unsigned kDefaultDenseCap = 10;

// Sparse pure state over the basis of a RegisterLayout. Entries are kept
// sorted by key and entries with |amp| < kPruneThreshold are dropped, so two
// states built the same way compare bitwise equal.
class QuantumState {
 public:
  using Entry = std::pair<BasisKey, Complex>;

  // Builds a state from arbitrary (key, amplitude) pairs. Duplicate keys are
  // summed. The result must have unit norm within kNormTolerance unless
  // `require_unit` is false.
  static QuantumState from_entries(const RegisterLayout& layout,
                                   std::vector<Entry> entries,
                                   bool require_unit = true);

  const RegisterLayout& layout() const { return layout_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  Complex amplitude(BasisKey key) const;
  double norm() const;

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  QuantumState(RegisterLayout layout, std::vector<Entry> entries)
      : layout_(layout), entries_(std::move(entries)) {}

  RegisterLayout layout_;
  std::vector<Entry> entries_;
};

// Square complex matrix on `arity` qubits, verified unitary at construction.
class DenseUnitary {
 public:
  DenseUnitary(Eigen::MatrixXcd matrix, unsigned cap = kDefaultDenseCap);

  static DenseUnitary identity(unsigned arity);
  static DenseUnitary hadamard();
  static DenseUnitary pauli_x();
  // H^{(x) arity}.
  static DenseUnitary hadamard_all(unsigned arity);

  unsigned arity() const { return arity_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  unsigned arity_;
  Eigen::MatrixXcd matrix_;
};

QuantumState basis_state(const RegisterLayout& layout, BasisKey key);
QuantumState basis_state(const RegisterLayout& layout, std::string_view bits);

// Euclidean norm of the amplitude-wise difference.
double state_distance(const QuantumState& a, const QuantumState& b);

// W_{G,U}: u acts on the qubits `targets` (targets[0] is the most
// significant bit of u's index), identity elsewhere.
QuantumState apply_working(const QuantumState& state,
                           std::span<const unsigned> targets,
                           const DenseUnitary& u);

using BasisMap = std::function<BasisKey(BasisKey)>;

// Relocates amplitude of x to p(x). p is checked to be a bijection: over the
// whole basis when the register has at most 20 qubits, by sampling
// otherwise, and always injective on the support of `state`.
QuantumState apply_basis_permutation(const QuantumState& state,
                                     const BasisMap& p);

// Relocation without the bijection check, for maps that are permutations
// by construction.
QuantumState relocate_unchecked(const QuantumState& state, const BasisMap& p);

// Marginal distribution of the qubits `subset`, keyed by their bit pattern
// read in subset order.
std::map<BasisKey, double> measure_marginal(const QuantumState& state,
                                            std::span<const unsigned> subset);

// Dense matrix of a basis permutation on `total` qubits (total <= 10).
DenseUnitary permutation_matrix(unsigned total, const BasisMap& p);

}  // namespace qiter

#endif  // QITER_STATE_HPP_
