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

#ifndef QITER_MACHINE_HPP_
#define QITER_MACHINE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qiter/bits.hpp"
#include "qiter/oracle.hpp"
#include "qiter/state.hpp"

namespace qiter {

inline constexpr double kSuccessThreshold = 2.0 / 3.0;

// Oracle-independent basis permutations that programs can name. Sections are
// qubit ranges [start, start + len).
struct SectionSwap {
  unsigned a_start;
  unsigned b_start;
  unsigned len;
};

// dst ^= src.
struct SectionXor {
  unsigned src_start;
  unsigned dst_start;
  unsigned len;
};

// section += 1 (mod 2^len) when the control qubit is 1.
struct ConditionalIncrement {
  unsigned control;
  unsigned start;
  unsigned len;
};

using CatalogPermutation =
    std::variant<SectionSwap, SectionXor, ConditionalIncrement>;

std::string permutation_name(const CatalogPermutation& p);
void validate_permutation(const CatalogPermutation& p, unsigned total);
BasisKey permute_key(const CatalogPermutation& p, unsigned total, BasisKey key);
BasisKey inverse_permute_key(const CatalogPermutation& p, unsigned total,
                             BasisKey key);
QuantumState apply_catalog_permutation(const QuantumState& state,
                                       const CatalogPermutation& p);

struct QueryStep {};

struct DenseStep {
  std::vector<unsigned> targets;
  DenseUnitary unitary;
};

struct PermutationStep {
  CatalogPermutation permutation;
};

using ProgramStep = std::variant<QueryStep, DenseStep, PermutationStep>;

// A static step list. Steps never carry oracle data; the oracle is supplied
// only at run time, so every U_i depends on nothing but its position.
class QueryProgram {
 public:
  // Output section defaults to the query-word section.
  QueryProgram(RegisterLayout layout, std::vector<ProgramStep> steps);
  QueryProgram(RegisterLayout layout, std::vector<ProgramStep> steps,
               unsigned output_start, unsigned output_len);

  // The only way to build a program without queries (e.g. zero Grover
  // iterations). Every other constructor requires t >= 1.
  static QueryProgram query_free(RegisterLayout layout,
                                 std::vector<ProgramStep> steps,
                                 unsigned output_start, unsigned output_len);

  const RegisterLayout& layout() const { return layout_; }
  const std::vector<ProgramStep>& steps() const { return steps_; }
  unsigned output_start() const { return output_start_; }
  unsigned output_len() const { return output_len_; }
  std::vector<unsigned> output_qubits() const;

  std::size_t query_count() const { return query_positions_.size(); }

  // Non-query steps before the first query.
  std::span<const ProgramStep> prefix() const;
  // Non-query steps between query i and query i + 1 (or the end).
  std::span<const ProgramStep> segment(std::size_t i) const;

 private:
  struct QueryFreeTag {};
  QueryProgram(QueryFreeTag, RegisterLayout layout,
               std::vector<ProgramStep> steps, unsigned output_start,
               unsigned output_len);

  void validate() const;

  RegisterLayout layout_;
  std::vector<ProgramStep> steps_;
  unsigned output_start_;
  unsigned output_len_;
  std::vector<std::size_t> query_positions_;
  bool allow_query_free_ = false;
};

std::size_t query_count(const QueryProgram& program);

// Pre-query states chi_0 .. chi_{t-1} and the state after the last step.
struct Trace {
  std::vector<QuantumState> pre_query;
  QuantumState final_state;
  unsigned output_start;
  unsigned output_len;
  std::uint64_t oracle_fingerprint;

  std::size_t query_count() const { return pre_query.size(); }
  // chi_i for i < t, final state for i == t.
  const QuantumState& chi(std::size_t i) const;
};

// |0^w, input, 0^n>.
QuantumState initial_state(const QueryProgram& program, const BitWord& input);

QuantumState apply_steps(const QuantumState& state,
                         std::span<const ProgramStep> steps);

// chi_0: the initial state after the prefix.
QuantumState prepare(const QueryProgram& program, const BitWord& input);

// V_{i,f}: query under f followed by segment i.
QuantumState advance(const QueryProgram& program, std::size_t i,
                     const QuantumState& state, const LengthPreservingFn& f);

Trace run(const QueryProgram& program, const LengthPreservingFn& f,
          const BitWord& input);

// Probability that reading the output section of the final state gives
// `target`.
double success_probability(const Trace& trace, const BitWord& target);
double output_probability(const QuantumState& state, unsigned output_start,
                          unsigned output_len, std::uint64_t target);

}  // namespace qiter

#endif  // QITER_MACHINE_HPP_
