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

#ifndef QITER_ALGORITHMS_HPP_
#define QITER_ALGORITHMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qiter/machine.hpp"
#include "qiter/oracle.hpp"

namespace qiter {

// Honest iteration: T queries, n(T-1) history qubits. After the run the
// history holds x_1 .. x_{T-1}, the query word holds x_T = f^{T}(input) and
// the answer section holds the input.
QueryProgram naive_iteration_program(unsigned n, unsigned T);

// Truncated iteration with t < T queries; outputs f^{t}(input) as its guess
// for f^{T}(input).
QueryProgram undersampling_program(unsigned n, unsigned T, unsigned t);

// Grover search with k iterations. Pair it with grover_oracle(n, marked):
// the answer's last qubit is prepared in |->, so the XOR oracle kicks back a
// phase on the marked word.
QueryProgram grover_program(unsigned n, unsigned k,
                            unsigned dense_cap = kDefaultDenseCap);

// f(marked) = 0^{n-1}1, f(x) = 0^n otherwise.
LengthPreservingFn grover_oracle(unsigned n, const BitWord& marked);

// sin^2((2k + 1) asin(2^{-n/2})).
double grover_closed_form(unsigned n, unsigned k);

struct ProgramSpec {
  std::string family;
  unsigned n = 0;
  unsigned T = 0;
  unsigned t = 0;
  std::optional<std::uint64_t> marked;
  QueryProgram program;
};

// Registry lookup by family name: "naive" (t = T), "undersample" (t < T),
// "grover" (t iterations, marked word 0 unless given).
ProgramSpec make_program(std::string_view family, unsigned n, unsigned T,
                         unsigned t);

}  // namespace qiter

#endif  // QITER_ALGORITHMS_HPP_
