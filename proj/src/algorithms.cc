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

#include "qiter/algorithms.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

namespace qiter {
namespace {

PermutationStep swap_step(unsigned a, unsigned b, unsigned len) {
  return PermutationStep{SectionSwap{a, b, len}};
}

}  // namespace

QueryProgram naive_iteration_program(unsigned n, unsigned T) {
  if (T == 0) throw std::invalid_argument("iteration count must be >= 1");
  const RegisterLayout layout(n * (T - 1), n);
  const unsigned q = layout.query_start();
  const unsigned r = layout.answer_start();
  std::vector<ProgramStep> steps;
  for (unsigned i = 0; i < T; ++i) {
    steps.emplace_back(QueryStep{});
    if (i + 1 < T) {
      // Park x_i in history slot i, then move x_{i+1} into the query word.
      steps.emplace_back(swap_step(q, i * n, n));
      steps.emplace_back(swap_step(q, r, n));
    }
  }
  steps.emplace_back(swap_step(q, r, n));
  // Rotate the history so slot k holds x_{k+1} and the answer holds x_0.
  for (unsigned k = T - 1; k-- > 0;) {
    steps.emplace_back(swap_step(r, k * n, n));
  }
  return QueryProgram(layout, std::move(steps));
}

QueryProgram undersampling_program(unsigned n, unsigned T, unsigned t) {
  if (t == 0 || t >= T) {
    throw std::invalid_argument(
        fmt::format("undersampling needs 1 <= t < T, got t={} T={}", t, T));
  }
  return naive_iteration_program(n, t);
}

QueryProgram grover_program(unsigned n, unsigned k, unsigned dense_cap) {
  if (n < 2) throw std::invalid_argument("grover needs n >= 2");
  if (n > dense_cap) {
    throw std::invalid_argument(fmt::format(
        "grover diffusion on {} qubits exceeds the dense cap {}", n,
        dense_cap));
  }
  const RegisterLayout layout(0, n);
  std::vector<unsigned> query_qubits(n);
  for (unsigned i = 0; i < n; ++i) query_qubits[i] = layout.query_start() + i;
  const unsigned last_answer = layout.total() - 1;

  Eigen::MatrixXcd minus(2, 2);
  minus = DenseUnitary::hadamard().matrix() * DenseUnitary::pauli_x().matrix();

  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd diffusion =
      Eigen::MatrixXcd::Constant(dim, dim, 2.0 / static_cast<double>(dim));
  diffusion -= Eigen::MatrixXcd::Identity(dim, dim);

  std::vector<ProgramStep> steps;
  steps.emplace_back(DenseStep{{last_answer}, DenseUnitary(minus)});
  steps.emplace_back(
      DenseStep{query_qubits, DenseUnitary(Eigen::MatrixXcd(
                                  DenseUnitary::hadamard_all(n).matrix()),
                              dense_cap)});
  const DenseUnitary diffuser(std::move(diffusion), dense_cap);
  for (unsigned i = 0; i < k; ++i) {
    steps.emplace_back(QueryStep{});
    steps.emplace_back(DenseStep{query_qubits, diffuser});
  }
  if (k == 0) {
    return QueryProgram::query_free(layout, std::move(steps),
                                    layout.query_start(), n);
  }
  return QueryProgram(layout, std::move(steps));
}

LengthPreservingFn grover_oracle(unsigned n, const BitWord& marked) {
  if (marked.width() != n) {
    throw std::invalid_argument("marked word width does not match n");
  }
  std::vector<std::uint64_t> table(std::uint64_t{1} << n, 0);
  table[marked.value()] = 1;
  return LengthPreservingFn(n, std::move(table));
}

double grover_closed_form(unsigned n, unsigned k) {
  const double theta = std::asin(std::pow(2.0, -0.5 * n));
  const double s = std::sin((2.0 * k + 1.0) * theta);
  return s * s;
}

ProgramSpec make_program(std::string_view family, unsigned n, unsigned T,
                         unsigned t) {
  if (family == "naive") {
    return ProgramSpec{"naive", n, T, T, std::nullopt,
                       naive_iteration_program(n, T)};
  }
  if (family == "undersample") {
    return ProgramSpec{"undersample", n, T, t, std::nullopt,
                       undersampling_program(n, T, t)};
  }
  if (family == "grover") {
    return ProgramSpec{"grover", n, T, t, std::uint64_t{0},
                       grover_program(n, t)};
  }
  throw std::invalid_argument(fmt::format("unknown program family '{}'", family));
}

}  // namespace qiter
