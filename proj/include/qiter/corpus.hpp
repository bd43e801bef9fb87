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

#ifndef QITER_CORPUS_HPP_
#define QITER_CORPUS_HPP_

#include <cstdint>
#include <random>

#include "qiter/machine.hpp"
#include "qiter/oracle.hpp"
#include "qiter/state.hpp"

namespace qiter {

using Rng = std::mt19937_64;

// Independent seed for instance `id` of a run seeded with `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t id);

// Random unit state on up to `max_support` basis states with complex
// Gaussian amplitudes. Generally entangled across sections.
QuantumState random_state(const RegisterLayout& layout, Rng& rng,
                          std::size_t max_support = 16);

// Haar-ish random unitary from the QR factorization of a complex Gaussian
// matrix.
DenseUnitary random_unitary(unsigned arity, Rng& rng);

CatalogPermutation random_permutation(const RegisterLayout& layout, Rng& rng);

// Random program with exactly t queries mixing dense and permutation steps.
// The prefix spreads the query word over a superposition so query masses
// are non-degenerate.
QueryProgram random_program(const RegisterLayout& layout, unsigned t, Rng& rng);

// g equal to f except on `disagreements` distinct words.
LengthPreservingFn random_disagreement(const LengthPreservingFn& f,
                                       std::uint64_t disagreements, Rng& rng);

struct Lemma1Instance {
  QuantumState state;
  LengthPreservingFn f;
  LengthPreservingFn g;
};

struct Lemma2Instance {
  QueryProgram program;
  LengthPreservingFn f;
  BitWord a;
  BitWord to;
  BitWord input;
};

Lemma1Instance make_lemma1_instance(unsigned n, std::uint64_t seed);

// When `identity_mutation` is set the mutation writes f(a) back, so g = f.
Lemma2Instance make_lemma2_instance(unsigned n, unsigned max_t,
                                    std::uint64_t seed,
                                    bool identity_mutation);

}  // namespace qiter

#endif  // QITER_CORPUS_HPP_
