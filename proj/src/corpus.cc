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

#include "qiter/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qiter {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

std::vector<unsigned> distinct_qubits(unsigned total, unsigned count, Rng& rng) {
  std::vector<unsigned> all(total);
  std::iota(all.begin(), all.end(), 0u);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t id) {
  return splitmix64(splitmix64(seed) ^ id);
}

QuantumState random_state(const RegisterLayout& layout, Rng& rng,
                          std::size_t max_support) {
  const unsigned total = layout.total();
  const BasisKey mask = low_mask(total);
  const double space = std::ldexp(1.0, static_cast<int>(std::min(total, 60u)));
  const auto cap = static_cast<std::size_t>(
      std::min<double>(static_cast<double>(max_support), space));
  const std::size_t support = std::uniform_int_distribution<std::size_t>(
      1, std::max<std::size_t>(cap, 1))(rng);
  std::normal_distribution<double> gauss;
  std::vector<QuantumState::Entry> entries;
  for (std::size_t k = 0; k < support; ++k) {
    const BasisKey key = ((BasisKey{rng()} << 64) | BasisKey{rng()}) & mask;
    entries.emplace_back(key, Complex{gauss(rng), gauss(rng)});
  }
  // Duplicate keys are merged by from_entries; normalize after merging.
  auto merged = QuantumState::from_entries(layout, entries, false);
  const double scale = 1.0 / merged.norm();
  std::vector<QuantumState::Entry> scaled(merged.entries().begin(),
                                          merged.entries().end());
  for (auto& [key, amp] : scaled) amp *= scale;
  return QuantumState::from_entries(layout, std::move(scaled));
}

DenseUnitary random_unitary(unsigned arity, Rng& rng) {
  const Eigen::Index dim = Eigen::Index{1} << arity;
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd z(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) z(r, c) = {gauss(rng), gauss(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Complex d = rmat(c, c);
    if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
  }
  return DenseUnitary(std::move(q));
}

CatalogPermutation random_permutation(const RegisterLayout& layout, Rng& rng) {
  const unsigned total = layout.total();
  if (total < 2) throw std::invalid_argument("permutation needs >= 2 qubits");
  const unsigned kind = uniform(rng, 0, 2);
  if (kind == 2) {
    const unsigned len = uniform(rng, 1, std::min(total - 1, 4u));
    const unsigned start = uniform(rng, 0, total - len);
    unsigned control = uniform(rng, 0, total - len - 1);
    if (control >= start) control += len;
    return ConditionalIncrement{control, start, len};
  }
  const unsigned len = uniform(rng, 1, total / 2);
  // Two disjoint ranges of length len: pick the gap layout directly.
  const unsigned first = uniform(rng, 0, total - 2 * len);
  const unsigned second = uniform(rng, first + len, total - len);
  unsigned a = first;
  unsigned b = second;
  if (uniform(rng, 0, 1) == 1) std::swap(a, b);
  if (kind == 0) return SectionSwap{a, b, len};
  return SectionXor{a, b, len};
}

QueryProgram random_program(const RegisterLayout& layout, unsigned t, Rng& rng) {
  const unsigned total = layout.total();
  auto random_step = [&]() -> ProgramStep {
    if (uniform(rng, 0, 1) == 0 || total < 2) {
      const unsigned arity = uniform(rng, 1, std::min(total, 3u));
      return DenseStep{distinct_qubits(total, arity, rng),
                       random_unitary(arity, rng)};
    }
    return PermutationStep{random_permutation(layout, rng)};
  };
  std::vector<ProgramStep> steps;
  for (unsigned q = 0; q < layout.query_width(); ++q) {
    steps.emplace_back(
        DenseStep{{layout.query_start() + q}, random_unitary(1, rng)});
  }
  steps.push_back(random_step());
  for (unsigned i = 0; i < t; ++i) {
    steps.emplace_back(QueryStep{});
    const unsigned extra = uniform(rng, 1, 2);
    for (unsigned k = 0; k < extra; ++k) steps.push_back(random_step());
  }
  return QueryProgram(layout, std::move(steps));
}

LengthPreservingFn random_disagreement(const LengthPreservingFn& f,
                                       std::uint64_t disagreements, Rng& rng) {
  const std::uint64_t size = f.domain_size();
  if (disagreements > size) {
    throw std::invalid_argument("more disagreements than words");
  }
  std::vector<std::uint64_t> words(size);
  std::iota(words.begin(), words.end(), std::uint64_t{0});
  std::shuffle(words.begin(), words.end(), rng);
  std::vector<std::uint64_t> table = f.table();
  std::uniform_int_distribution<std::uint64_t> offset(1, size - 1);
  for (std::uint64_t k = 0; k < disagreements; ++k) {
    const std::uint64_t a = words[k];
    table[a] = (table[a] + offset(rng)) % size;
  }
  return LengthPreservingFn(f.width(), std::move(table));
}

Lemma1Instance make_lemma1_instance(unsigned n, std::uint64_t seed) {
  Rng rng(seed);
  const RegisterLayout layout(uniform(rng, 0, 2), n);
  QuantumState state = random_state(layout, rng);
  LengthPreservingFn f = random_function(n, rng());
  const std::uint64_t size = f.domain_size();
  // Spread disagreement sizes from one word to the whole domain.
  const std::uint64_t k =
      std::uniform_int_distribution<std::uint64_t>(1, size)(rng);
  LengthPreservingFn g = random_disagreement(f, k, rng);
  return Lemma1Instance{std::move(state), std::move(f), std::move(g)};
}

Lemma2Instance make_lemma2_instance(unsigned n, unsigned max_t,
                                    std::uint64_t seed,
                                    bool identity_mutation) {
  Rng rng(seed);
  const RegisterLayout layout(uniform(rng, 0, 2), n);
  const unsigned t = uniform(rng, 1, std::max(max_t, 1u));
  QueryProgram program = random_program(layout, t, rng);
  LengthPreservingFn f = random_function(n, rng());
  const std::uint64_t size = f.domain_size();
  std::uniform_int_distribution<std::uint64_t> word(0, size - 1);
  const std::uint64_t a = word(rng);
  std::uint64_t to = f(a);
  if (!identity_mutation && size > 1) {
    to = (to + std::uniform_int_distribution<std::uint64_t>(1, size - 1)(rng)) %
         size;
  }
  const std::uint64_t input = word(rng);
  return Lemma2Instance{std::move(program), std::move(f), BitWord(n, a),
                        BitWord(n, to), BitWord(n, input)};
}

}  // namespace qiter
