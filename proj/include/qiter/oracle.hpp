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

#ifndef QITER_ORACLE_HPP_
#define QITER_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "qiter/bits.hpp"
#include "qiter/state.hpp"

namespace qiter {

// Explicit table of f: {0,1}^n -> {0,1}^n. Immutable after construction.
class LengthPreservingFn {
 public:
  LengthPreservingFn(unsigned width, std::vector<std::uint64_t> table);

  static LengthPreservingFn identity(unsigned width);

  unsigned width() const { return width_; }
  std::uint64_t domain_size() const { return table_.size(); }
  const std::vector<std::uint64_t>& table() const { return table_; }

  std::uint64_t operator()(std::uint64_t a) const { return table_[a]; }
  BitWord operator()(const BitWord& a) const;

  bool is_bijection() const;
  // FNV-1a over (width, table); used to tag reports.
  std::uint64_t fingerprint() const;

  friend bool operator==(const LengthPreservingFn&,
                         const LengthPreservingFn&) = default;

 private:
  unsigned width_;
  std::vector<std::uint64_t> table_;
};

struct OrbitCertificate {
  LengthPreservingFn base;
  BitWord start;
  std::vector<std::uint64_t> orbit;

  // True when the orbit visits every word and closes back onto start.
  bool is_full_cycle() const;
};

// Uniformly random cyclic order of all 2^n words through 0^n.
LengthPreservingFn random_full_cycle(unsigned n, std::uint64_t seed);

// Uniformly random table, not necessarily a bijection.
LengthPreservingFn random_function(unsigned n, std::uint64_t seed);

// f^{k}(x).
BitWord iterate(const LengthPreservingFn& f, std::uint64_t k, const BitWord& x);
std::uint64_t iterate(const LengthPreservingFn& f, std::uint64_t k,
                      std::uint64_t x);

// g with g(at) = to, g = f elsewhere.
LengthPreservingFn mutate(const LengthPreservingFn& f, const BitWord& at,
                          const BitWord& to);

// Iterates from `start` until a word repeats or max_len words are listed.
OrbitCertificate orbit(const LengthPreservingFn& f, const BitWord& start,
                       std::uint64_t max_len);

// Qu_f: |w, a, b> -> |w, a, f(a) xor b>. Pure key relocation.
QuantumState apply_query(const QuantumState& state,
                         const LengthPreservingFn& f);

// Number of words on which f and g disagree.
std::uint64_t disagreement_count(const LengthPreservingFn& f,
                                 const LengthPreservingFn& g);

}  // namespace qiter

#endif  // QITER_ORACLE_HPP_
