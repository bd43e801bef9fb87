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

#include "qiter/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <fmt/core.h>

namespace qiter {
namespace {

void require_width(const LengthPreservingFn& f, unsigned width) {
  if (f.width() != width) {
    throw std::invalid_argument(fmt::format(
        "oracle width {} does not match word width {}", f.width(), width));
  }
}

}  // namespace

LengthPreservingFn::LengthPreservingFn(unsigned width,
                                       std::vector<std::uint64_t> table)
    : width_(width), table_(std::move(table)) {
  if (width == 0 || width > kMaxWordWidth) {
    throw std::invalid_argument(fmt::format("oracle width {} invalid", width));
  }
  if (table_.size() != (std::uint64_t{1} << width)) {
    throw std::invalid_argument(fmt::format(
        "oracle table has {} entries, expected 2^{}", table_.size(), width));
  }
  for (std::uint64_t v : table_) {
    if (v >> width != 0) {
      throw std::invalid_argument(
          fmt::format("oracle output {} does not fit in {} bits", v, width));
    }
  }
}

LengthPreservingFn LengthPreservingFn::identity(unsigned width) {
  std::vector<std::uint64_t> table(std::uint64_t{1} << width);
  std::iota(table.begin(), table.end(), std::uint64_t{0});
  return LengthPreservingFn(width, std::move(table));
}

BitWord LengthPreservingFn::operator()(const BitWord& a) const {
  require_width(*this, a.width());
  return BitWord(width_, table_[a.value()]);
}

bool LengthPreservingFn::is_bijection() const {
  std::vector<bool> hit(table_.size(), false);
  for (std::uint64_t v : table_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::uint64_t LengthPreservingFn::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(width_);
  for (std::uint64_t v : table_) mix(v);
  return h;
}

bool OrbitCertificate::is_full_cycle() const {
  if (orbit.size() != base.domain_size()) return false;
  for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
    if (base(orbit[i]) != orbit[i + 1]) return false;
  }
  return base(orbit.back()) == start.value();
}

LengthPreservingFn random_full_cycle(unsigned n, std::uint64_t seed) {
  if (n == 0 || n > kMaxWordWidth) {
    throw std::invalid_argument("full cycle needs 1 <= n <= 32");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> order(size);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin() + 1, order.end(), rng);
  std::vector<std::uint64_t> table(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    table[order[i]] = order[(i + 1) % size];
  }
  return LengthPreservingFn(n, std::move(table));
}

LengthPreservingFn random_function(unsigned n, std::uint64_t seed) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> word(0, size - 1);
  std::vector<std::uint64_t> table(size);
  for (auto& v : table) v = word(rng);
  return LengthPreservingFn(n, std::move(table));
}

std::uint64_t iterate(const LengthPreservingFn& f, std::uint64_t k,
                      std::uint64_t x) {
  for (std::uint64_t s = 0; s < k; ++s) x = f(x);
  return x;
}

BitWord iterate(const LengthPreservingFn& f, std::uint64_t k,
                const BitWord& x) {
  require_width(f, x.width());
  return BitWord(x.width(), iterate(f, k, x.value()));
}

LengthPreservingFn mutate(const LengthPreservingFn& f, const BitWord& at,
                          const BitWord& to) {
  require_width(f, at.width());
  require_width(f, to.width());
  std::vector<std::uint64_t> table = f.table();
  table[at.value()] = to.value();
  return LengthPreservingFn(f.width(), std::move(table));
}

OrbitCertificate orbit(const LengthPreservingFn& f, const BitWord& start,
                       std::uint64_t max_len) {
  require_width(f, start.width());
  std::vector<std::uint64_t> words;
  std::vector<bool> seen(f.domain_size(), false);
  std::uint64_t x = start.value();
  while (words.size() < max_len && !seen[x]) {
    seen[x] = true;
    words.push_back(x);
    x = f(x);
  }
  return OrbitCertificate{f, start, std::move(words)};
}

QuantumState apply_query(const QuantumState& state,
                         const LengthPreservingFn& f) {
  const RegisterLayout& layout = state.layout();
  require_width(f, layout.query_width());
  return relocate_unchecked(state, [&](BasisKey key) {
    return key ^ BasisKey{f(layout.query_word(key))};
  });
}

std::uint64_t disagreement_count(const LengthPreservingFn& f,
                                 const LengthPreservingFn& g) {
  if (f.width() != g.width()) {
    throw std::invalid_argument("oracles of different widths");
  }
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < f.domain_size(); ++a) {
    if (f(a) != g(a)) ++count;
  }
  return count;
}

}  // namespace qiter
