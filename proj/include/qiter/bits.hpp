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

#ifndef QITER_BITS_HPP_
#define QITER_BITS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace qiter {

// Basis states are bit-strings of up to 128 symbols. Qubit 0 is the leftmost
// symbol, which is the most significant bit of the key.
using BasisKey = unsigned __int128;

inline constexpr unsigned kMaxQubits = 128;
inline constexpr unsigned kMaxWordWidth = 32;

// Mask with the low `width` bits set. Valid for width in [0, 128].
constexpr BasisKey low_mask(unsigned width) {
  return width >= 128 ? ~BasisKey{0} : (BasisKey{1} << width) - 1;
}

// A word a in {0,1}^width. Oracle words never exceed kMaxWordWidth bits.
class BitWord {
 public:
  BitWord(unsigned width, std::uint64_t value);

  static BitWord zeros(unsigned width) { return BitWord(width, 0); }
  static BitWord parse(std::string_view bits);

  unsigned width() const { return width_; }
  std::uint64_t value() const { return value_; }
  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  unsigned width_;
  std::uint64_t value_;
};

// Qubit layout [working | query word | answer] with total w + 2n qubits.
class RegisterLayout {
 public:
  RegisterLayout(unsigned working, unsigned query_width);

  unsigned working() const { return working_; }
  unsigned query_width() const { return query_width_; }
  unsigned total() const { return working_ + 2 * query_width_; }

  unsigned query_start() const { return working_; }
  unsigned answer_start() const { return working_ + query_width_; }

  // Section values extracted from a basis key.
  std::uint64_t query_word(BasisKey key) const;
  std::uint64_t answer_word(BasisKey key) const;
  BasisKey working_bits(BasisKey key) const;

  BasisKey compose(BasisKey working_bits, std::uint64_t query,
                   std::uint64_t answer) const;

  friend bool operator==(const RegisterLayout&,
                         const RegisterLayout&) = default;

 private:
  unsigned working_;
  unsigned query_width_;
};

// Position of qubit `q` in a key of `total` qubits.
constexpr unsigned bit_position(unsigned total, unsigned q) {
  return total - 1 - q;
}

// Reads `len` consecutive qubits starting at `start` as an unsigned integer
// whose most significant bit is qubit `start`.
constexpr BasisKey extract_bits(BasisKey key, unsigned total, unsigned start,
                                unsigned len) {
  const unsigned shift = total - start - len;
  return (key >> shift) & low_mask(len);
}

constexpr BasisKey deposit_bits(BasisKey key, unsigned total, unsigned start,
                                unsigned len, BasisKey value) {
  const unsigned shift = total - start - len;
  const BasisKey mask = low_mask(len) << shift;
  return (key & ~mask) | ((value << shift) & mask);
}

std::string key_to_string(BasisKey key, unsigned total);
BasisKey parse_key(std::string_view bits);

struct BasisKeyHash {
  std::size_t operator()(BasisKey key) const noexcept {
    const auto lo = static_cast<std::uint64_t>(key);
    const auto hi = static_cast<std::uint64_t>(key >> 64);
    std::uint64_t h = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace qiter

#endif  // QITER_BITS_HPP_
