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

#include "qiter/bits.hpp"

#include <stdexcept>

#include <fmt/core.h>

namespace qiter {

BitWord::BitWord(unsigned width, std::uint64_t value)
    : width_(width), value_(value) {
  if (width == 0 || width > kMaxWordWidth) {
    throw std::invalid_argument(
        fmt::format("word width {} outside [1, {}]", width, kMaxWordWidth));
  }
  if (value >> width != 0) {
    throw std::invalid_argument(
        fmt::format("word value {} does not fit in {} bits", value, width));
  }
}

BitWord BitWord::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > kMaxWordWidth) {
    throw std::invalid_argument("word literal has invalid length");
  }
  return BitWord(static_cast<unsigned>(bits.size()),
                 static_cast<std::uint64_t>(parse_key(bits)));
}

std::string BitWord::to_string() const {
  return key_to_string(value_, width_);
}

RegisterLayout::RegisterLayout(unsigned working, unsigned query_width)
    : working_(working), query_width_(query_width) {
  if (query_width == 0 || query_width > kMaxWordWidth) {
    throw std::invalid_argument(fmt::format(
        "query width {} outside [1, {}]", query_width, kMaxWordWidth));
  }
  if (total() > kMaxQubits) {
    throw std::invalid_argument(fmt::format(
        "register of {} qubits exceeds the {}-qubit limit", total(),
        kMaxQubits));
  }
}

std::uint64_t RegisterLayout::query_word(BasisKey key) const {
  return static_cast<std::uint64_t>(
      extract_bits(key, total(), query_start(), query_width_));
}

std::uint64_t RegisterLayout::answer_word(BasisKey key) const {
  return static_cast<std::uint64_t>(key & low_mask(query_width_));
}

BasisKey RegisterLayout::working_bits(BasisKey key) const {
  return working_ == 0 ? 0 : key >> (2 * query_width_);
}

BasisKey RegisterLayout::compose(BasisKey working_bits, std::uint64_t query,
                                 std::uint64_t answer) const {
  BasisKey key = working_ == 0 ? 0 : working_bits << (2 * query_width_);
  key |= BasisKey{query} << query_width_;
  key |= BasisKey{answer};
  return key;
}

std::string key_to_string(BasisKey key, unsigned total) {
  std::string out(total, '0');
  for (unsigned q = 0; q < total; ++q) {
    if ((key >> bit_position(total, q)) & 1) out[q] = '1';
  }
  return out;
}

BasisKey parse_key(std::string_view bits) {
  if (bits.size() > kMaxQubits) {
    throw std::invalid_argument("bit-string longer than 128 symbols");
  }
  BasisKey key = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(
          fmt::format("invalid symbol '{}' in bit-string", c));
    }
    key = (key << 1) | static_cast<BasisKey>(c == '1');
  }
  return key;
}

}  // namespace qiter
