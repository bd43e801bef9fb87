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

#include <gtest/gtest.h>

namespace qiter {
namespace {

TEST(BitWordTest, ParseAndPrintAgree) {
  const BitWord w = BitWord::parse("0110");
  EXPECT_EQ(w.width(), 4u);
  EXPECT_EQ(w.value(), 6u);
  EXPECT_EQ(w.to_string(), "0110");
}

TEST(BitWordTest, RejectsOverflowAndZeroWidth) {
  EXPECT_THROW(BitWord(2, 4), std::invalid_argument);
  EXPECT_THROW(BitWord(0, 0), std::invalid_argument);
  EXPECT_THROW(BitWord::parse("01x"), std::invalid_argument);
}

TEST(RegisterLayoutTest, SectionsCoverRegister) {
  const RegisterLayout layout(3, 2);
  EXPECT_EQ(layout.total(), 7u);
  EXPECT_EQ(layout.query_start(), 3u);
  EXPECT_EQ(layout.answer_start(), 5u);
  const BasisKey key = parse_key("101" "10" "01");
  EXPECT_EQ(layout.working_bits(key), BasisKey{5});
  EXPECT_EQ(layout.query_word(key), 2u);
  EXPECT_EQ(layout.answer_word(key), 1u);
  EXPECT_EQ(layout.compose(5, 2, 1), key);
}

TEST(RegisterLayoutTest, RejectsOversizedRegisters) {
  EXPECT_THROW(RegisterLayout(0, 0), std::invalid_argument);
  EXPECT_THROW(RegisterLayout(127, 1), std::invalid_argument);
  EXPECT_NO_THROW(RegisterLayout(126, 1));
}

TEST(BitsTest, ExtractDepositRoundTripOnWideKeys) {
  const unsigned total = 100;
  BasisKey key = 0;
  key = deposit_bits(key, total, 37, 20, 0xabcde);
  EXPECT_EQ(extract_bits(key, total, 37, 20), BasisKey{0xabcde});
  EXPECT_EQ(extract_bits(key, total, 0, 37), BasisKey{0});
  EXPECT_EQ(key_to_string(parse_key("1001"), 4), "1001");
}

}  // namespace
}  // namespace qiter
