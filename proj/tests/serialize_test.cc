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

#include "qiter/serialize.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qiter/algorithms.hpp"
#include "qiter/corpus.hpp"

namespace qiter {
namespace {

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
  const double v = std::sqrt(2.0) / 2.0;
  EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(OracleJsonTest, RoundTrip) {
  const LengthPreservingFn f = random_full_cycle(3, 4);
  const Json j = oracle_to_json(f);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(oracle_from_json(j), f);
  EXPECT_EQ(oracle_from_json(Json::parse(j.dump())), f);
}

TEST(OracleJsonTest, RejectsMalformed) {
  EXPECT_THROW(oracle_from_json(Json::parse(R"({"n": 2, "table": [0, 1]})")),
               std::invalid_argument);
  EXPECT_ANY_THROW(oracle_from_json(Json::parse(R"({"table": [0, 1]})")));
}

TEST(ProgramJsonTest, RoundTripPreservesBehaviour) {
  Rng rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 1 + trial % 3;
    const QueryProgram program = random_program(RegisterLayout(trial % 2, n), 1 + trial % 3, rng);
    const QueryProgram back = program_from_json(Json::parse(program_to_json(program).dump()));
    EXPECT_EQ(back.query_count(), program.query_count());
    EXPECT_EQ(program_to_json(back), program_to_json(program));
    const LengthPreservingFn f = random_function(n, rng());
    EXPECT_EQ(run(back, f, BitWord::zeros(n)).final_state,
              run(program, f, BitWord::zeros(n)).final_state);
  }
}

TEST(ProgramJsonTest, CatalogNames) {
  const Json j = program_to_json(naive_iteration_program(2, 2));
  bool saw_swap = false;
  for (const auto& step : j.at("steps")) {
    if (step.at("kind") == "permutation") {
      EXPECT_EQ(step.at("name"), "section-swap");
      saw_swap = true;
    }
  }
  EXPECT_TRUE(saw_swap);
  const Json grover = program_to_json(grover_program(2, 1));
  EXPECT_EQ(grover.at("steps").at(0).at("kind"), "dense");
}

TEST(ProgramJsonTest, RejectsUnknownSteps) {
  Json j = program_to_json(naive_iteration_program(2, 1));
  j["steps"].push_back(Json{{"kind", "permutation"}, {"name", "rotate"}, {"params", Json::object()}});
  EXPECT_THROW(program_from_json(j), std::invalid_argument);
  Json k = program_to_json(naive_iteration_program(2, 1));
  k["steps"].push_back(Json{{"kind", "teleport"}});
  EXPECT_THROW(program_from_json(k), std::invalid_argument);
}

TEST(ReportJsonTest, LemmaReportFields) {
  const LemmaReport r = make_report(0.25, 1.0);
  const Json j = lemma_report_to_json(r);
  EXPECT_EQ(j.at("lhs"), 0.25);
  EXPECT_EQ(j.at("rhs"), 1.0);
  EXPECT_EQ(j.at("holds"), true);
  EXPECT_EQ(j.at("f_hash").get<std::string>().size(), 16u);
}

TEST(ReportJsonTest, AdversaryReportCarriesMatrixAndOracles) {
  const LengthPreservingFn f = random_full_cycle(3, 2);
  const AdversaryReport r = construct_adversary_t2(undersampling_program(3, 8, 2), f, 8, 2);
  const Json j = adversary_report_to_json(r);
  EXPECT_EQ(oracle_from_json(j.at("original_oracle")), f);
  EXPECT_EQ(oracle_from_json(j.at("mutated_oracle")), r.mutated);
  EXPECT_EQ(j.at("matrix").at("entries").size(), 2u);
  EXPECT_EQ(j.at("tau"), r.tau);
}

}  // namespace
}  // namespace qiter
