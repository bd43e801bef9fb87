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

#ifndef QITER_SERIALIZE_HPP_
#define QITER_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "qiter/adversary.hpp"
#include "qiter/machine.hpp"
#include "qiter/metrics.hpp"
#include "qiter/oracle.hpp"

namespace qiter {

using Json = nlohmann::ordered_json;

// {"n": int, "table": [2^n ints]}
Json oracle_to_json(const LengthPreservingFn& f);
LengthPreservingFn oracle_from_json(const Json& j);

// {"layout": {...}, "output": {...}, "steps": [...]}. Dense matrices are
// nested [re, im] arrays; permutations are {"name", "params"} from the
// catalog.
Json program_to_json(const QueryProgram& program);
QueryProgram program_from_json(const Json& j);

Json lemma_report_to_json(const LemmaReport& r);

Json query_matrix_to_json(const QueryMatrix& m);
Json adversary_report_to_json(const AdversaryReport& r);
Json infeasibility_to_json(const Infeasibility& inf);

// Shortest round-trip decimal form, shared by every CSV writer.
std::string format_double(double v);

}  // namespace qiter

#endif  // QITER_SERIALIZE_HPP_
