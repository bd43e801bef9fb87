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

#include <stdexcept>

#include <fmt/core.h>

namespace qiter {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json permutation_to_json(const CatalogPermutation& p) {
  Json params = std::visit(
      Overloaded{
          [](const SectionSwap& s) {
            return Json{{"a_start", s.a_start}, {"b_start", s.b_start},
                        {"len", s.len}};
          },
          [](const SectionXor& s) {
            return Json{{"src_start", s.src_start},
                        {"dst_start", s.dst_start},
                        {"len", s.len}};
          },
          [](const ConditionalIncrement& s) {
            return Json{{"control", s.control}, {"start", s.start},
                        {"len", s.len}};
          },
      },
      p);
  return Json{{"kind", "permutation"},
              {"name", permutation_name(p)},
              {"params", std::move(params)}};
}

CatalogPermutation permutation_from_json(const Json& j) {
  const std::string name = j.at("name").get<std::string>();
  const Json& p = j.at("params");
  if (name == "section-swap") {
    return SectionSwap{p.at("a_start").get<unsigned>(),
                       p.at("b_start").get<unsigned>(),
                       p.at("len").get<unsigned>()};
  }
  if (name == "section-xor") {
    return SectionXor{p.at("src_start").get<unsigned>(),
                      p.at("dst_start").get<unsigned>(),
                      p.at("len").get<unsigned>()};
  }
  if (name == "conditional-increment") {
    return ConditionalIncrement{p.at("control").get<unsigned>(),
                                p.at("start").get<unsigned>(),
                                p.at("len").get<unsigned>()};
  }
  throw std::invalid_argument(fmt::format("unknown permutation '{}'", name));
}

}  // namespace

std::string format_double(double v) { return fmt::format("{}", v); }

Json oracle_to_json(const LengthPreservingFn& f) {
  return Json{{"n", f.width()}, {"table", f.table()}};
}

LengthPreservingFn oracle_from_json(const Json& j) {
  return LengthPreservingFn(j.at("n").get<unsigned>(),
                            j.at("table").get<std::vector<std::uint64_t>>());
}

Json program_to_json(const QueryProgram& program) {
  Json steps = Json::array();
  for (const auto& step : program.steps()) {
    steps.push_back(std::visit(
        Overloaded{
            [](const QueryStep&) { return Json{{"kind", "query"}}; },
            [](const DenseStep& s) {
              const auto& m = s.unitary.matrix();
              Json rows = Json::array();
              for (Eigen::Index r = 0; r < m.rows(); ++r) {
                Json row = Json::array();
                for (Eigen::Index c = 0; c < m.cols(); ++c) {
                  row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
                }
                rows.push_back(std::move(row));
              }
              return Json{{"kind", "dense"},
                          {"targets", s.targets},
                          {"matrix", std::move(rows)}};
            },
            [](const PermutationStep& s) {
              return permutation_to_json(s.permutation);
            },
        },
        step));
  }
  const RegisterLayout& layout = program.layout();
  return Json{{"layout",
               {{"working", layout.working()},
                {"query_width", layout.query_width()}}},
              {"output",
               {{"start", program.output_start()},
                {"len", program.output_len()}}},
              {"steps", std::move(steps)}};
}

QueryProgram program_from_json(const Json& j) {
  const RegisterLayout layout(j.at("layout").at("working").get<unsigned>(),
                              j.at("layout").at("query_width").get<unsigned>());
  std::vector<ProgramStep> steps;
  bool has_query = false;
  for (const Json& s : j.at("steps")) {
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "query") {
      steps.emplace_back(QueryStep{});
      has_query = true;
    } else if (kind == "dense") {
      const Json& rows = s.at("matrix");
      const auto dim = static_cast<Eigen::Index>(rows.size());
      Eigen::MatrixXcd m(dim, dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        const Json& row = rows.at(static_cast<std::size_t>(r));
        if (static_cast<Eigen::Index>(row.size()) != dim) {
          throw std::invalid_argument("dense matrix is not square");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
          const Json& z = row.at(static_cast<std::size_t>(c));
          m(r, c) = {z.at(0).get<double>(), z.at(1).get<double>()};
        }
      }
      steps.emplace_back(DenseStep{s.at("targets").get<std::vector<unsigned>>(),
                                   DenseUnitary(std::move(m))});
    } else if (kind == "permutation") {
      steps.emplace_back(PermutationStep{permutation_from_json(s)});
    } else {
      throw std::invalid_argument(fmt::format("unknown step kind '{}'", kind));
    }
  }
  unsigned start = layout.query_start();
  unsigned len = layout.query_width();
  if (j.contains("output")) {
    start = j.at("output").at("start").get<unsigned>();
    len = j.at("output").at("len").get<unsigned>();
  }
  if (!has_query) {
    return QueryProgram::query_free(layout, std::move(steps), start, len);
  }
  return QueryProgram(layout, std::move(steps), start, len);
}

Json lemma_report_to_json(const LemmaReport& r) {
  return Json{{"lhs", r.lhs},
              {"rhs", r.rhs},
              {"slack", r.slack},
              {"holds", r.holds},
              {"terms", r.terms},
              {"f_hash", fmt::format("{:016x}", r.f_fingerprint)},
              {"g_hash", fmt::format("{:016x}", r.g_fingerprint)}};
}

Json query_matrix_to_json(const QueryMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  Json column_sums = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) column_sums.push_back(m.column_sum(j));
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"orbit_words", m.orbit_words()},
              {"entries", std::move(rows)},
              {"column_sums", std::move(column_sums)}};
}

Json adversary_report_to_json(const AdversaryReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
  }
  Json j{{"mode", r.mode == AdversaryMode::kTheorem2 ? "theorem2" : "theorem1"},
         {"n", r.n},
         {"T", r.T},
         {"t", r.t},
         {"seed", r.seed},
         {"original_oracle", oracle_to_json(r.original)},
         {"base_oracle", oracle_to_json(r.base)},
         {"mutated_oracle", oracle_to_json(r.mutated)},
         {"base_hash", fmt::format("{:016x}", r.base.fingerprint())},
         {"mutated_hash", fmt::format("{:016x}", r.mutated.fingerprint())},
         {"mutation_word", r.mutation_word},
         {"mutation_value", r.mutation_value},
         {"target_base", r.target_base},
         {"target_mutated", r.target_mutated},
         {"outputs_diverge", r.outputs_diverge},
         {"lhs", r.lhs},
         {"rhs", r.rhs},
         {"rhs_terms", r.rhs_terms},
         {"success_base", r.success_base},
         {"success_mutated", r.success_mutated},
         {"cross_base", r.cross_base},
         {"cross_mutated", r.cross_mutated},
         {"success_gap", r.success_gap},
         {"non_contradictory", r.non_contradictory()}};
  if (r.mode == AdversaryMode::kTheorem2) {
    j["tau"] = r.tau;
    j["column_sum"] = r.column_sum;
    j["coarse_bound"] = r.coarse_bound;
    j["query_bound"] = r.query_bound;
    if (r.matrix) j["matrix"] = query_matrix_to_json(*r.matrix);
  } else {
    j["theta"] = r.theta;
    j["chain_words"] = r.chain_words;
    j["deltas"] = r.chain.deltas;
    j["partials"] = r.chain.partials;
    j["target_amplitudes"] = r.target_amplitudes;
    j["delta_bound"] = r.delta_bound;
    j["chain_bound"] = r.chain_bound;
  }
  j["checks"] = std::move(checks);
  j["all_checks_hold"] = r.all_checks_hold();
  return j;
}

Json infeasibility_to_json(const Infeasibility& inf) {
  return Json{{"mode", "theorem1"},
              {"feasible", false},
              {"failing_step", inf.failing_step},
              {"reason", inf.reason},
              {"theta", inf.theta},
              {"chain_words", inf.chain_words},
              {"admissible_words", inf.admissible_words}};
}

}  // namespace qiter
