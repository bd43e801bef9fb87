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

#include "qiter/machine.hpp"

#include <cmath>
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

void require_range(unsigned start, unsigned len, unsigned total,
                   const char* what) {
  if (len == 0 || start + len > total) {
    throw std::invalid_argument(fmt::format(
        "{} [{}, {}) outside register of {} qubits", what, start, start + len,
        total));
  }
}

bool overlaps(unsigned a, unsigned b, unsigned len) {
  return a < b + len && b < a + len;
}

}  // namespace

std::string permutation_name(const CatalogPermutation& p) {
  return std::visit(Overloaded{
                        [](const SectionSwap&) { return "section-swap"; },
                        [](const SectionXor&) { return "section-xor"; },
                        [](const ConditionalIncrement&) {
                          return "conditional-increment";
                        },
                    },
                    p);
}

void validate_permutation(const CatalogPermutation& p, unsigned total) {
  std::visit(
      Overloaded{
          [&](const SectionSwap& s) {
            require_range(s.a_start, s.len, total, "swap section");
            require_range(s.b_start, s.len, total, "swap section");
            if (overlaps(s.a_start, s.b_start, s.len)) {
              throw std::invalid_argument("swap sections overlap");
            }
          },
          [&](const SectionXor& s) {
            require_range(s.src_start, s.len, total, "xor source");
            require_range(s.dst_start, s.len, total, "xor destination");
            if (overlaps(s.src_start, s.dst_start, s.len)) {
              throw std::invalid_argument("xor sections overlap");
            }
          },
          [&](const ConditionalIncrement& s) {
            require_range(s.start, s.len, total, "increment section");
            if (s.control >= total) {
              throw std::invalid_argument("increment control out of range");
            }
            if (s.control >= s.start && s.control < s.start + s.len) {
              throw std::invalid_argument(
                  "increment control inside its section");
            }
          },
      },
      p);
}

BasisKey permute_key(const CatalogPermutation& p, unsigned total,
                     BasisKey key) {
  return std::visit(
      Overloaded{
          [&](const SectionSwap& s) {
            const BasisKey a = extract_bits(key, total, s.a_start, s.len);
            const BasisKey b = extract_bits(key, total, s.b_start, s.len);
            key = deposit_bits(key, total, s.a_start, s.len, b);
            return deposit_bits(key, total, s.b_start, s.len, a);
          },
          [&](const SectionXor& s) {
            const BasisKey src = extract_bits(key, total, s.src_start, s.len);
            const BasisKey dst = extract_bits(key, total, s.dst_start, s.len);
            return deposit_bits(key, total, s.dst_start, s.len, src ^ dst);
          },
          [&](const ConditionalIncrement& s) {
            if (((key >> bit_position(total, s.control)) & 1) == 0) return key;
            const BasisKey v = extract_bits(key, total, s.start, s.len);
            return deposit_bits(key, total, s.start, s.len,
                                (v + 1) & low_mask(s.len));
          },
      },
      p);
}

BasisKey inverse_permute_key(const CatalogPermutation& p, unsigned total,
                             BasisKey key) {
  if (const auto* inc = std::get_if<ConditionalIncrement>(&p)) {
    if (((key >> bit_position(total, inc->control)) & 1) == 0) return key;
    const BasisKey v = extract_bits(key, total, inc->start, inc->len);
    return deposit_bits(key, total, inc->start, inc->len,
                        (v - 1) & low_mask(inc->len));
  }
  // Swaps and xors are involutions.
  return permute_key(p, total, key);
}

QuantumState apply_catalog_permutation(const QuantumState& state,
                                       const CatalogPermutation& p) {
  const unsigned total = state.layout().total();
  validate_permutation(p, total);
  return relocate_unchecked(
      state, [&](BasisKey key) { return permute_key(p, total, key); });
}

QueryProgram::QueryProgram(RegisterLayout layout,
                           std::vector<ProgramStep> steps)
    : QueryProgram(layout, std::move(steps), layout.query_start(),
                   layout.query_width()) {}

QueryProgram::QueryProgram(RegisterLayout layout,
                           std::vector<ProgramStep> steps,
                           unsigned output_start, unsigned output_len)
    : layout_(layout),
      steps_(std::move(steps)),
      output_start_(output_start),
      output_len_(output_len) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (std::holds_alternative<QueryStep>(steps_[i])) {
      query_positions_.push_back(i);
    }
  }
  validate();
}

QueryProgram::QueryProgram(QueryFreeTag, RegisterLayout layout,
                           std::vector<ProgramStep> steps,
                           unsigned output_start, unsigned output_len)
    : layout_(layout),
      steps_(std::move(steps)),
      output_start_(output_start),
      output_len_(output_len),
      allow_query_free_(true) {
  for (const auto& step : steps_) {
    if (std::holds_alternative<QueryStep>(step)) {
      throw std::invalid_argument("query_free program contains a query");
    }
  }
  validate();
}

QueryProgram QueryProgram::query_free(RegisterLayout layout,
                                      std::vector<ProgramStep> steps,
                                      unsigned output_start,
                                      unsigned output_len) {
  return QueryProgram(QueryFreeTag{}, layout, std::move(steps), output_start,
                      output_len);
}

void QueryProgram::validate() const {
  if (query_positions_.empty() && !allow_query_free_) {
    throw std::invalid_argument("program contains no query step");
  }
  require_range(output_start_, output_len_, layout_.total(), "output section");
  if (output_len_ > kMaxWordWidth) {
    throw std::invalid_argument("output section wider than a word");
  }
  const unsigned total = layout_.total();
  for (const auto& step : steps_) {
    if (const auto* dense = std::get_if<DenseStep>(&step)) {
      if (dense->targets.size() != dense->unitary.arity()) {
        throw std::invalid_argument("dense step arity does not match targets");
      }
      std::vector<bool> seen(total, false);
      for (unsigned q : dense->targets) {
        if (q >= total || seen[q]) {
          throw std::invalid_argument("dense step has invalid targets");
        }
        seen[q] = true;
      }
    } else if (const auto* perm = std::get_if<PermutationStep>(&step)) {
      validate_permutation(perm->permutation, total);
    }
  }
}

std::vector<unsigned> QueryProgram::output_qubits() const {
  std::vector<unsigned> out(output_len_);
  for (unsigned k = 0; k < output_len_; ++k) out[k] = output_start_ + k;
  return out;
}

std::span<const ProgramStep> QueryProgram::prefix() const {
  if (query_positions_.empty()) return steps_;
  return std::span<const ProgramStep>(steps_).first(query_positions_.front());
}

std::span<const ProgramStep> QueryProgram::segment(std::size_t i) const {
  if (i >= query_positions_.size()) {
    throw std::out_of_range("segment index beyond query count");
  }
  const std::size_t begin = query_positions_[i] + 1;
  const std::size_t end = i + 1 < query_positions_.size()
                              ? query_positions_[i + 1]
                              : steps_.size();
  return std::span<const ProgramStep>(steps_).subspan(begin, end - begin);
}

std::size_t query_count(const QueryProgram& program) {
  return program.query_count();
}

const QuantumState& Trace::chi(std::size_t i) const {
  if (i < pre_query.size()) return pre_query[i];
  if (i == pre_query.size()) return final_state;
  throw std::out_of_range("trace index beyond t");
}

QuantumState initial_state(const QueryProgram& program, const BitWord& input) {
  const RegisterLayout& layout = program.layout();
  if (input.width() != layout.query_width()) {
    throw std::invalid_argument(fmt::format(
        "input width {} does not match query width {}", input.width(),
        layout.query_width()));
  }
  return basis_state(layout, layout.compose(0, input.value(), 0));
}

QuantumState apply_steps(const QuantumState& state,
                         std::span<const ProgramStep> steps) {
  QuantumState current = state;
  for (const auto& step : steps) {
    std::visit(Overloaded{
                   [](const QueryStep&) {
                     throw std::logic_error("query inside a working segment");
                   },
                   [&](const DenseStep& s) {
                     current = apply_working(current, s.targets, s.unitary);
                   },
                   [&](const PermutationStep& s) {
                     current = apply_catalog_permutation(current, s.permutation);
                   },
               },
               step);
  }
  return current;
}

QuantumState prepare(const QueryProgram& program, const BitWord& input) {
  return apply_steps(initial_state(program, input), program.prefix());
}

QuantumState advance(const QueryProgram& program, std::size_t i,
                     const QuantumState& state, const LengthPreservingFn& f) {
  return apply_steps(apply_query(state, f), program.segment(i));
}

Trace run(const QueryProgram& program, const LengthPreservingFn& f,
          const BitWord& input) {
  if (f.width() != program.layout().query_width()) {
    throw std::invalid_argument("oracle width does not match the program");
  }
  std::vector<QuantumState> pre_query;
  pre_query.reserve(program.query_count());
  QuantumState state = prepare(program, input);
  for (std::size_t i = 0; i < program.query_count(); ++i) {
    pre_query.push_back(state);
    state = advance(program, i, state, f);
  }
  return Trace{std::move(pre_query), std::move(state), program.output_start(),
               program.output_len(), f.fingerprint()};
}

double output_probability(const QuantumState& state, unsigned output_start,
                          unsigned output_len, std::uint64_t target) {
  const unsigned total = state.layout().total();
  double p = 0.0;
  for (const auto& [key, amp] : state.entries()) {
    if (extract_bits(key, total, output_start, output_len) == target) {
      p += std::norm(amp);
    }
  }
  return p;
}

double success_probability(const Trace& trace, const BitWord& target) {
  if (target.width() != trace.output_len) {
    throw std::invalid_argument(fmt::format(
        "target width {} does not match output section width {}",
        target.width(), trace.output_len));
  }
  return output_probability(trace.final_state, trace.output_start,
                            trace.output_len, target.value());
}

}  // namespace qiter
