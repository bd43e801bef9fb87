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

#ifndef QITER_BATCH_HPP_
#define QITER_BATCH_HPP_

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <vector>

namespace qiter {

enum class Execution { kSerial, kParallel };

// Evaluates fn(0) .. fn(count - 1) into slot order. The parallel path runs
// the instances on OpenMP threads; results are identical to the serial path
// because each slot depends only on its index. The first exception (by
// index) is rethrown after all instances finish.
template <class Fn>
auto map_instances(std::size_t count, Fn&& fn, Execution exec)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using Row = decltype(fn(std::size_t{0}));
  std::vector<std::optional<Row>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      try {
        slots[idx].emplace(fn(idx));
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Row> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Smallest index whose predicate holds, or nullopt.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t count, Pred&& pred,
                                       Execution exec) {
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::size_t best = count;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < best && pred(idx)) best = idx;
  }
  if (best == count) return std::nullopt;
  return best;
}

}  // namespace qiter

#endif  // QITER_BATCH_HPP_
