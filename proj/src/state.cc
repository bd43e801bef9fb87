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

#include "qiter/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <fmt/core.h>

namespace qiter {
namespace {

constexpr unsigned kExhaustiveCheckQubits = 20;
constexpr int kSampledChecks = 4096;
constexpr int kNeighbourChecks = 64;

std::vector<QuantumState::Entry> collect_sorted(
    std::unordered_map<BasisKey, Complex, BasisKeyHash>& acc) {
  std::vector<QuantumState::Entry> out;
  out.reserve(acc.size());
  for (const auto& [key, amp] : acc) {
    if (std::abs(amp) >= kPruneThreshold) out.emplace_back(key, amp);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void check_targets(const RegisterLayout& layout,
                   std::span<const unsigned> targets) {
  std::vector<bool> seen(layout.total(), false);
  for (unsigned q : targets) {
    if (q >= layout.total()) {
      throw std::invalid_argument(fmt::format(
          "qubit index {} outside register of {} qubits", q, layout.total()));
    }
    if (seen[q]) {
      throw std::invalid_argument(
          fmt::format("qubit index {} listed twice", q));
    }
    seen[q] = true;
  }
}

}  // namespace

QuantumState QuantumState::from_entries(const RegisterLayout& layout,
                                        std::vector<Entry> entries,
                                        bool require_unit) {
  const BasisKey limit = low_mask(layout.total());
  std::unordered_map<BasisKey, Complex, BasisKeyHash> acc;
  acc.reserve(entries.size());
  for (const auto& [key, amp] : entries) {
    if ((key & ~limit) != 0) {
      throw std::invalid_argument("basis key wider than the register");
    }
    acc[key] += amp;
  }
  QuantumState state(layout, collect_sorted(acc));
  if (require_unit && std::abs(state.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument(
        fmt::format("state norm {} is not 1", state.norm()));
  }
  return state;
}

Complex QuantumState::amplitude(BasisKey key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, BasisKey k) { return e.first < k; });
  if (it == entries_.end() || it->first != key) return {0.0, 0.0};
  return it->second;
}

double QuantumState::norm() const {
  double sum = 0.0;
  for (const auto& [key, amp] : entries_) sum += std::norm(amp);
  return std::sqrt(sum);
}

DenseUnitary::DenseUnitary(Eigen::MatrixXcd matrix, unsigned cap)
    : arity_(0), matrix_(std::move(matrix)) {
  const auto dim = matrix_.rows();
  if (dim != matrix_.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("unitary must be square of size 2^g, g >= 1");
  }
  while ((Eigen::Index{1} << arity_) < dim) ++arity_;
  if (arity_ > cap) {
    throw std::invalid_argument(fmt::format(
        "dense unitary of arity {} exceeds the cap of {}", arity_, cap));
  }
  const Eigen::MatrixXcd product = matrix_ * matrix_.adjoint();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);
  if ((product - eye).cwiseAbs().maxCoeff() > kNormTolerance) {
    throw std::invalid_argument("matrix is not unitary");
  }
}

DenseUnitary DenseUnitary::identity(unsigned arity) {
  const Eigen::Index dim = Eigen::Index{1} << arity;
  return DenseUnitary(Eigen::MatrixXcd::Identity(dim, dim), arity);
}

DenseUnitary DenseUnitary::hadamard() { return hadamard_all(1); }

DenseUnitary DenseUnitary::pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return DenseUnitary(m);
}

DenseUnitary DenseUnitary::hadamard_all(unsigned arity) {
  const Eigen::Index dim = Eigen::Index{1} << arity;
  const double scale = std::pow(2.0, -0.5 * arity);
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const int parity = __builtin_popcountll(static_cast<unsigned long long>(r & c)) & 1;
      m(r, c) = parity ? -scale : scale;
    }
  }
  return DenseUnitary(std::move(m), std::max(arity, kDefaultDenseCap));
}

QuantumState basis_state(const RegisterLayout& layout, BasisKey key) {
  if ((key & ~low_mask(layout.total())) != 0) {
    throw std::invalid_argument("basis word wider than the register");
  }
  return QuantumState::from_entries(layout, {{key, Complex{1.0, 0.0}}});
}

QuantumState basis_state(const RegisterLayout& layout, std::string_view bits) {
  if (bits.size() != layout.total()) {
    throw std::invalid_argument(
        fmt::format("basis word has length {}, register has {} qubits",
                    bits.size(), layout.total()));
  }
  return basis_state(layout, parse_key(bits));
}

double state_distance(const QuantumState& a, const QuantumState& b) {
  if (!(a.layout() == b.layout())) {
    throw std::invalid_argument("state_distance on different layouts");
  }
  // Merge over the two sorted supports.
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  const auto ea = a.entries().end();
  const auto eb = b.entries().end();
  double sum = 0.0;
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      sum += std::norm(ia->second);
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      sum += std::norm(ib->second);
      ++ib;
    } else {
      sum += std::norm(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return std::sqrt(sum);
}

QuantumState apply_working(const QuantumState& state,
                           std::span<const unsigned> targets,
                           const DenseUnitary& u) {
  const RegisterLayout& layout = state.layout();
  if (targets.size() != u.arity()) {
    throw std::invalid_argument(fmt::format(
        "unitary of arity {} applied to {} targets", u.arity(),
        targets.size()));
  }
  check_targets(layout, targets);
  const unsigned total = layout.total();
  const unsigned g = u.arity();
  const Eigen::Index dim = Eigen::Index{1} << g;

  std::vector<BasisKey> target_masks(g);
  BasisKey clear_mask = 0;
  for (unsigned k = 0; k < g; ++k) {
    target_masks[k] = BasisKey{1} << bit_position(total, targets[k]);
    clear_mask |= target_masks[k];
  }
  auto sub_index = [&](BasisKey key) {
    Eigen::Index idx = 0;
    for (unsigned k = 0; k < g; ++k) {
      idx = (idx << 1) | static_cast<Eigen::Index>((key & target_masks[k]) != 0);
    }
    return idx;
  };
  auto with_sub_index = [&](BasisKey base, Eigen::Index idx) {
    BasisKey key = base;
    for (unsigned k = 0; k < g; ++k) {
      if ((idx >> (g - 1 - k)) & 1) key |= target_masks[k];
    }
    return key;
  };

  const auto& m = u.matrix();
  std::unordered_map<BasisKey, Complex, BasisKeyHash> acc;
  acc.reserve(state.support_size() * static_cast<std::size_t>(dim));
  for (const auto& [key, amp] : state.entries()) {
    const Eigen::Index col = sub_index(key);
    const BasisKey base = key & ~clear_mask;
    for (Eigen::Index row = 0; row < dim; ++row) {
      const Complex coef = m(row, col);
      if (coef == Complex{0.0, 0.0}) continue;
      acc[with_sub_index(base, row)] += coef * amp;
    }
  }
  return QuantumState::from_entries(layout, collect_sorted(acc), false);
}

QuantumState relocate_unchecked(const QuantumState& state, const BasisMap& p) {
  const BasisKey limit = low_mask(state.layout().total());
  std::vector<QuantumState::Entry> out;
  out.reserve(state.support_size());
  for (const auto& [key, amp] : state.entries()) {
    const BasisKey image = p(key);
    if ((image & ~limit) != 0) {
      throw std::invalid_argument("permutation maps outside the register");
    }
    out.emplace_back(image, amp);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].first == out[i - 1].first) {
      throw std::invalid_argument("basis map is not injective on the support");
    }
  }
  return QuantumState::from_entries(state.layout(), std::move(out), false);
}

QuantumState apply_basis_permutation(const QuantumState& state,
                                     const BasisMap& p) {
  const unsigned total = state.layout().total();
  const BasisKey limit = low_mask(total);
  std::unordered_set<BasisKey, BasisKeyHash> images;
  if (total <= kExhaustiveCheckQubits) {
    const std::uint64_t size = std::uint64_t{1} << total;
    images.reserve(size);
    for (std::uint64_t x = 0; x < size; ++x) {
      const BasisKey y = p(x);
      if ((y & ~limit) != 0 || !images.insert(y).second) {
        throw std::invalid_argument("basis map is not a bijection");
      }
    }
  } else {
    // Sampled check: distinct random preimages must have distinct images,
    // and a few samples are compared against every one-bit neighbour so
    // maps that discard a bit are caught.
    std::mt19937_64 rng(0x5eed);
    std::unordered_map<BasisKey, BasisKey, BasisKeyHash> seen;
    for (int i = 0; i < kSampledChecks; ++i) {
      const BasisKey x =
          ((BasisKey{rng()} << 64) | BasisKey{rng()}) & limit;
      const BasisKey y = p(x);
      if ((y & ~limit) != 0) {
        throw std::invalid_argument("basis map leaves the register");
      }
      auto [it, inserted] = seen.emplace(y, x);
      if (!inserted && it->second != x) {
        throw std::invalid_argument("basis map is not a bijection");
      }
      if (i < kNeighbourChecks) {
        for (unsigned b = 0; b < total; ++b) {
          if (p(x ^ (BasisKey{1} << b)) == y) {
            throw std::invalid_argument("basis map is not a bijection");
          }
        }
      }
    }
  }
  return relocate_unchecked(state, p);
}

std::map<BasisKey, double> measure_marginal(const QuantumState& state,
                                            std::span<const unsigned> subset) {
  check_targets(state.layout(), subset);
  const unsigned total = state.layout().total();
  std::map<BasisKey, double> out;
  for (const auto& [key, amp] : state.entries()) {
    BasisKey pattern = 0;
    for (unsigned q : subset) {
      pattern = (pattern << 1) | ((key >> bit_position(total, q)) & 1);
    }
    out[pattern] += std::norm(amp);
  }
  return out;
}

DenseUnitary permutation_matrix(unsigned total, const BasisMap& p) {
  if (total == 0 || total > kDefaultDenseCap) {
    throw std::invalid_argument("permutation matrix needs 1..10 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << total;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const auto y = static_cast<Eigen::Index>(p(static_cast<BasisKey>(x)));
    if (y < 0 || y >= dim) {
      throw std::invalid_argument("permutation maps outside the register");
    }
    m(y, x) = 1.0;
  }
  return DenseUnitary(std::move(m));
}

}  // namespace qiter
