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

#ifndef QITER_TESTS_DENSE_REFERENCE_HPP_
#define QITER_TESTS_DENSE_REFERENCE_HPP_

// Full state-vector simulator used only as a test oracle. It shares no code
// with the sparse kernels: gates are applied by explicit index enumeration
// over the whole 2^m basis.

#include <complex>
#include <cstdint>
#include <vector>

#include "qiter/state.hpp"

namespace qiter::testing {

using DenseVector = std::vector<std::complex<double>>;

inline DenseVector to_dense(const QuantumState& s) {
  DenseVector v(std::size_t{1} << s.layout().total());
  for (const auto& [key, amp] : s.entries()) {
    v[static_cast<std::size_t>(key)] = amp;
  }
  return v;
}

inline double dense_distance(const DenseVector& a, const DenseVector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

// u acts on `targets`; targets[0] is the most significant bit of u's index.
inline DenseVector dense_apply(const DenseVector& v, unsigned total,
                               const std::vector<unsigned>& targets,
                               const Eigen::MatrixXcd& u) {
  DenseVector out(v.size());
  const std::size_t g = targets.size();
  for (std::size_t in = 0; in < v.size(); ++in) {
    if (v[in] == std::complex<double>{}) continue;
    std::size_t col = 0;
    for (std::size_t k = 0; k < g; ++k) {
      col = (col << 1) | ((in >> (total - 1 - targets[k])) & 1);
    }
    for (std::size_t row = 0; row < (std::size_t{1} << g); ++row) {
      std::size_t dst = in;
      for (std::size_t k = 0; k < g; ++k) {
        const std::size_t bit = std::size_t{1} << (total - 1 - targets[k]);
        if ((row >> (g - 1 - k)) & 1) {
          dst |= bit;
        } else {
          dst &= ~bit;
        }
      }
      out[dst] += u(static_cast<Eigen::Index>(row),
                    static_cast<Eigen::Index>(col)) *
                  v[in];
    }
  }
  return out;
}

// |w, a, b> -> |w, a, table[a] xor b> by enumerating every basis index.
inline DenseVector dense_query(const DenseVector& v, unsigned n,
                               const std::vector<std::uint64_t>& table) {
  DenseVector out(v.size());
  const std::size_t word_mask = (std::size_t{1} << n) - 1;
  for (std::size_t in = 0; in < v.size(); ++in) {
    const std::size_t a = (in >> n) & word_mask;
    out[in ^ table[a]] += v[in];
  }
  return out;
}

}  // namespace qiter::testing

#endif  // QITER_TESTS_DENSE_REFERENCE_HPP_
