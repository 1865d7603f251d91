// Copyright 2026 The qcomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file convolution.hpp
 * @brief The dual convolution algebra F(C) = Hom(C, k).
 *
 * A functional is stored by its values on the basis of C.
 */

#include "qcomb/coalg.hpp"

namespace qcomb {

using Functional = Vector;

inline void require_functional(const Coalgebra& c, const Functional& x) {
  if (x.size() != c.dim()) {
    throw DimensionError("functional has length " + std::to_string(x.size()) +
                         " but coalgebra " + c.name() + " has dimension " +
                         std::to_string(c.dim()));
  }
}

/// (x * y)(c_k) = sum_{i,j} delta[k][i][j] x(c_i) y(c_j).
inline Functional conv_mul(const Coalgebra& c, const Functional& x, const Functional& y) {
  require_functional(c, x);
  require_functional(c, y);
  Functional out(c.dim());
  for (const auto& [idx, v] : c.delta().entries()) {
    const Scalar& a = x[idx[1]];
    if (a.is_zero()) continue;
    const Scalar& b = y[idx[2]];
    if (b.is_zero()) continue;
    out[idx[0]] += v * a * b;
  }
  return out;
}

/// The unit of F(C) is the counit.
inline Functional conv_unit(const Coalgebra& c) { return c.eps(); }

inline Functional conv_pow(const Coalgebra& c, const Functional& x, std::size_t m) {
  Functional out = conv_unit(c);
  for (std::size_t k = 0; k < m; ++k) out = conv_mul(c, out, x);
  return out;
}

/// The dual basis functional e_k.
inline Functional dual_basis(const Coalgebra& c, std::size_t k) { return basis_vector(c.dim(), k); }

inline Functional dual_basis(const Coalgebra& c, const std::string& label) {
  return dual_basis(c, c.index_of(label));
}

/// Pairing x(v) for an element v of C.
inline Scalar evaluate(const Functional& x, const Vector& v) {
  if (x.size() != v.size()) throw DimensionError("evaluate: length mismatch");
  Scalar s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero() && !v[k].is_zero()) s += x[k] * v[k];
  }
  return s;
}

}  // namespace qcomb
