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
 * @file partial.hpp
 * @brief The partial product of representable quantum sets.
 *
 * Two elements x1: C -> D1, x2: C -> D2 are admissible when
 * (x1 (x) x2)(Delta - tau Delta) vanishes. Admissible pairs can be paired into
 * a single coalgebra map C -> D1 (x) D2.
 */

#include <optional>
#include <string>
#include <vector>

#include "qcomb/elements.hpp"

namespace qcomb {

struct Admissibility {
  bool ok = true;
  /// Every source basis index k where the symmetry condition fails.
  std::vector<std::size_t> failing;
  /// Nonzero difference tensor in D1 (x) D2 at the first failing index.
  Vector difference;
};

namespace detail {

inline void require_verified(const CoalgebraMap& f, const char* role) {
  const auto check = is_coalgebra_map(f);
  if (!check.ok) {
    throw Error(std::string(role) + " is not a coalgebra map (" + check.law + " fails at " +
                f.source->basis()[check.element] + ")");
  }
}

}  // namespace detail

inline Admissibility is_admissible(const CoalgebraMap& x1, const CoalgebraMap& x2) {
  if (x1.source->dim() != x2.source->dim() || !same_structure(*x1.source, *x2.source)) {
    throw Error("admissibility needs a common source");
  }
  detail::require_verified(x1, "x1");
  detail::require_verified(x2, "x2");
  const Coalgebra& c = *x1.source;
  const Matrix delta = c.delta_matrix();
  const Matrix diff = kron(x1.mat, x2.mat) * (delta - flip(c.dim(), c.dim()) * delta);
  Admissibility out;
  const Matrix by_k = diff.transpose();
  for (std::size_t k = 0; k < by_k.rows(); ++k) {
    if (by_k.row(k).empty()) continue;
    if (out.ok) out.difference = diff.column(k);
    out.ok = false;
    out.failing.push_back(k);
  }
  return out;
}

/// A pair of maps with a common source, certified admissible at construction.
struct AdmissiblePair {
  CoalgebraMap x1;
  CoalgebraMap x2;
  bool certified = false;
};

inline AdmissiblePair certify(const CoalgebraMap& x1, const CoalgebraMap& x2) {
  return {x1, x2, is_admissible(x1, x2).ok};
}

/// (x1, x2)(c) = x1(c_(1)) (x) x2(c_(2)), a map C -> D1 (x) D2.
inline CoalgebraMap pair(const AdmissiblePair& p) {
  if (!p.certified) throw Error("pair: the pair is not certified admissible");
  const Matrix m = kron(p.x1.mat, p.x2.mat) * p.x1.source->delta_matrix();
  return CoalgebraMap(p.x1.source, share(tensor(*p.x1.target, *p.x2.target)), m);
}

inline std::optional<CoalgebraMap> try_pair(const CoalgebraMap& x1, const CoalgebraMap& x2) {
  auto p = certify(x1, x2);
  if (!p.certified) return std::nullopt;
  return pair(p);
}

/// Re-associate (D1 (x) D2) (x) D3 -> D1 (x) (D2 (x) D3) on basis indices.
inline Matrix reassociate(std::size_t d1, std::size_t d2, std::size_t d3) {
  Matrix m(d1 * d2 * d3, d1 * d2 * d3);
  for (std::size_t a = 0; a < d1; ++a) {
    for (std::size_t b = 0; b < d2; ++b) {
      for (std::size_t c = 0; c < d3; ++c) {
        m.set(a * (d2 * d3) + (b * d3 + c), (a * d2 + b) * d3 + c, Scalar(1));
      }
    }
  }
  return m;
}

struct AssocResult {
  bool left_defined = false;
  bool right_defined = false;
  /// Both nestings produce the same map, when both are defined.
  bool maps_equal = false;
  bool ok() const { return left_defined == right_defined && (!left_defined || maps_equal); }
};

inline AssocResult partial_assoc_check(const CoalgebraMap& x1, const CoalgebraMap& x2,
                                       const CoalgebraMap& x3) {
  AssocResult r;
  std::optional<CoalgebraMap> left;
  if (auto p12 = try_pair(x1, x2)) left = try_pair(*p12, x3);
  std::optional<CoalgebraMap> right;
  if (auto p23 = try_pair(x2, x3)) right = try_pair(x1, *p23);
  r.left_defined = left.has_value();
  r.right_defined = right.has_value();
  if (left && right) {
    const Matrix regroup = reassociate(x1.target->dim(), x2.target->dim(), x3.target->dim());
    r.maps_equal = regroup * left->mat == right->mat;
  }
  return r;
}

/// Scalar shadow of admissibility: sum delta[k][i][j] (x_i y_j - x_j y_i) = 0 for all k.
inline bool functionals_admissible(const Coalgebra& c, const Functional& x, const Functional& y) {
  require_functional(c, x);
  require_functional(c, y);
  Vector defect(c.dim());
  for (const auto& [idx, v] : c.delta().entries()) {
    defect[idx[0]] += v * (x[idx[1]] * y[idx[2]] - x[idx[2]] * y[idx[1]]);
  }
  return is_zero(defect);
}

/// Coefficient functionals x_t of a map C -> kT: f(c) = sum_t x_t(c) t.
inline std::vector<Functional> orthogonal_idempotent_family(const CoalgebraMap& f) {
  if (f.target->origin().kind != Origin::Kind::linearized) {
    throw Error("orthogonal idempotent family needs a linearized set as target");
  }
  detail::require_verified(f, "f");
  std::vector<Functional> out;
  for (std::size_t t = 0; t < f.target->dim(); ++t) {
    Functional x(f.source->dim());
    for (const auto& [k, v] : f.mat.row(t)) x[k] = v;
    out.push_back(std::move(x));
  }
  return out;
}

/// Inverse of orthogonal_idempotent_family. Rejects families that are not a
/// complete set of orthogonal idempotents, naming the failing pair.
inline CoalgebraMap assemble(const CoalgebraPtr& c, const CoalgebraPtr& t,
                             const std::vector<Functional>& family) {
  if (family.size() != t->dim()) throw DimensionError("family size does not match the target");
  Functional sum(c->dim());
  for (std::size_t a = 0; a < family.size(); ++a) {
    require_functional(*c, family[a]);
    sum = sum + family[a];
    for (std::size_t b = 0; b < family.size(); ++b) {
      const Functional prod = conv_mul(*c, family[a], family[b]);
      const bool ok = (a == b) ? prod == family[a] : is_zero(prod);
      if (!ok) {
        throw Error("family is not orthogonal idempotent at (" + t->basis()[a] + ", " +
                    t->basis()[b] + ")");
      }
    }
  }
  if (sum != conv_unit(*c)) throw Error("family does not sum to the unit");
  Matrix m(t->dim(), c->dim());
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t k = 0; k < c->dim(); ++k) m.set(a, k, family[a][k]);
  }
  return CoalgebraMap(c, t, std::move(m));
}

}  // namespace qcomb
