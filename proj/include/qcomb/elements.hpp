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
 * @file elements.hpp
 * @brief Quantum elements: coalgebra maps C -> D and the structured element
 * families (group-likes, primitives, matrix units, nilpotents, functors of
 * finite support).
 */

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcomb/coalg.hpp"
#include "qcomb/convolution.hpp"

namespace qcomb {

inline CoalgebraPtr share(Coalgebra c) { return std::make_shared<const Coalgebra>(std::move(c)); }

/// A linear map C -> D; columns indexed by the basis of C, rows by that of D.
struct CoalgebraMap {
  CoalgebraPtr source;
  CoalgebraPtr target;
  Matrix mat;

  CoalgebraMap() = default;
  CoalgebraMap(CoalgebraPtr s, CoalgebraPtr t, Matrix m)
      : source(std::move(s)), target(std::move(t)), mat(std::move(m)) {
    if (mat.rows() != target->dim() || mat.cols() != source->dim()) {
      throw DimensionError("map matrix is " + mat.shape_str() + ", expected " +
                           std::to_string(target->dim()) + "x" + std::to_string(source->dim()));
    }
  }
};

struct MapCheck {
  bool ok = true;
  /// "comultiplication" or "counit" for the first violated law.
  std::string law;
  /// Source basis index of the first violation.
  std::size_t element = 0;
  /// For comultiplication failures, the target pair (a, b) of the first bad entry.
  std::size_t a = 0;
  std::size_t b = 0;
  Scalar defect;
};

/// Check Delta_D f = (f (x) f) Delta_C and eps_D f = eps_C exactly.
inline MapCheck is_coalgebra_map(const Matrix& f, const Coalgebra& c, const Coalgebra& d) {
  if (f.rows() != d.dim() || f.cols() != c.dim()) {
    throw DimensionError("candidate map is " + f.shape_str() + " but " + d.name() + " <- " +
                         c.name() + " needs " + std::to_string(d.dim()) + "x" +
                         std::to_string(c.dim()));
  }
  MapCheck out;
  // Report the violation with the smallest source index; comultiplication first.
  const Matrix comult = (d.delta_matrix() * f - kron(f, f) * c.delta_matrix()).transpose();
  for (std::size_t k = 0; k < comult.rows(); ++k) {
    if (comult.row(k).empty()) continue;
    const auto& [row, v] = *comult.row(k).begin();
    out = {false, "comultiplication", k, row / d.dim(), row % d.dim(), v};
    break;
  }
  const Matrix count = d.eps_matrix() * f - c.eps_matrix();
  if (!count.row(0).empty()) {
    const auto& [k, v] = *count.row(0).begin();
    if (out.ok || k < out.element) out = {false, "counit", k, 0, 0, v};
  }
  return out;
}

inline MapCheck is_coalgebra_map(const CoalgebraMap& f) {
  return is_coalgebra_map(f.mat, *f.source, *f.target);
}

inline CoalgebraMap identity_map(const CoalgebraPtr& c) {
  return CoalgebraMap(c, c, Matrix::identity(c->dim()));
}

/// The unique coalgebra map C -> k{•}, which is the counit.
inline CoalgebraMap collapse(const CoalgebraPtr& c) {
  return CoalgebraMap(c, share(singleton()), c->eps_matrix());
}

/// Linearization of a set map S -> T given by target indices.
inline CoalgebraMap set_map(const CoalgebraPtr& s, const CoalgebraPtr& t,
                            const std::vector<std::size_t>& image) {
  if (image.size() != s->dim()) throw DimensionError("set map: image length mismatch");
  Matrix m(t->dim(), s->dim());
  for (std::size_t k = 0; k < image.size(); ++k) m.set(image.at(k), k, Scalar(1));
  return CoalgebraMap(s, t, std::move(m));
}

inline CoalgebraMap compose(const CoalgebraMap& g, const CoalgebraMap& f) {
  if (f.target->dim() != g.source->dim()) throw DimensionError("compose: dimension mismatch");
  return CoalgebraMap(f.source, g.target, g.mat * f.mat);
}

/// Does g satisfy Delta(g) = g (x) g and eps(g) = 1?
inline bool is_grouplike(const Coalgebra& d, const Vector& g) {
  if (g.size() != d.dim()) throw DimensionError("group-like candidate has the wrong length");
  return is_coalgebra_map(Matrix::column_of(g), singleton(), d).ok;
}

class VerificationOnly : public Error {
 public:
  explicit VerificationOnly(const std::string& what)
      : Error("group-like enumeration is verification-only for " + what +
              "; check a candidate with is_grouplike instead") {}
};

namespace detail {

// Characters End(x) -> Q(i) sending id to 1; values are 0 or roots of unity
// in Q(i), because End(x) is finite.
inline void category_grouplikes(const CategoryData& cat, std::vector<Vector>& out) {
  const std::vector<Scalar> values = {Scalar(0), Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  const std::size_t d = cat.morphisms.size();
  for (const auto& x : cat.objects) {
    const std::size_t id = *cat.identity_of(x);
    std::vector<std::size_t> ends;
    for (std::size_t m = 0; m < d; ++m) {
      if (m != id && cat.morphisms[m].src == x && cat.morphisms[m].tgt == x) ends.push_back(m);
    }
    std::vector<std::size_t> choice(ends.size(), 0);
    while (true) {
      Vector lambda(d);
      lambda[id] = Scalar(1);
      for (std::size_t k = 0; k < ends.size(); ++k) lambda[ends[k]] = values[choice[k]];
      bool ok = true;
      for (std::size_t a = 0; a < d && ok; ++a) {
        if (cat.morphisms[a].src != x || cat.morphisms[a].tgt != x) continue;
        for (std::size_t b = 0; b < d && ok; ++b) {
          if (cat.morphisms[b].src != x || cat.morphisms[b].tgt != x) continue;
          const auto ab = cat.index_of(cat.compose.at({cat.morphisms[a].name, cat.morphisms[b].name}));
          ok = lambda[ab] == lambda[a] * lambda[b];
        }
      }
      if (ok) out.push_back(lambda);
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == values.size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  }
}

}  // namespace detail

/// All group-like elements, for coalgebras built by the supported constructors.
inline std::vector<Vector> grouplikes(const Coalgebra& d) {
  std::vector<Vector> out;
  const auto& o = d.origin();
  switch (o.kind) {
    case Origin::Kind::linearized:
      for (std::size_t k = 0; k < d.dim(); ++k) out.push_back(basis_vector(d.dim(), k));
      break;
    case Origin::Kind::monoid_additive:
      // Comparing coefficients of d_a (x) d_b forces every higher coefficient to vanish.
      out.push_back(basis_vector(d.dim(), 0));
      break;
    case Origin::Kind::comatrix:
      if (o.n == 1) out.push_back(basis_vector(1, 0));
      break;
    case Origin::Kind::category:
      detail::category_grouplikes(*o.category, out);
      break;
    case Origin::Kind::opposite:
      out = grouplikes(*o.parts.front());
      break;
    case Origin::Kind::tensor: {
      const auto left = grouplikes(*o.parts[0]);
      const auto right = grouplikes(*o.parts[1]);
      for (const auto& g : left) {
        for (const auto& h : right) {
          out.push_back(kron(Matrix::column_of(g), Matrix::column_of(h)).column(0));
        }
      }
      break;
    }
    case Origin::Kind::monoid_multiplicative:
      throw VerificationOnly("the multiplicative monoid truncation " + d.name());
    case Origin::Kind::custom:
      throw VerificationOnly("the custom coalgebra " + d.name());
  }
  if (d.dim() != 0) {
    for (const auto& g : out) {
      if (!is_grouplike(d, g)) throw Error("internal: enumerated element is not group-like");
    }
  }
  return out;
}

/// Basis (as columns) of the (g, h)-primitive space {p : Delta(p) = p (x) g + h (x) p}.
inline Matrix primitives(const Coalgebra& d, const Vector& g, const Vector& h) {
  if (!is_grouplike(d, g)) throw Error("primitives: g is not group-like");
  if (!is_grouplike(d, h)) throw Error("primitives: h is not group-like");
  const std::size_t n = d.dim();
  const Matrix id = Matrix::identity(n);
  const Matrix system =
      d.delta_matrix() - kron(id, Matrix::column_of(g)) - kron(Matrix::column_of(h), id);
  Matrix basis = kernel(system);
  for (const auto& p : basis.columns()) {
    if (!counit(d, p).is_zero()) throw Error("internal: primitive with nonzero counit");
  }
  return basis;
}

struct RelationCheck {
  bool ok = true;
  std::string failure;
};

/// Matrix units x_ij (row-major over I x I) in F(C):
/// x_ij * x_j'k = [j = j'] x_ik and sum_i x_ii = 1.
inline RelationCheck matrix_unit_system_check(const Coalgebra& c,
                                              const std::vector<Functional>& x) {
  std::size_t n = 0;
  while (n * n < x.size()) ++n;
  if (n * n != x.size()) throw Error("matrix unit family is not indexed by a square I x I");
  for (const auto& f : x) require_functional(c, f);
  const Functional zero(c.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t jj = 0; jj < n; ++jj) {
        for (std::size_t k = 0; k < n; ++k) {
          const Functional lhs = conv_mul(c, x[i * n + j], x[jj * n + k]);
          const Functional& rhs = (j == jj) ? x[i * n + k] : zero;
          if (lhs != rhs) {
            return {false, "x" + std::to_string(i + 1) + std::to_string(j + 1) + " * x" +
                               std::to_string(jj + 1) + std::to_string(k + 1)};
          }
        }
      }
    }
  }
  Functional sum(c.dim());
  for (std::size_t i = 0; i < n; ++i) sum = sum + x[i * n + i];
  if (sum != conv_unit(c)) return {false, "sum of diagonal units is not 1"};
  return {};
}

struct NilpotencyResult {
  bool nilpotent = false;
  /// Smallest m with x^m = 0, when nilpotent.
  std::size_t order = 0;
  std::size_t bound = 0;
};

/// Is x^m = 0 for some m <= bound? The default bound is dim C.
inline NilpotencyResult nilpotent_element_check(const Coalgebra& c, const Functional& x,
                                                std::size_t bound = 0) {
  require_functional(c, x);
  if (bound == 0) bound = std::max<std::size_t>(c.dim(), 1);
  NilpotencyResult r;
  r.bound = bound;
  Functional power = x;
  for (std::size_t m = 1; m <= bound; ++m) {
    if (is_zero(power)) {
      r.nilpotent = true;
      r.order = m;
      return r;
    }
    power = conv_mul(c, power, x);
  }
  return r;
}

/// m -> x_m in F(C) is a functor of finite support: x_{a∘b} = x_a x_b on
/// composable pairs, x_a x_b = 0 otherwise, and sum over identities is 1.
inline RelationCheck finite_support_functor_check(const Coalgebra& c, const CategoryData& cat,
                                                  const std::vector<Functional>& x) {
  cat.check();
  if (x.size() != cat.morphisms.size()) throw Error("assignment length does not match morphisms");
  for (const auto& f : x) require_functional(c, f);
  const Functional zero(c.dim());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      const Functional prod = conv_mul(c, x[a], x[b]);
      const auto& na = cat.morphisms[a].name;
      const auto& nb = cat.morphisms[b].name;
      if (cat.composable(a, b)) {
        const auto ab = cat.index_of(cat.compose.at({na, nb}));
        if (prod != x[ab]) return {false, "x(" + na + "∘" + nb + ") != x(" + na + ") x(" + nb + ")"};
      } else if (prod != zero) {
        return {false, "x(" + na + ") x(" + nb + ") != 0 for a non-composable pair"};
      }
    }
  }
  Functional sum(c.dim());
  for (const auto& o : cat.objects) sum = sum + x[*cat.identity_of(o)];
  if (sum != conv_unit(c)) return {false, "sum over identities is not 1"};
  return {};
}

}  // namespace qcomb
