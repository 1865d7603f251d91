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
 * @file qlogic.hpp
 * @brief Quantum propositions (idempotents of F(C)), states and expectations.
 */

#include <optional>
#include <string>
#include <vector>

#include "qcomb/partial.hpp"

namespace qcomb {

/// An idempotent x * x = x of F(C).
class Proposition {
 public:
  Proposition(CoalgebraPtr c, Functional x) : c_(std::move(c)), x_(std::move(x)) {
    require_functional(*c_, x_);
    if (conv_mul(*c_, x_, x_) != x_) throw Error("proposition is not idempotent");
  }

  const CoalgebraPtr& coalgebra() const { return c_; }
  const Functional& value() const { return x_; }

  /// The kΩ-valued coalgebra map with x_top = x and x_bot = 1 - x.
  CoalgebraMap as_map() const {
    return assemble(c_, share(omega()), {conv_unit(*c_) - x_, x_});
  }

 private:
  CoalgebraPtr c_;
  Functional x_;
};

inline Proposition truth_value_map(const CoalgebraMap& f) {
  if (f.target->basis() != omega().basis()) throw Error("truth value map must land in kΩ");
  auto family = orthogonal_idempotent_family(f);
  return Proposition(f.source, family[1]);
}

inline Proposition prop_top(const CoalgebraPtr& c) { return Proposition(c, conv_unit(*c)); }
inline Proposition prop_bot(const CoalgebraPtr& c) { return Proposition(c, Functional(c->dim())); }

namespace detail {

inline void require_admissible_props(const Proposition& p, const Proposition& q) {
  const auto adm = is_admissible(p.as_map(), q.as_map());
  if (!adm.ok) {
    throw Error("propositions are not an admissible pair (fails at " +
                p.coalgebra()->basis()[adm.failing.front()] + ")");
  }
}

}  // namespace detail

inline Proposition prop_and(const Proposition& p, const Proposition& q) {
  detail::require_admissible_props(p, q);
  return Proposition(p.coalgebra(), conv_mul(*p.coalgebra(), p.value(), q.value()));
}

inline Proposition prop_or(const Proposition& p, const Proposition& q) {
  detail::require_admissible_props(p, q);
  const auto& c = *p.coalgebra();
  return Proposition(p.coalgebra(), p.value() + q.value() - conv_mul(c, p.value(), q.value()));
}

inline Proposition prop_not(const Proposition& p) {
  return Proposition(p.coalgebra(), conv_unit(*p.coalgebra()) - p.value());
}

/// An element c with eps(c) = 1, optionally with a positivity witness
/// {c_i} satisfying Delta(c) = sum_i c_i* (x) c_i.
struct State {
  Vector coords;
  std::optional<std::vector<Vector>> witness;
};

struct StateCheck {
  bool normalized = false;
  bool witnessed = false;
  std::string failure;
  bool ok() const { return normalized && failure.empty(); }
};

inline StateCheck check_state(const Coalgebra& c, const State& s) {
  StateCheck r;
  r.normalized = counit(c, s.coords).is_one();
  if (!r.normalized) r.failure = "counit of the state is not 1";
  if (s.witness) {
    Vector sum(c.dim() * c.dim());
    for (const auto& ci : *s.witness) {
      const auto term = kron(Matrix::column_of(star_element(c, ci)), Matrix::column_of(ci));
      sum = sum + term.column(0);
    }
    r.witnessed = sum == comultiply(c, s.coords);
    if (!r.witnessed && r.failure.empty()) r.failure = "positivity witness does not reproduce Delta(c)";
  }
  return r;
}

/// <x>_c = x(c).
inline Scalar expectation(const Coalgebra& c, const Functional& x, const State& s) {
  require_functional(c, x);
  if (s.coords.size() != c.dim()) throw DimensionError("state length does not match coalgebra");
  return evaluate(x, s.coords);
}

/// x*(c) = conj(x(c*)).
inline Functional star_on_functionals(const Coalgebra& c, const Functional& x) {
  require_functional(c, x);
  if (!c.star()) throw Error("coalgebra " + c.name() + " carries no star structure");
  Functional out(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) out[k] = x[(*c.star())[k]].conj();
  return out;
}

/// <x* x>_c, cross-checked against sum_i |x(c_i)|^2 from the witness; the
/// result is a nonnegative rational.
inline Rational positivity_check(const Coalgebra& c, const Functional& x, const State& s) {
  if (!s.witness) throw Error("positivity check needs a witnessed state");
  const auto chk = check_state(c, s);
  if (!chk.ok()) throw Error("state is invalid: " + chk.failure);
  const Scalar lhs = expectation(c, conv_mul(c, star_on_functionals(c, x), x), s);
  Rational rhs = 0;
  for (const auto& ci : *s.witness) rhs += evaluate(x, ci).norm2();
  if (lhs != Scalar(rhs)) throw Error("positivity: expectation disagrees with witness sum");
  if (sgn(rhs) < 0) throw Error("positivity: negative value");
  return rhs;
}

/// (1 - t) s0 + t s1 with rescaled witnesses; needs rational sqrt(t), sqrt(1 - t).
inline std::optional<State> convex_combination(const State& s0, const State& s1,
                                               const Rational& t) {
  if (!s0.witness || !s1.witness) return std::nullopt;
  if (sgn(t) < 0 || t > 1) throw Error("convex parameter outside [0, 1]");
  const auto rt = rational_sqrt(t);
  const auto rs = rational_sqrt(Rational(1 - t));
  if (!rt || !rs) return std::nullopt;
  State out;
  out.coords = Scalar(Rational(1 - t)) * s0.coords + Scalar(t) * s1.coords;
  std::vector<Vector> w;
  for (const auto& ci : *s0.witness) w.push_back(Scalar(*rs) * ci);
  for (const auto& ci : *s1.witness) w.push_back(Scalar(*rt) * ci);
  out.witness = std::move(w);
  return out;
}

}  // namespace qcomb
