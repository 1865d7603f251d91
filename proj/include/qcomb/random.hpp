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
 * @file random.hpp
 * @brief Seeded generators of test instances: coalgebra maps with known
 * admissibility, witnessed states, projections, stable representations and
 * random words.
 */

#include <random>
#include <string>
#include <vector>

#include "qcomb/leavitt.hpp"
#include "qcomb/qlogic.hpp"

namespace qcomb {

using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// A small rational num/den with |num| <= bound and 1 <= den <= bound.
inline Rational random_rational(Rng& rng, long bound = 4) {
  Rational r(random_int(rng, -bound, bound), random_int(rng, 1, bound));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(Rng& rng, long bound = 4) {
  Rational r;
  do {
    r = random_rational(rng, bound);
  } while (sgn(r) == 0);
  return r;
}

inline Scalar random_gaussian(Rng& rng, long bound = 3) {
  return Scalar(random_rational(rng, bound), random_rational(rng, bound));
}

/// A rational point on the unit sphere in R^n (n >= 1), by inverse
/// stereographic projection.
inline std::vector<Rational> rational_sphere_point(Rng& rng, std::size_t n) {
  if (n == 1) return {Rational(random_int(rng, 0, 1) ? 1 : -1)};
  std::vector<Rational> x(n - 1);
  Rational r2 = 0;
  for (auto& xi : x) {
    xi = random_rational(rng, 3);
    r2 += xi * xi;
  }
  std::vector<Rational> p(n);
  const Rational den = r2 + 1;
  for (std::size_t k = 0; k + 1 < n; ++k) p[k] = 2 * x[k] / den;
  p[n - 1] = (r2 - 1) / den;
  return p;
}

/// A unit vector in Q(i)^n.
inline Vector gaussian_unit_vector(Rng& rng, std::size_t n) {
  const auto p = rational_sphere_point(rng, 2 * n);
  Vector v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = Scalar(p[2 * k], p[2 * k + 1]);
  return v;
}

/// A random rank-one idempotent u w^T (w^T u = 1) in M_2, as a functional on comatrix(2).
inline Functional random_rank_one_idempotent(Rng& rng) {
  while (true) {
    Vector u = {Scalar(random_rational(rng)), Scalar(random_rational(rng))};
    Vector w = {Scalar(random_rational(rng)), Scalar(random_rational(rng))};
    const Scalar dot = u[0] * w[0] + u[1] * w[1];
    if (dot.is_zero()) continue;
    Functional x(4);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) x[a * 2 + b] = u[a] * w[b] / dot;
    }
    return x;
  }
}

/// The orthogonal projection u u^dagger / |u|^2 onto a Gaussian line in Q(i)^n,
/// as a functional on comatrix(n); it is self-adjoint for the transpose star.
inline Functional random_projection(Rng& rng, std::size_t n) {
  Vector u(n);
  Rational norm;
  do {
    norm = 0;
    for (auto& x : u) {
      x = random_gaussian(rng);
      norm += x.norm2();
    }
  } while (sgn(norm) == 0);
  Functional p(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) p[a * n + b] = u[a] * u[b].conj() / Scalar(norm);
  }
  return p;
}

/// A state on comatrix(n) with witness: c = sum conj(v_q) v_r d_qr, c_l = sum_q v_q d_lq.
inline State random_comatrix_state(Rng& rng, std::size_t n) {
  const Vector v = gaussian_unit_vector(rng, n);
  State s;
  s.coords = Vector(n * n);
  std::vector<Vector> w(n, Vector(n * n));
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t r = 0; r < n; ++r) s.coords[q * n + r] = v[q].conj() * v[r];
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t q = 0; q < n; ++q) w[l][l * n + q] = v[q];
  }
  s.witness = std::move(w);
  return s;
}

/// A state on kS: c = sum q_s^2 s with witness c_s = q_s s.
inline State random_set_state(Rng& rng, std::size_t n) {
  const auto q = rational_sphere_point(rng, n);
  State s;
  s.coords = Vector(n);
  std::vector<Vector> w;
  for (std::size_t k = 0; k < n; ++k) {
    s.coords[k] = Scalar(Rational(q[k] * q[k]));
    Vector ck(n);
    ck[k] = Scalar(q[k]);
    w.push_back(std::move(ck));
  }
  s.witness = std::move(w);
  return s;
}

/// Place a complete orthogonal family into a random target kT, with the
/// members at random positions and the other slots zero.
inline CoalgebraMap scatter_family(Rng& rng, const CoalgebraPtr& c, const CoalgebraPtr& t,
                                   const std::vector<Functional>& members) {
  std::vector<Functional> family(t->dim(), Functional(c->dim()));
  std::vector<std::size_t> slots(t->dim());
  for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = k;
  std::shuffle(slots.begin(), slots.end(), rng);
  for (std::size_t k = 0; k < members.size(); ++k) family[slots[k]] = family[slots[k]] + members[k];
  return assemble(c, t, family);
}

/// Sources used by the partial-product sweeps.
enum class SweepSource { set, comatrix2, monoid2 };

/// A random coalgebra map out of `c` together with the functional data that
/// decides admissibility: for comatrix(2) sources into kT, the idempotent P
/// (or nothing for constant maps).
struct SweepMap {
  CoalgebraMap map;
  std::optional<Functional> idempotent;
};

inline SweepMap random_map(Rng& rng, SweepSource kind, const CoalgebraPtr& c) {
  const auto omega_t = share(omega());
  const auto three = share(linearize({"x", "y", "z"}));
  switch (kind) {
    case SweepSource::set: {
      const auto& t = random_int(rng, 0, 1) ? omega_t : three;
      std::vector<std::size_t> image(c->dim());
      for (auto& k : image) k = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(t->dim()) - 1));
      return {set_map(c, t, image), std::nullopt};
    }
    case SweepSource::comatrix2: {
      const long pick = random_int(rng, 0, 5);
      if (pick == 0) return {collapse(c), std::nullopt};
      if (pick == 1) return {scatter_family(rng, c, omega_t, {conv_unit(*c)}), std::nullopt};
      const Functional p = random_rank_one_idempotent(rng);
      const auto& t = pick % 2 ? omega_t : three;
      return {scatter_family(rng, c, t, {p, conv_unit(*c) - p}), p};
    }
    case SweepSource::monoid2: {
      if (random_int(rng, 0, 2) == 0) {
        return {scatter_family(rng, c, random_int(rng, 0, 1) ? omega_t : three, {conv_unit(*c)}),
                std::nullopt};
      }
      // d0 -> d0, d1 -> a d1, d2 -> a^2 d2 + b d1
      const Scalar a(random_rational(rng));
      const Scalar b(random_rational(rng));
      Matrix m(3, 3);
      m.set(0, 0, Scalar(1));
      m.set(1, 1, a);
      m.set(2, 2, a * a);
      m.set(1, 2, b);
      return {CoalgebraMap(c, c, m), std::nullopt};
    }
  }
  throw Error("unknown sweep source");
}

/// A map out of comatrix(2) that commutes with a given idempotent p, so that
/// it forms an admissible pair with any map built from p.
inline CoalgebraMap commuting_map(Rng& rng, const CoalgebraPtr& c, const Functional& p) {
  const auto omega_t = share(omega());
  const Functional one = conv_unit(*c);
  switch (random_int(rng, 0, 2)) {
    case 0:
      return collapse(c);
    case 1:
      return scatter_family(rng, c, omega_t, {p, one - p});
    default:
      return scatter_family(rng, c, share(linearize({"x", "y", "z"})), {one - p, p});
  }
}

inline CoalgebraPtr sweep_source(Rng& rng, SweepSource kind) {
  switch (kind) {
    case SweepSource::set: {
      std::vector<std::string> labels;
      const long n = random_int(rng, 1, 4);
      for (long k = 0; k < n; ++k) labels.push_back("s" + std::to_string(k));
      return share(linearize(labels));
    }
    case SweepSource::comatrix2:
      return share(comatrix(2));
    case SweepSource::monoid2:
      return share(fd_monoid_additive(2));
  }
  throw Error("unknown sweep source");
}

/// Random invertible k x k matrix with small integer entries.
inline Matrix random_invertible(Rng& rng, std::size_t k) {
  while (true) {
    Matrix m(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) m.set(r, c, Scalar(random_int(rng, -3, 3)));
    }
    if (rank(m) == k) return m;
  }
}

/// A random stable representation: at a vertex with nonempty fiber, omega
/// is a random isomorphism onto the fiber and sigma its inverse. Vertex
/// dimensions are chosen so that fibers match.
inline StableRep random_stable_rep(Rng& rng, const ClassicalQuiver& q) {
  StableRep r;
  r.quiver = q;
  const std::size_t nv = q.vertices.size();
  r.dims.assign(nv, 0);
  // Assign dims at vertices with empty fiber freely, then propagate.
  bool progress = true;
  std::vector<bool> set(nv, false);
  for (std::size_t v = 0; v < nv; ++v) {
    if (q.incoming(v).empty()) {
      r.dims[v] = static_cast<std::size_t>(random_int(rng, 1, 3));
      set[v] = true;
    }
  }
  while (progress) {
    progress = false;
    for (std::size_t v = 0; v < nv; ++v) {
      if (set[v]) continue;
      std::size_t f = 0;
      bool known = true;
      for (auto e : q.incoming(v)) {
        if (q.s(e) == v) {
          known = false;
          break;
        }
        if (!set[q.s(e)]) known = false;
        f += r.dims[q.s(e)];
      }
      if (known) {
        r.dims[v] = f;
        set[v] = progress = true;
      }
    }
  }
  // Remaining vertices sit on cycles; only one-loop vertices are supported here.
  for (std::size_t v = 0; v < nv; ++v) {
    if (set[v]) continue;
    const auto in = q.incoming(v);
    if (in.size() != 1 || q.s(in[0]) != v) throw Error("random_stable_rep: unsupported quiver shape");
    r.dims[v] = static_cast<std::size_t>(random_int(rng, 1, 3));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t f = fiber_dim(r, v);
    if (f == 0) {
      r.omega.emplace_back(0, r.dims[v]);
      r.sigma.emplace_back(r.dims[v], 0);
      continue;
    }
    const Matrix m = random_invertible(rng, f);
    r.omega.push_back(m);
    r.sigma.push_back(*inverse(m));
  }
  return r;
}

/// A random word of length 1..max_len; mostly a walk through compatible
/// letters, occasionally a random letter.
inline Word random_word(Rng& rng, const Leavitt& lpa, std::size_t max_len = 10) {
  const auto& q = lpa.quiver();
  std::vector<Letter> letters;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) letters.push_back({Letter::Kind::vertex, v});
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    letters.push_back({Letter::Kind::edge, e});
    letters.push_back({Letter::Kind::ghost, e});
  }
  const std::size_t len = static_cast<std::size_t>(random_int(rng, 1, static_cast<long>(max_len)));
  Word w;
  auto pick = [&](const std::vector<Letter>& from) {
    return from[static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(from.size()) - 1))];
  };
  w.push_back(pick(letters));
  while (w.size() < len) {
    std::vector<Letter> next;
    if (random_int(rng, 0, 9) > 0) {
      for (const auto& x : letters) {
        if (lpa.left(x) == lpa.right(w.back())) next.push_back(x);
      }
    }
    w.push_back(pick(next.empty() ? letters : next));
  }
  return w;
}

}  // namespace qcomb
