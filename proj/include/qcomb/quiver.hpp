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
 * @file quiver.hpp
 * @brief Classical and quantum quivers, comodules, cotensor products and the
 * corestriction / coinduction pair of a coalgebra map.
 *
 * A right comodule M over C is stored as its coaction matrix, a
 * (dim M * dim C) x dim M matrix with row index m * dim C + c.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcomb/partial.hpp"

namespace qcomb {

struct ClassicalQuiver {
  struct Edge {
    std::string name;
    std::string s;
    std::string t;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  std::size_t vertex_index(const std::string& v) const {
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if (vertices[k] == v) return k;
    }
    throw Error("quiver has no vertex '" + v + "'");
  }

  std::size_t edge_index(const std::string& e) const {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].name == e) return k;
    }
    throw Error("quiver has no edge '" + e + "'");
  }

  std::size_t s(std::size_t e) const { return vertex_index(edges[e].s); }
  std::size_t t(std::size_t e) const { return vertex_index(edges[e].t); }

  /// Edges e with t(e) = v, in edge-list order.
  std::vector<std::size_t> incoming(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (t(e) == v) out.push_back(e);
    }
    return out;
  }

  void check() const {
    std::set<std::string> names(vertices.begin(), vertices.end());
    if (names.size() != vertices.size()) throw Error("quiver: duplicate vertex label");
    std::set<std::string> labels;
    for (const auto& e : edges) {
      if (!labels.insert(e.name).second) throw Error("quiver: duplicate edge label " + e.name);
      if (names.count(e.name)) throw Error("quiver: edge label " + e.name + " is also a vertex");
      if (!names.count(e.s) || !names.count(e.t)) {
        throw Error("quiver: edge " + e.name + " has an unknown endpoint");
      }
    }
  }
};

/// One vertex with one loop.
inline ClassicalQuiver loop_quiver() { return {{"v"}, {{"e", "v", "v"}}}; }

/// The line v1 -> v2 -> ... -> vn with edges e_i : v_i -> v_{i+1}.
inline ClassicalQuiver line_quiver(std::size_t n) {
  ClassicalQuiver q;
  for (std::size_t i = 1; i <= n; ++i) q.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    q.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string(i + 1)});
  }
  return q;
}

struct QuantumQuiver {
  CoalgebraPtr D1;
  CoalgebraPtr D0;
  CoalgebraMap d0;  // D1 -> D0^op
  CoalgebraMap d1;  // D1 -> D0
};

struct QuiverCheck {
  bool ok = true;
  std::vector<std::size_t> failing;
  std::string reading;
};

/// Compatibility of (d0, d1). The default reading is admissibility of the
/// pair; `literal` checks d0(x_(1)) (x) d1(x_(2)) = d0(x_(2)) (x) d0(x_(1)).
inline QuiverCheck quantum_quiver_check(const QuantumQuiver& q, bool literal = false) {
  QuiverCheck r;
  r.reading = literal ? "literal" : "admissible";
  const auto c0 = is_coalgebra_map(q.d0);
  const auto c1 = is_coalgebra_map(q.d1);
  if (!c0.ok || !c1.ok) throw Error("quiver structure maps must be coalgebra maps");
  if (!literal) {
    const auto adm = is_admissible(q.d0, q.d1);
    r.ok = adm.ok;
    r.failing = adm.failing;
    return r;
  }
  const Coalgebra& d1 = *q.D1;
  const Matrix delta = d1.delta_matrix();
  const Matrix diff =
      (kron(q.d0.mat, q.d1.mat) * delta - kron(q.d0.mat, q.d0.mat) * flip(d1.dim(), d1.dim()) * delta)
          .transpose();
  for (std::size_t k = 0; k < diff.rows(); ++k) {
    if (!diff.row(k).empty()) {
      r.ok = false;
      r.failing.push_back(k);
    }
  }
  return r;
}

inline QuantumQuiver from_classical(const ClassicalQuiver& q) {
  q.check();
  std::vector<std::string> edge_labels;
  std::vector<std::size_t> src, tgt;
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    edge_labels.push_back(q.edges[e].name);
    src.push_back(q.s(e));
    tgt.push_back(q.t(e));
  }
  QuantumQuiver out;
  out.D1 = share(linearize(edge_labels, "kE"));
  out.D0 = share(linearize(q.vertices, "kV"));
  out.d0 = set_map(out.D1, share(opposite(*out.D0)), src);
  out.d1 = set_map(out.D1, out.D0, tgt);
  return out;
}

/// Evaluate at k{•}: the edges are the group-likes of D1, with source and
/// target read off through d0 and d1. Needs linearized data.
inline ClassicalQuiver classical_points(const QuantumQuiver& q) {
  ClassicalQuiver out;
  for (const auto& g : grouplikes(*q.D0)) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].is_one()) out.vertices.push_back(q.D0->basis()[k]);
    }
  }
  auto label_of = [&](const Vector& image) {
    for (std::size_t k = 0; k < image.size(); ++k) {
      if (!image[k].is_zero()) {
        if (!image[k].is_one()) break;
        return q.D0->basis()[k];
      }
    }
    throw Error("edge endpoint is not a vertex");
  };
  for (const auto& g : grouplikes(*q.D1)) {
    std::string name;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].is_one()) name = q.D1->basis()[k];
    }
    out.edges.push_back({name, label_of(q.d0.mat.apply(g)), label_of(q.d1.mat.apply(g))});
  }
  return out;
}

struct Comodule {
  CoalgebraPtr C;
  std::size_t dim = 0;
  Matrix coaction;
};

struct ComoduleCheck {
  bool coassociative = true;
  bool counital = true;
  /// First failing basis index of M.
  std::optional<std::size_t> witness;
  bool ok() const { return coassociative && counital; }
};

inline ComoduleCheck comodule_validate(const Comodule& m) {
  const std::size_t c = m.C->dim();
  if (m.coaction.rows() != m.dim * c || m.coaction.cols() != m.dim) {
    throw DimensionError("coaction has shape " + m.coaction.shape_str());
  }
  ComoduleCheck r;
  const Matrix idm = Matrix::identity(m.dim);
  const Matrix assoc = (kron(m.coaction, Matrix::identity(c)) * m.coaction -
                        kron(idm, m.C->delta_matrix()) * m.coaction)
                           .transpose();
  const Matrix unit = (kron(idm, m.C->eps_matrix()) * m.coaction - idm).transpose();
  for (std::size_t k = 0; k < m.dim; ++k) {
    const bool bad_assoc = !assoc.row(k).empty();
    const bool bad_unit = !unit.row(k).empty();
    if (bad_assoc) r.coassociative = false;
    if (bad_unit) r.counital = false;
    if ((bad_assoc || bad_unit) && !r.witness) r.witness = k;
  }
  return r;
}

inline Comodule regular_comodule(const CoalgebraPtr& c) { return {c, c->dim(), c->delta_matrix()}; }

/// Over kV: the graded space with dims[v] basis vectors in degree v,
/// ordered by vertex; rho(m) = m (x) v.
inline Comodule graded_comodule(const CoalgebraPtr& kv, const std::vector<std::size_t>& dims) {
  if (dims.size() != kv->dim()) throw DimensionError("graded comodule needs one dim per vertex");
  std::size_t total = 0;
  for (auto d : dims) total += d;
  Matrix rho(total * kv->dim(), total);
  std::size_t m = 0;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    for (std::size_t k = 0; k < dims[v]; ++k, ++m) rho.set(m * kv->dim() + v, m, Scalar(1));
  }
  return {kv, total, std::move(rho)};
}

/// f_* M: the coaction followed by id (x) f.
inline Comodule corestrict(const CoalgebraMap& f, const Comodule& m) {
  if (!same_structure(*f.source, *m.C)) throw Error("corestrict: comodule is over another coalgebra");
  return {f.target, m.dim, kron(Matrix::identity(m.dim), f.mat) * m.coaction};
}

/// A left D-comodule, stored as a right comodule over D^op.
inline Comodule as_left_comodule_of(const CoalgebraMap& f) {
  // C is a left D-comodule through (f (x) id) Delta_C; flip to a right D^op-coaction.
  const Coalgebra& c = *f.source;
  const Matrix lambda = kron(f.mat, Matrix::identity(c.dim())) * c.delta_matrix();
  return {share(opposite(*f.target)), c.dim(), flip(f.target->dim(), c.dim()) * lambda};
}

struct Cotensor {
  /// Columns span N box_D L inside N (x) L.
  Matrix basis;
  std::size_t dim_n = 0;
  std::size_t dim_l = 0;
};

/// N box_D L = ker(rho_N (x) id - id (x) lambda_L), with L given as a right
/// D^op-comodule.
inline Cotensor cotensor(const Comodule& n, const Comodule& l) {
  const std::size_t d = n.C->dim();
  if (l.C->dim() != d || !same_structure(*l.C, opposite(*n.C))) {
    throw Error("cotensor: second factor must be a comodule over the opposite coalgebra");
  }
  const Matrix lambda = flip(l.dim, d) * l.coaction;  // L -> D (x) L
  const Matrix map = kron(n.coaction, Matrix::identity(l.dim)) - kron(Matrix::identity(n.dim), lambda);
  return {kernel(map), n.dim, l.dim};
}

namespace detail {

// Express the columns of `target` (vectors in the span of `basis`) in the
// basis coordinates.
inline Matrix coordinates(const Matrix& basis, const Matrix& target) {
  auto x = solve(basis, target);
  if (!x) throw Error("internal: vector outside the expected subspace");
  return *x;
}

}  // namespace detail

/// f^* N = N box_D C with the C-coaction id (x) Delta_C, in the kernel basis.
struct Coinduced {
  Comodule comodule;
  Matrix inclusion;  // columns in N (x) C
};

inline Coinduced coinduce(const CoalgebraMap& f, const Comodule& n) {
  if (!same_structure(*n.C, *f.target)) throw Error("coinduce: comodule is over another coalgebra");
  const Coalgebra& c = *f.source;
  const Cotensor box = cotensor(n, as_left_comodule_of(f));
  const Matrix& k = box.basis;
  const std::size_t r = k.cols();
  // (id_N (x) Delta_C) k, regrouped as (N (x) C) (x) C, then written in k (x) C.
  const Matrix image = kron(Matrix::identity(n.dim), c.delta_matrix()) * k;
  const Matrix image_t = image.transpose();
  Matrix rho(r * c.dim(), r);
  for (std::size_t col = 0; col < r; ++col) {
    Matrix slices(n.dim * c.dim(), c.dim());
    for (const auto& [row, v] : image_t.row(col)) {
      slices.set(row / c.dim(), row % c.dim(), v);
    }
    const Matrix coords = detail::coordinates(k, slices);  // r x dim C
    coords.for_each([&](std::size_t a, std::size_t b, const Scalar& v) {
      rho.set(a * c.dim() + b, col, v);
    });
  }
  return {{f.source, r, std::move(rho)}, k};
}

/// Comodule maps M -> M', as columns of vec(phi) (row-major phi entries).
inline Matrix comodule_homs(const Comodule& m, const Comodule& mp) {
  if (!same_structure(*m.C, *mp.C)) throw Error("comodule_homs: different coalgebras");
  const std::size_t c = m.C->dim();
  std::vector<Vector> columns;
  for (std::size_t r = 0; r < mp.dim; ++r) {
    for (std::size_t s = 0; s < m.dim; ++s) {
      Matrix e(mp.dim, m.dim);
      e.set(r, s, Scalar(1));
      const Matrix eq = mp.coaction * e - kron(e, Matrix::identity(c)) * m.coaction;
      Vector flat(mp.dim * c * m.dim);
      eq.for_each([&](std::size_t i, std::size_t j, const Scalar& v) { flat[i * m.dim + j] = v; });
      columns.push_back(std::move(flat));
    }
  }
  return kernel(Matrix::from_columns(columns, mp.dim * c * m.dim));
}

inline bool is_comodule_map(const Matrix& phi, const Comodule& m, const Comodule& mp) {
  const std::size_t c = m.C->dim();
  return mp.coaction * phi == kron(phi, Matrix::identity(c)) * m.coaction;
}

struct AdjunctionReport {
  bool unit_is_comodule_map = false;
  bool counit_is_comodule_map = false;
  bool triangle_left = false;   // counit_{f_* M} . f_*(unit_M) = id
  bool triangle_right = false;  // f^*(counit_N) . unit_{f^* N} = id
  std::size_t hom_left = 0;     // dim Hom_D(f_* M, N)
  std::size_t hom_right = 0;    // dim Hom_C(M, f^* N)
  bool ok() const {
    return unit_is_comodule_map && counit_is_comodule_map && triangle_left && triangle_right &&
           hom_left == hom_right;
  }
};

/// Corestriction f_* is left adjoint to coinduction f^* = - box_D C. The unit
/// at M is the coaction M -> M box_D C, the counit at N is id (x) eps_C.
inline AdjunctionReport adjunction_check(const CoalgebraMap& f, const Comodule& m,
                                         const Comodule& n) {
  if (!is_coalgebra_map(f).ok) throw Error("adjunction_check: f is not a coalgebra map");
  if (!comodule_validate(m).ok() || !comodule_validate(n).ok()) {
    throw Error("adjunction_check: invalid comodule");
  }
  const Coalgebra& c = *f.source;
  AdjunctionReport r;
  const Comodule fm = corestrict(f, m);

  // unit_M : M -> f^* f_* M
  const Coinduced ffm = coinduce(f, fm);
  const Matrix unit = detail::coordinates(ffm.inclusion, m.coaction);
  r.unit_is_comodule_map = is_comodule_map(unit, m, ffm.comodule);

  // counit_N : f_* f^* N -> N
  const Coinduced fn = coinduce(f, n);
  const Matrix drop = kron(Matrix::identity(n.dim), c.eps_matrix());
  const Matrix counit_n = drop * fn.inclusion;
  r.counit_is_comodule_map = is_comodule_map(counit_n, corestrict(f, fn.comodule), n);

  // counit_{f_* M} . f_*(unit_M) = id_M
  const Matrix counit_fm = kron(Matrix::identity(m.dim), c.eps_matrix()) * ffm.inclusion;
  r.triangle_left = counit_fm * unit == Matrix::identity(m.dim);

  // f^*(counit_N) . unit_{f^* N} = id
  const Coinduced ffn = coinduce(f, corestrict(f, fn.comodule));
  const Matrix unit_fn = detail::coordinates(ffn.inclusion, fn.comodule.coaction);
  const Matrix lifted = kron(counit_n, Matrix::identity(c.dim())) * ffn.inclusion;  // into N (x) C
  const Matrix f_counit = detail::coordinates(fn.inclusion, lifted);
  r.triangle_right = f_counit * unit_fn == Matrix::identity(fn.comodule.dim);

  r.hom_left = comodule_homs(fm, n).cols();
  r.hom_right = comodule_homs(m, fn.comodule).cols();
  return r;
}

/// For a linearized set map with finite fibers the left adjoint of f^* exists
/// and agrees with corestriction on graded spaces.
inline Comodule discrete_left_adjoint(const CoalgebraMap& f, const Comodule& m) {
  if (f.source->origin().kind != Origin::Kind::linearized ||
      f.target->origin().kind != Origin::Kind::linearized) {
    throw Error("left adjoint is only available for linearized set maps");
  }
  for (std::size_t k = 0; k < f.mat.cols(); ++k) {
    const Vector col = f.mat.column(k);
    std::size_t ones = 0;
    for (const auto& v : col) {
      if (v.is_one()) ++ones;
      else if (!v.is_zero()) ones = 2;
    }
    if (ones != 1) throw Error("left adjoint needs f to be a set map");
  }
  return corestrict(f, m);
}

}  // namespace qcomb
