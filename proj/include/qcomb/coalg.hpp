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
 * @file coalg.hpp
 * @brief Finite-dimensional counital coassociative coalgebras.
 *
 * A coalgebra is stored through its structure constants: delta[k][i][j] is
 * the coefficient of c_i (x) c_j in Delta(c_k). For verification the
 * comultiplication is also viewed as a dim^2 x dim matrix, so every law
 * becomes an identity between composed matrices.
 */

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/exact.hpp"

namespace qcomb {

/// A finite category given by a composition table.
///
/// compose(a, b) is a∘b, defined when src(a) = tgt(b).
struct CategoryData {
  struct Morphism {
    std::string name;
    std::string src;
    std::string tgt;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::pair<std::string, std::string>, std::string> compose;

  std::size_t index_of(const std::string& name) const {
    for (std::size_t k = 0; k < morphisms.size(); ++k) {
      if (morphisms[k].name == name) return k;
    }
    throw Error("unknown morphism '" + name + "'");
  }

  bool composable(std::size_t a, std::size_t b) const {
    return morphisms[a].src == morphisms[b].tgt;
  }

  /// Index of the identity on `object`, if the table has one.
  std::optional<std::size_t> identity_of(const std::string& object) const {
    for (std::size_t k = 0; k < morphisms.size(); ++k) {
      const auto& m = morphisms[k];
      if (m.src != object || m.tgt != object) continue;
      bool is_id = true;
      for (std::size_t j = 0; j < morphisms.size() && is_id; ++j) {
        const auto& n = morphisms[j];
        if (n.src == object) {
          auto it = compose.find({n.name, m.name});
          is_id = it != compose.end() && it->second == n.name;
        }
        if (is_id && n.tgt == object) {
          auto it = compose.find({m.name, n.name});
          is_id = it != compose.end() && it->second == n.name;
        }
      }
      if (is_id) return k;
    }
    return std::nullopt;
  }

  /// Throws unless the table is a category: closed, associative, with identities.
  void check() const {
    std::set<std::string> objs(objects.begin(), objects.end());
    if (objs.size() != objects.size()) throw Error("category: duplicate object");
    std::set<std::string> names;
    for (const auto& m : morphisms) {
      if (!names.insert(m.name).second) throw Error("category: duplicate morphism " + m.name);
      if (!objs.count(m.src) || !objs.count(m.tgt)) {
        throw Error("category: morphism " + m.name + " has an unknown endpoint");
      }
    }
    for (const auto& [key, value] : compose) {
      if (!names.count(key.first) || !names.count(key.second) || !names.count(value)) {
        throw Error("category: composition table mentions an unknown morphism");
      }
    }
    const std::size_t n = morphisms.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = compose.find({morphisms[a].name, morphisms[b].name});
        if (!composable(a, b)) {
          if (it != compose.end()) {
            throw Error("category: composite " + morphisms[a].name + "∘" + morphisms[b].name +
                        " given for a non-composable pair");
          }
          continue;
        }
        if (it == compose.end()) {
          throw Error("category: missing composite " + morphisms[a].name + "∘" +
                      morphisms[b].name);
        }
        const auto& c = morphisms[index_of(it->second)];
        if (c.src != morphisms[b].src || c.tgt != morphisms[a].tgt) {
          throw Error("category: composite " + it->second + " has wrong endpoints");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!composable(a, b)) continue;
        const std::size_t ab = index_of(compose.at({morphisms[a].name, morphisms[b].name}));
        for (std::size_t c = 0; c < n; ++c) {
          if (!composable(b, c)) continue;
          const std::size_t bc = index_of(compose.at({morphisms[b].name, morphisms[c].name}));
          const auto& lhs = compose.at({morphisms[ab].name, morphisms[c].name});
          const auto& rhs = compose.at({morphisms[a].name, morphisms[bc].name});
          if (lhs != rhs) {
            throw Error("category: composition is not associative at (" + morphisms[a].name +
                        "," + morphisms[b].name + "," + morphisms[c].name + ")");
          }
        }
      }
    }
    for (const auto& o : objects) {
      if (!identity_of(o)) throw Error("category: object " + o + " has no identity");
    }
  }
};

/// Discrete category: objects only.
inline CategoryData discrete_category(const std::vector<std::string>& objects) {
  CategoryData cat;
  cat.objects = objects;
  for (const auto& o : objects) {
    cat.morphisms.push_back({o, o, o});
    cat.compose[{o, o}] = o;
  }
  return cat;
}

/// The pair category on {1..n}: one morphism d_ij : j -> i for every pair,
/// with d_ij ∘ d_jk = d_ik.
inline CategoryData pair_category(std::size_t n) {
  CategoryData cat;
  auto label = [](std::size_t i, std::size_t j) {
    return "d" + std::to_string(i) + std::to_string(j);
  };
  for (std::size_t i = 1; i <= n; ++i) cat.objects.push_back(std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      cat.morphisms.push_back({label(i, j), std::to_string(j), std::to_string(i)});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) cat.compose[{label(i, j), label(j, k)}] = label(i, k);
    }
  }
  return cat;
}

/// The poset 0 < 1 < ... < n-1 as a category; morphism "a<b" for a < b and "id_a".
inline CategoryData chain_category(std::size_t n) {
  CategoryData cat;
  auto label = [](std::size_t a, std::size_t b) {
    return a == b ? "id" + std::to_string(a) : std::to_string(a) + "<" + std::to_string(b);
  };
  for (std::size_t a = 0; a < n; ++a) cat.objects.push_back(std::to_string(a));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      cat.morphisms.push_back({label(a, b), std::to_string(a), std::to_string(b)});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) cat.compose[{label(b, c), label(a, b)}] = label(a, c);
    }
  }
  return cat;
}

class Coalgebra;
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

/// How a coalgebra was built; group-like enumeration dispatches on this.
struct Origin {
  enum class Kind { custom, linearized, monoid_additive, monoid_multiplicative, comatrix, category,
                    tensor, opposite };
  Kind kind = Kind::custom;
  std::size_t n = 0;
  std::shared_ptr<const CategoryData> category;
  std::vector<CoalgebraPtr> parts;
};

class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(std::string name, std::vector<std::string> basis, Tensor3 delta, Vector eps)
      : name_(std::move(name)),
        basis_(std::move(basis)),
        delta_(std::move(delta)),
        eps_(std::move(eps)) {
    const std::size_t d = basis_.size();
    if (delta_.dims() != Tensor3::Index{d, d, d}) {
      throw DimensionError("coalgebra " + name_ + ": delta dimensions do not match the basis");
    }
    if (eps_.size() != d) {
      throw DimensionError("coalgebra " + name_ + ": eps length does not match the basis");
    }
    std::set<std::string> seen;
    for (const auto& b : basis_) {
      if (!seen.insert(b).second) throw Error("coalgebra " + name_ + ": duplicate label " + b);
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const Tensor3& delta() const { return delta_; }
  const Vector& eps() const { return eps_; }
  const std::optional<std::vector<std::size_t>>& star() const { return star_; }
  const Origin& origin() const { return origin_; }

  void set_star(std::vector<std::size_t> perm) {
    if (perm.size() != dim()) throw DimensionError("star permutation has the wrong length");
    for (auto p : perm) {
      if (p >= dim()) throw DimensionError("star permutation index out of range");
    }
    star_ = std::move(perm);
  }
  void set_origin(Origin o) { origin_ = std::move(o); }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (basis_[k] == label) return k;
    }
    throw Error("coalgebra " + name_ + " has no basis element '" + label + "'");
  }

  /// Delta as a dim^2 x dim matrix; row i*dim + j, column k.
  Matrix delta_matrix() const {
    const std::size_t d = dim();
    Matrix m(d * d, d);
    for (const auto& [idx, v] : delta_.entries()) m.set(idx[1] * d + idx[2], idx[0], v);
    return m;
  }

  Matrix eps_matrix() const {
    Matrix m(1, dim());
    for (std::size_t k = 0; k < dim(); ++k) m.set(0, k, eps_[k]);
    return m;
  }

  /// Structural equality: labels, delta and eps agree exactly.
  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.basis_ == b.basis_ && a.delta_ == b.delta_ && a.eps_ == b.eps_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  Tensor3 delta_;
  Vector eps_;
  std::optional<std::vector<std::size_t>> star_;
  Origin origin_;
};

inline bool same_structure(const Coalgebra& a, const Coalgebra& b) {
  return a.dim() == b.dim() && a.delta() == b.delta() && a.eps() == b.eps();
}

struct Violation {
  std::string law;
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  /// Basis indices k at which some law fails, sorted.
  std::vector<std::size_t> failing_elements;
};

namespace detail {

inline void record(ValidationReport& r, std::set<std::size_t>& failing, Violation v,
                   std::size_t element) {
  r.ok = false;
  failing.insert(element);
  r.violations.push_back(std::move(v));
}

}  // namespace detail

/// Exhaustive check of coassociativity, both counit laws and the star axioms.
inline ValidationReport validate(const Coalgebra& c) {
  ValidationReport report;
  std::set<std::size_t> failing;
  const std::size_t d = c.dim();
  const Matrix delta = c.delta_matrix();
  const Matrix id = Matrix::identity(d);

  // (Delta (x) id) Delta - (id (x) Delta) Delta; row (i*d + j)*d + l, column k.
  const Matrix coassoc = kron(delta, id) * delta - kron(id, delta) * delta;
  coassoc.for_each([&](std::size_t row, std::size_t k, const Scalar& v) {
    const std::size_t l = row % d;
    const std::size_t j = (row / d) % d;
    const std::size_t i = row / (d * d);
    detail::record(report, failing, {"coassociativity", {k, i, j, l}, "defect " + v.str()}, k);
  });

  const Matrix left = kron(c.eps_matrix(), id) * delta - id;
  left.for_each([&](std::size_t j, std::size_t k, const Scalar& v) {
    detail::record(report, failing, {"counit-left", {k, j}, "defect " + v.str()}, k);
  });
  const Matrix right = kron(id, c.eps_matrix()) * delta - id;
  right.for_each([&](std::size_t i, std::size_t k, const Scalar& v) {
    detail::record(report, failing, {"counit-right", {k, i}, "defect " + v.str()}, k);
  });

  if (c.star()) {
    const auto& p = *c.star();
    for (std::size_t k = 0; k < d; ++k) {
      if (p[p[k]] != k) detail::record(report, failing, {"star-involution", {k}, ""}, k);
      if (c.eps()[p[k]] != c.eps()[k].conj()) {
        detail::record(report, failing, {"star-counit", {k}, ""}, k);
      }
    }
    // Delta(c_k*) must equal tau(Delta(c_k))*, i.e. delta[p k][p j][p i] = conj delta[k][i][j].
    for (std::size_t k = 0; k < d; ++k) {
      std::map<std::pair<std::size_t, std::size_t>, Scalar> expected;
      c.delta().for_slice(k, [&](std::size_t i, std::size_t j, const Scalar& v) {
        expected[{p[j], p[i]}] = v.conj();
      });
      std::map<std::pair<std::size_t, std::size_t>, Scalar> actual;
      c.delta().for_slice(p[k], [&](std::size_t i, std::size_t j, const Scalar& v) {
        actual[{i, j}] = v;
      });
      if (expected != actual) detail::record(report, failing, {"star-comultiplication", {k}, ""}, k);
    }
  }
  report.failing_elements.assign(failing.begin(), failing.end());
  return report;
}

inline bool is_cocommutative(const Coalgebra& c) {
  for (const auto& [idx, v] : c.delta().entries()) {
    if (c.delta().at(idx[0], idx[2], idx[1]) != v) return false;
  }
  return true;
}

/// kS: Delta(s) = s (x) s, eps(s) = 1.
inline Coalgebra linearize(const std::vector<std::string>& labels, std::string name = "") {
  const std::size_t d = labels.size();
  Tensor3 delta(d, d, d);
  for (std::size_t k = 0; k < d; ++k) delta.set(k, k, k, Scalar(1));
  if (name.empty()) {
    name = "k{";
    for (std::size_t k = 0; k < d; ++k) name += (k ? "," : "") + labels[k];
    name += "}";
  }
  Coalgebra c(std::move(name), labels, std::move(delta), Vector(d, Scalar(1)));
  c.set_star([&] {
    std::vector<std::size_t> p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = k;
    return p;
  }());
  Origin o;
  o.kind = Origin::Kind::linearized;
  o.n = d;
  c.set_origin(std::move(o));
  return c;
}

/// The quantum singleton k{•}, the terminal coalgebra.
inline Coalgebra singleton() { return linearize({"*"}, "singleton"); }

/// The quantum empty set, the zero coalgebra.
inline Coalgebra empty_coalgebra() { return linearize({}, "empty"); }

/// kΩ on the truth values {bot, top}.
inline Coalgebra omega() { return linearize({"bot", "top"}, "kOmega"); }

/// Comatrix coalgebra: Delta(d_ik) = sum_j d_ij (x) d_jk, eps(d_ik) = delta_ik.
/// The star is d_ij* = d_ji.
inline Coalgebra comatrix(std::size_t n) {
  if (n == 0) throw Error("comatrix: n must be at least 1");
  std::vector<std::string> basis;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      basis.push_back("d" + std::to_string(i) + (n > 9 ? "_" : "") + std::to_string(j));
    }
  }
  const std::size_t d = n * n;
  Tensor3 delta(d, d, d);
  Vector eps(d);
  std::vector<std::size_t> star(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) delta.set(i * n + k, i * n + j, j * n + k, Scalar(1));
      star[i * n + k] = k * n + i;
    }
    eps[i * n + i] = Scalar(1);
  }
  Coalgebra c("comatrix(" + std::to_string(n) + ")", std::move(basis), std::move(delta),
              std::move(eps));
  c.set_star(std::move(star));
  Origin o;
  o.kind = Origin::Kind::comatrix;
  o.n = n;
  c.set_origin(std::move(o));
  return c;
}

/// Truncation d_0..d_n of the additive monoid coalgebra:
/// Delta(d_m) = sum_{a+b=m} d_a (x) d_b, eps(d_m) = [m = 0].
inline Coalgebra fd_monoid_additive(std::size_t n) {
  std::vector<std::string> basis;
  for (std::size_t m = 0; m <= n; ++m) basis.push_back("d" + std::to_string(m));
  const std::size_t d = n + 1;
  Tensor3 delta(d, d, d);
  for (std::size_t m = 0; m <= n; ++m) {
    for (std::size_t a = 0; a <= m; ++a) delta.set(m, a, m - a, Scalar(1));
  }
  Vector eps(d);
  eps[0] = Scalar(1);
  Coalgebra c("monoid+(" + std::to_string(n) + ")", std::move(basis), std::move(delta),
              std::move(eps));
  Origin o;
  o.kind = Origin::Kind::monoid_additive;
  o.n = n;
  c.set_origin(std::move(o));
  return c;
}

/// Truncation d_1..d_n of the multiplicative monoid coalgebra:
/// Delta(d_m) = sum_{ab=m} d_a (x) d_b, eps(d_m) = [m = 1]. The index set is
/// divisor-closed, so this is a subcoalgebra.
inline Coalgebra fd_monoid_multiplicative(std::size_t n) {
  if (n == 0) throw Error("multiplicative monoid truncation needs n >= 1");
  std::vector<std::string> basis;
  for (std::size_t m = 1; m <= n; ++m) basis.push_back("d" + std::to_string(m));
  Tensor3 delta(n, n, n);
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t a = 1; a <= m; ++a) {
      if (m % a == 0) delta.set(m - 1, a - 1, m / a - 1, Scalar(1));
    }
  }
  Vector eps(n);
  eps[0] = Scalar(1);
  Coalgebra c("monoidx(" + std::to_string(n) + ")", std::move(basis), std::move(delta),
              std::move(eps));
  Origin o;
  o.kind = Origin::Kind::monoid_multiplicative;
  o.n = n;
  c.set_origin(std::move(o));
  return c;
}

/// Decomposition coalgebra of a finite category: Delta(m) = sum_{a∘b=m} a (x) b.
inline Coalgebra fd_category(const CategoryData& cat, std::string name = "category") {
  cat.check();
  const std::size_t d = cat.morphisms.size();
  std::vector<std::string> basis;
  for (const auto& m : cat.morphisms) basis.push_back(m.name);
  Tensor3 delta(d, d, d);
  for (const auto& [key, value] : cat.compose) {
    delta.add_to(cat.index_of(value), cat.index_of(key.first), cat.index_of(key.second),
                 Scalar(1));
  }
  Vector eps(d);
  for (const auto& o : cat.objects) eps[*cat.identity_of(o)] = Scalar(1);
  Coalgebra c(std::move(name), std::move(basis), std::move(delta), std::move(eps));
  Origin o;
  o.kind = Origin::Kind::category;
  o.category = std::make_shared<CategoryData>(cat);
  c.set_origin(std::move(o));
  return c;
}

/// Co-opposite: delta[k][i][j] -> delta[k][j][i].
inline Coalgebra opposite(const Coalgebra& c) {
  Tensor3 delta(c.delta().dims());
  for (const auto& [idx, v] : c.delta().entries()) delta.set(idx[0], idx[2], idx[1], v);
  std::string name = c.name();
  if (name.size() > 3 && name.compare(name.size() - 3, 3, "^op") == 0) {
    name.resize(name.size() - 3);
  } else {
    name += "^op";
  }
  Coalgebra out(std::move(name), c.basis(), std::move(delta), c.eps());
  if (c.star()) out.set_star(*c.star());
  if (c.origin().kind == Origin::Kind::opposite) {
    out.set_origin(c.origin().parts.front()->origin());
  } else {
    Origin o;
    o.kind = Origin::Kind::opposite;
    o.parts.push_back(std::make_shared<Coalgebra>(c));
    out.set_origin(std::move(o));
  }
  return out;
}

/// Tensor product; basis element (a, b) has index a * dim(c2) + b.
inline Coalgebra tensor(const Coalgebra& c1, const Coalgebra& c2) {
  const std::size_t d1 = c1.dim();
  const std::size_t d2 = c2.dim();
  std::vector<std::string> basis;
  for (const auto& a : c1.basis()) {
    for (const auto& b : c2.basis()) basis.push_back("(" + a + "," + b + ")");
  }
  const std::size_t d = d1 * d2;
  Tensor3 delta(d, d, d);
  for (const auto& [x, u] : c1.delta().entries()) {
    for (const auto& [y, v] : c2.delta().entries()) {
      delta.set(x[0] * d2 + y[0], x[1] * d2 + y[1], x[2] * d2 + y[2], u * v);
    }
  }
  Vector eps(d);
  for (std::size_t a = 0; a < d1; ++a) {
    for (std::size_t b = 0; b < d2; ++b) eps[a * d2 + b] = c1.eps()[a] * c2.eps()[b];
  }
  Coalgebra out(c1.name() + "⊗" + c2.name(), std::move(basis), std::move(delta), std::move(eps));
  if (c1.star() && c2.star()) {
    std::vector<std::size_t> p(d);
    for (std::size_t a = 0; a < d1; ++a) {
      for (std::size_t b = 0; b < d2; ++b) p[a * d2 + b] = (*c1.star())[a] * d2 + (*c2.star())[b];
    }
    out.set_star(std::move(p));
  }
  Origin o;
  o.kind = Origin::Kind::tensor;
  o.parts = {std::make_shared<Coalgebra>(c1), std::make_shared<Coalgebra>(c2)};
  out.set_origin(std::move(o));
  return out;
}

/// Apply Delta to an element given in coordinates; result indexed i*dim + j.
inline Vector comultiply(const Coalgebra& c, const Vector& x) {
  if (x.size() != c.dim()) throw DimensionError("element length does not match the coalgebra");
  return c.delta_matrix().apply(x);
}

inline Scalar counit(const Coalgebra& c, const Vector& x) {
  if (x.size() != c.dim()) throw DimensionError("element length does not match the coalgebra");
  Scalar s;
  for (std::size_t k = 0; k < x.size(); ++k) s += c.eps()[k] * x[k];
  return s;
}

/// Elementwise star: (sum a_k c_k)* = sum conj(a_k) c_{p(k)}.
inline Vector star_element(const Coalgebra& c, const Vector& x) {
  if (!c.star()) throw Error("coalgebra " + c.name() + " carries no star structure");
  Vector out(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) out[(*c.star())[k]] = x[k].conj();
  return out;
}

}  // namespace qcomb
