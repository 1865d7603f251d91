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
 * @file qbool.hpp
 * @brief Representable quantum Boolean algebras.
 *
 * Every axiom is an equality of linear maps out of a tensor power of B,
 * assembled from the structure maps in the order the axiom diagrams
 * prescribe. A failure is reported with the first basis tuple (in
 * lexicographic order) where the two sides differ.
 */

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcomb/elements.hpp"

namespace qcomb {

struct QBoolStructure {
  CoalgebraPtr B;
  Matrix bot;   // dim x 1
  Matrix top;   // dim x 1
  Matrix meet;  // dim x dim^2
  Matrix join;  // dim x dim^2
  std::optional<Matrix> neg;  // dim x dim, a coalgebra map B -> B^op
};

struct AxiomResult {
  std::string name;
  bool ok = true;
  /// Basis labels of the first failing tuple.
  std::vector<std::string> witness;
};

struct QBoolReport {
  std::vector<AxiomResult> axioms;
  bool ok() const {
    for (const auto& a : axioms) {
      if (!a.ok) return false;
    }
    return true;
  }
};

namespace detail {

inline AxiomResult compare_maps(const std::string& name, const Matrix& lhs, const Matrix& rhs,
                                const Coalgebra& b, std::size_t arity) {
  AxiomResult r{name, true, {}};
  const Matrix diff = (lhs - rhs).transpose();
  for (std::size_t col = 0; col < diff.rows(); ++col) {
    if (diff.row(col).empty()) continue;
    r.ok = false;
    std::vector<std::string> tuple(arity);
    std::size_t rest = col;
    for (std::size_t a = arity; a-- > 0;) {
      tuple[a] = b.basis()[rest % b.dim()];
      rest /= b.dim();
    }
    r.witness = std::move(tuple);
    break;
  }
  return r;
}

}  // namespace detail

/// Structural invariants: the structure maps are coalgebra maps of the right
/// shapes; neg, when present, is an involutive coalgebra map into B^op.
inline AxiomResult check_structure(const QBoolStructure& q) {
  const Coalgebra& b = *q.B;
  const Coalgebra bb = tensor(b, b);
  const Coalgebra one = singleton();
  auto check = [&](const char* what, const Matrix& m, const Coalgebra& src,
                   const Coalgebra& dst) -> std::optional<AxiomResult> {
    if (m.rows() != dst.dim() || m.cols() != src.dim()) {
      throw DimensionError(std::string(what) + " has shape " + m.shape_str());
    }
    const auto c = is_coalgebra_map(m, src, dst);
    if (!c.ok) return AxiomResult{"structure", false, {what, src.basis()[c.element]}};
    return std::nullopt;
  };
  if (auto r = check("bot", q.bot, one, b)) return *r;
  if (auto r = check("top", q.top, one, b)) return *r;
  if (auto r = check("meet", q.meet, bb, b)) return *r;
  if (auto r = check("join", q.join, bb, b)) return *r;
  if (q.neg) {
    if (auto r = check("neg", *q.neg, b, opposite(b))) return *r;
    if (*q.neg * *q.neg != Matrix::identity(b.dim())) {
      return {"structure", false, {"neg", "not involutive"}};
    }
  }
  return {"structure", true, {}};
}

/// The ten lattice diagrams: associativity, identity, commutativity,
/// absorption and distributivity, each for meet and join.
inline QBoolReport check_lattice_axioms(const QBoolStructure& q) {
  const Coalgebra& b = *q.B;
  const std::size_t d = b.dim();
  const Matrix id = Matrix::identity(d);
  const Matrix delta = b.delta_matrix();
  const Matrix tau = flip(d, d);
  const Matrix& m = q.meet;
  const Matrix& j = q.join;
  QBoolReport r;
  auto add = [&](const std::string& name, const Matrix& lhs, const Matrix& rhs, std::size_t arity) {
    r.axioms.push_back(detail::compare_maps(name, lhs, rhs, b, arity));
  };
  add("associativity(meet)", m * kron(m, id), m * kron(id, m), 3);
  add("associativity(join)", j * kron(j, id), j * kron(id, j), 3);
  add("identity(meet)", m * kron(id, q.top), id, 1);
  add("identity(join)", j * kron(id, q.bot), id, 1);
  add("commutativity(meet)", m * tau, m, 2);
  add("commutativity(join)", j * tau, j, 2);
  const Matrix drop = kron(id, b.eps_matrix());
  const Matrix dup = kron(delta, id);
  add("absorption(meet)", m * kron(id, j) * dup, drop, 2);
  add("absorption(join)", j * kron(id, m) * dup, drop, 2);
  const Matrix spread = kron(kron(id, tau), id) * kron(delta, Matrix::identity(d * d));
  add("distributivity(join over meet)", j * kron(id, m), m * kron(j, j) * spread, 3);
  add("distributivity(meet over join)", m * kron(id, j), j * kron(m, m) * spread, 3);
  return r;
}

/// The four complement identities, plus the anti-coalgebra, counit and
/// involution properties of neg, checked separately as linear identities.
inline QBoolReport check_complement(const QBoolStructure& q) {
  if (!q.neg) throw Error("complement check needs a negation");
  const Coalgebra& b = *q.B;
  const std::size_t d = b.dim();
  const Matrix id = Matrix::identity(d);
  const Matrix delta = b.delta_matrix();
  const Matrix& n = *q.neg;
  const Matrix top_eps = q.top * b.eps_matrix();
  const Matrix bot_eps = q.bot * b.eps_matrix();
  QBoolReport r;
  auto add = [&](const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    r.axioms.push_back(detail::compare_maps(name, lhs, rhs, b, 1));
  };
  add("complement(not b1 or b2)", q.join * kron(n, id) * delta, top_eps);
  add("complement(not b1 and b2)", q.meet * kron(n, id) * delta, bot_eps);
  add("complement(b1 or not b2)", q.join * kron(id, n) * delta, top_eps);
  add("complement(b1 and not b2)", q.meet * kron(id, n) * delta, bot_eps);
  r.axioms.push_back(
      detail::compare_maps("neg anti-coalgebra", flip(d, d) * delta * n, kron(n, n) * delta, b, 1));
  r.axioms.push_back(detail::compare_maps("neg counit", b.eps_matrix() * n, b.eps_matrix(), b, 1));
  r.axioms.push_back(detail::compare_maps("neg involution", n * n, id, b, 1));
  return r;
}

/// (b1 o1 b'1) o0 (not b2 o2 not b'2) compared with eps(b) eps(b') times a constant.
inline QBoolReport check_weak_de_morgan(const QBoolStructure& q) {
  if (!q.neg) throw Error("weak de Morgan check needs a negation");
  const Coalgebra& b = *q.B;
  const std::size_t d = b.dim();
  const Matrix id = Matrix::identity(d);
  const Matrix delta = b.delta_matrix();
  const Matrix& n = *q.neg;
  const Matrix split =
      kron(kron(id, flip(d, d)), id) * kron(delta, delta);  // b (x) b' -> b1 b'1 b2 b'2
  const Matrix eps2 = kron(b.eps_matrix(), b.eps_matrix());
  const Matrix nn = kron(n, n);
  QBoolReport r;
  auto law = [&](const std::string& name, const Matrix& outer, const Matrix& left,
                 const Matrix& right, const Matrix& constant) {
    const Matrix lhs = outer * kron(left, right * nn) * split;
    r.axioms.push_back(detail::compare_maps(name, lhs, constant * eps2, b, 2));
  };
  law("de Morgan 1 (join form)", q.join, q.join, q.meet, q.top);
  law("de Morgan 1 (meet form)", q.meet, q.join, q.meet, q.bot);
  law("de Morgan 2 (meet form)", q.meet, q.meet, q.join, q.bot);
  law("de Morgan 2 (join form)", q.join, q.meet, q.join, q.top);
  return r;
}

struct UniquenessVerdict {
  enum class Outcome { equal, not_a_negation, uniqueness_violated };
  Outcome outcome = Outcome::equal;
  std::string detail;
};

inline const char* outcome_name(UniquenessVerdict::Outcome o) {
  switch (o) {
    case UniquenessVerdict::Outcome::equal:
      return "equal";
    case UniquenessVerdict::Outcome::not_a_negation:
      return "not a negation";
    case UniquenessVerdict::Outcome::uniqueness_violated:
      return "uniqueness violated";
  }
  return "?";
}

namespace detail {

// Probe one candidate, assuming the lattice part of q is already verified.
inline UniquenessVerdict probe_candidate(const QBoolStructure& q, const Matrix& candidate) {
  const Coalgebra& b = *q.B;
  if (candidate.rows() != b.dim() || candidate.cols() != b.dim()) {
    throw DimensionError("candidate negation has shape " + candidate.shape_str());
  }
  const auto map = is_coalgebra_map(candidate, b, opposite(b));
  if (!map.ok) {
    return {UniquenessVerdict::Outcome::not_a_negation,
            "not a coalgebra map into B^op at " + b.basis()[map.element]};
  }
  if (candidate * candidate != Matrix::identity(b.dim())) {
    return {UniquenessVerdict::Outcome::not_a_negation, "not involutive"};
  }
  QBoolStructure alt = q;
  alt.neg = candidate;
  for (const auto& a : check_complement(alt).axioms) {
    if (!a.ok) {
      return {UniquenessVerdict::Outcome::not_a_negation,
              a.name + " at " + (a.witness.empty() ? "" : a.witness.front())};
    }
  }
  if (candidate == *q.neg) return {UniquenessVerdict::Outcome::equal, ""};
  return {UniquenessVerdict::Outcome::uniqueness_violated, "candidate differs from neg"};
}

inline void require_probe_preconditions(const QBoolStructure& q) {
  if (!q.neg) throw Error("uniqueness probe needs a reference negation");
  QBoolStructure lattice = q;
  lattice.neg.reset();
  if (!check_structure(lattice).ok || !check_lattice_axioms(q).ok()) {
    throw Error("uniqueness probe needs a verified lattice");
  }
}

}  // namespace detail

/// Compare a candidate negation with q.neg. A candidate failing the structural
/// invariants or the complement axiom is "not a negation".
inline UniquenessVerdict negation_uniqueness_probe(const QBoolStructure& q,
                                                   const Matrix& candidate) {
  detail::require_probe_preconditions(q);
  return detail::probe_candidate(q, candidate);
}

/// Probe many candidates against one verified lattice.
inline std::vector<UniquenessVerdict> negation_uniqueness_sweep(
    const QBoolStructure& q, const std::vector<Matrix>& candidates) {
  detail::require_probe_preconditions(q);
  std::vector<UniquenessVerdict> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(detail::probe_candidate(q, c));
  return out;
}

/// Classical operation tables of a finite bounded lattice, optionally with a
/// negation.
struct BooleanTables {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> meet;
  std::vector<std::vector<std::string>> join;
  std::optional<std::vector<std::string>> neg;
  std::string bot;
  std::string top;
};

namespace detail {

struct IndexedTables {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> meet, join;
  std::optional<std::vector<std::size_t>> neg;
  std::size_t bot = 0, top = 0;
};

inline IndexedTables index_tables(const BooleanTables& t) {
  IndexedTables out;
  out.n = t.elements.size();
  std::map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < out.n; ++k) {
    if (!pos.emplace(t.elements[k], k).second) throw Error("boolean: duplicate element " + t.elements[k]);
  }
  auto find = [&](const std::string& s) {
    auto it = pos.find(s);
    if (it == pos.end()) throw Error("boolean: unknown element '" + s + "'");
    return it->second;
  };
  auto table = [&](const std::vector<std::vector<std::string>>& src, const char* what) {
    if (src.size() != out.n) throw Error(std::string("boolean: ") + what + " table has wrong size");
    std::vector<std::vector<std::size_t>> m(out.n, std::vector<std::size_t>(out.n));
    for (std::size_t a = 0; a < out.n; ++a) {
      if (src[a].size() != out.n) throw Error(std::string("boolean: ") + what + " row has wrong size");
      for (std::size_t b = 0; b < out.n; ++b) m[a][b] = find(src[a][b]);
    }
    return m;
  };
  out.meet = table(t.meet, "meet");
  out.join = table(t.join, "join");
  out.bot = find(t.bot);
  out.top = find(t.top);
  if (t.neg) {
    if (t.neg->size() != out.n) throw Error("boolean: neg table has wrong size");
    std::vector<std::size_t> n;
    for (const auto& s : *t.neg) n.push_back(find(s));
    out.neg = std::move(n);
  }
  return out;
}

inline std::string classical_lattice_failure(const IndexedTables& t) {
  const auto& M = t.meet;
  const auto& J = t.join;
  for (std::size_t a = 0; a < t.n; ++a) {
    if (M[a][t.top] != a) return "top is not a meet identity";
    if (J[a][t.bot] != a) return "bot is not a join identity";
    for (std::size_t b = 0; b < t.n; ++b) {
      if (M[a][b] != M[b][a] || J[a][b] != J[b][a]) return "operations are not commutative";
      if (M[a][J[a][b]] != a || J[a][M[a][b]] != a) return "absorption fails";
      for (std::size_t c = 0; c < t.n; ++c) {
        if (M[M[a][b]][c] != M[a][M[b][c]] || J[J[a][b]][c] != J[a][J[b][c]]) {
          return "operations are not associative";
        }
        if (J[a][M[b][c]] != M[J[a][b]][J[a][c]] || M[a][J[b][c]] != J[M[a][b]][M[a][c]]) {
          return "distributivity fails";
        }
      }
    }
  }
  if (t.neg) {
    for (std::size_t a = 0; a < t.n; ++a) {
      const std::size_t na = (*t.neg)[a];
      if ((*t.neg)[na] != a) return "neg is not involutive";
      if (J[a][na] != t.top || M[a][na] != t.bot) return "neg is not a complement";
    }
  }
  return "";
}

}  // namespace detail

/// Does every element of the classical lattice have a complement?
inline bool classically_complemented(const BooleanTables& tables) {
  const auto t = detail::index_tables(tables);
  for (std::size_t a = 0; a < t.n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < t.n && !found; ++b) {
      found = t.join[a][b] == t.top && t.meet[a][b] == t.bot;
    }
    if (!found) return false;
  }
  return true;
}

/// Linear extension of classical tables. Rejects tables that fail the
/// classical axioms (including the complement law when neg is given).
inline QBoolStructure linearize_boolean(const BooleanTables& tables) {
  const auto t = detail::index_tables(tables);
  const auto failure = detail::classical_lattice_failure(t);
  if (!failure.empty()) throw Error("boolean tables rejected: " + failure);
  QBoolStructure q;
  q.B = share(linearize(tables.elements, "kB"));
  const std::size_t n = t.n;
  q.bot = Matrix(n, 1);
  q.bot.set(t.bot, 0, Scalar(1));
  q.top = Matrix(n, 1);
  q.top.set(t.top, 0, Scalar(1));
  q.meet = Matrix(n, n * n);
  q.join = Matrix(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      q.meet.set(t.meet[a][b], a * n + b, Scalar(1));
      q.join.set(t.join[a][b], a * n + b, Scalar(1));
    }
  }
  if (t.neg) {
    Matrix neg(n, n);
    for (std::size_t a = 0; a < n; ++a) neg.set((*t.neg)[a], a, Scalar(1));
    q.neg = std::move(neg);
  }
  return q;
}

/// The Boolean algebra of subsets of {1..atoms}; elements are labeled "{}", "{1}", "{1,2}", ...
inline BooleanTables powerset_algebra(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  auto label = [&](std::size_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t a = 0; a < atoms; ++a) {
      if (mask & (std::size_t{1} << a)) {
        s += (first ? "" : ",") + std::to_string(a + 1);
        first = false;
      }
    }
    return s + "}";
  };
  BooleanTables t;
  for (std::size_t m = 0; m < n; ++m) t.elements.push_back(label(m));
  t.meet.assign(n, std::vector<std::string>(n));
  t.join.assign(n, std::vector<std::string>(n));
  std::vector<std::string> neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = label((n - 1) & ~a);
    for (std::size_t b = 0; b < n; ++b) {
      t.meet[a][b] = label(a & b);
      t.join[a][b] = label(a | b);
    }
  }
  t.neg = std::move(neg);
  t.bot = label(0);
  t.top = label(n - 1);
  return t;
}

/// The chain 0 < 1 < ... < n-1 as a bounded distributive lattice, no negation.
inline BooleanTables chain_lattice(std::size_t n) {
  BooleanTables t;
  for (std::size_t a = 0; a < n; ++a) t.elements.push_back(std::to_string(a));
  t.meet.assign(n, std::vector<std::string>(n));
  t.join.assign(n, std::vector<std::string>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.meet[a][b] = std::to_string(std::min(a, b));
      t.join[a][b] = std::to_string(std::max(a, b));
    }
  }
  t.bot = "0";
  t.top = std::to_string(n - 1);
  return t;
}

/// All involutive permutations of {0..n-1}, as permutation matrices.
inline std::vector<Matrix> involutive_permutations(std::size_t n) {
  std::vector<Matrix> out;
  std::vector<std::size_t> perm(n, n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    while (k < n && perm[k] != n) ++k;
    if (k == n) {
      Matrix m(n, n);
      for (std::size_t a = 0; a < n; ++a) m.set(perm[a], a, Scalar(1));
      out.push_back(std::move(m));
      return;
    }
    perm[k] = k;
    rec(k + 1);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (perm[j] != n) continue;
      perm[k] = j;
      perm[j] = k;
      rec(k + 1);
      perm[j] = n;
    }
    perm[k] = n;
  };
  rec(0);
  return out;
}

}  // namespace qcomb
