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
 * @file leavitt.hpp
 * @brief Leavitt path algebras by normal-form rewriting, and stable
 * representations of quivers.
 *
 * Conventions: an edge e runs from s(e) to t(e), and
 *
 *   p^e  = 1_{t(e)} p^e 1_{s(e)},     p*_e = 1_{s(e)} p*_e 1_{t(e)},
 *   p*_e p^f = [e = f] 1_{s(e)},      1_v = sum_{t(e) = v} p^e p*_e.
 *
 * The vertex relation is imposed at every vertex with a nonempty incoming
 * fiber (standard mode) or at every vertex (absolute mode, where a vertex
 * with empty fiber becomes 0). With these conventions the algebra is the
 * usual Leavitt path algebra of the opposite quiver.
 *
 * Normal-form monomials are words alpha beta* = p^{e1}..p^{ek} p*_{fl}..p*_{f1}
 * that contain no p^g p*_g for the special edge g of t(g), the
 * lexicographically smallest label among the edges into t(g).
 */

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/quiver.hpp"

namespace qcomb {

enum class LpaMode { standard, absolute };

inline const char* mode_name(LpaMode m) { return m == LpaMode::standard ? "standard" : "absolute"; }

inline LpaMode parse_mode(const std::string& s) {
  if (s == "standard") return LpaMode::standard;
  if (s == "absolute") return LpaMode::absolute;
  throw Error("unknown mode '" + s + "' (expected standard or absolute)");
}

struct Letter {
  enum class Kind { vertex, edge, ghost };
  Kind kind;
  std::size_t index;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// A linear combination of words; after normalization every word is a
/// normal-form monomial.
using LpaElement = std::map<Word, Scalar>;

/// Which rewrite site to fire first.
struct Strategy {
  enum class Kind { leftmost, rightmost, random };
  Kind kind = Kind::leftmost;
  std::uint64_t seed = 0;
  static Strategy leftmost() { return {Kind::leftmost, 0}; }
  static Strategy rightmost() { return {Kind::rightmost, 0}; }
  static Strategy random(std::uint64_t seed) { return {Kind::random, seed}; }
};

class Leavitt {
 public:
  Leavitt(ClassicalQuiver q, LpaMode mode) : q_(std::move(q)), mode_(mode) {
    q_.check();
    const std::size_t nv = q_.vertices.size();
    const std::size_t ne = q_.edges.size();
    src_.resize(ne);
    tgt_.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) {
      src_[e] = q_.s(e);
      tgt_[e] = q_.t(e);
    }
    dead_vertex_.assign(nv, false);
    if (mode_ == LpaMode::absolute) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t v = 0; v < nv; ++v) {
          if (dead_vertex_[v]) continue;
          bool all_dead = true;
          for (std::size_t e = 0; e < ne; ++e) {
            if (tgt_[e] == v && !dead_vertex_[src_[e]]) all_dead = false;
          }
          if (all_dead) dead_vertex_[v] = changed = true;
        }
        for (std::size_t e = 0; e < ne; ++e) {
          if (dead_vertex_[tgt_[e]] && !dead_vertex_[src_[e]]) {
            dead_vertex_[src_[e]] = changed = true;
          }
        }
      }
    }
    special_.assign(nv, std::nullopt);
    for (std::size_t v = 0; v < nv; ++v) {
      if (dead_vertex_[v]) continue;
      for (std::size_t e = 0; e < ne; ++e) {
        if (tgt_[e] != v || dead_edge(e)) continue;
        if (!special_[v] || q_.edges[e].name < q_.edges[*special_[v]].name) special_[v] = e;
      }
    }
  }

  const ClassicalQuiver& quiver() const { return q_; }
  LpaMode mode() const { return mode_; }
  std::size_t s(std::size_t e) const { return src_[e]; }
  std::size_t t(std::size_t e) const { return tgt_[e]; }
  bool dead_vertex(std::size_t v) const { return dead_vertex_[v]; }
  bool dead_edge(std::size_t e) const { return dead_vertex_[src_[e]] || dead_vertex_[tgt_[e]]; }

  /// The special edge of v, if the vertex relation is imposed at v.
  std::optional<std::size_t> special(std::size_t v) const { return special_[v]; }

  bool ck2_vertex(std::size_t v) const { return special_[v].has_value(); }

  /// Left and right vertex of a letter: letter = 1_left letter 1_right.
  std::size_t left(const Letter& x) const {
    switch (x.kind) {
      case Letter::Kind::vertex: return x.index;
      case Letter::Kind::edge: return tgt_[x.index];
      case Letter::Kind::ghost: return src_[x.index];
    }
    return 0;
  }
  std::size_t right(const Letter& x) const {
    switch (x.kind) {
      case Letter::Kind::vertex: return x.index;
      case Letter::Kind::edge: return src_[x.index];
      case Letter::Kind::ghost: return tgt_[x.index];
    }
    return 0;
  }

  bool dead(const Letter& x) const {
    return x.kind == Letter::Kind::vertex ? dead_vertex_[x.index] : dead_edge(x.index);
  }

  // -- rewriting ------------------------------------------------------------

  /// Is there a rule at position i (a single dead letter) or at the pair (i, i+1)?
  bool reducible_at(const Word& w, std::size_t i) const {
    if (dead(w[i])) return true;
    if (i + 1 >= w.size()) return false;
    const Letter& x = w[i];
    const Letter& y = w[i + 1];
    if (right(x) != left(y)) return true;  // vanishing juxtaposition
    if (x.kind == Letter::Kind::vertex || y.kind == Letter::Kind::vertex) return true;
    if (x.kind == Letter::Kind::ghost && y.kind == Letter::Kind::edge) return true;
    if (x.kind == Letter::Kind::edge && y.kind == Letter::Kind::ghost && x.index == y.index) {
      return special_[tgt_[x.index]] == x.index;
    }
    return false;
  }

  /// Apply the rule at site i; returns the replacement terms.
  std::vector<std::pair<Word, Scalar>> rewrite(const Word& w, std::size_t i) const {
    auto splice = [&](std::size_t from, std::size_t to, const Word& mid) {
      Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(from));
      out.insert(out.end(), mid.begin(), mid.end());
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(to), w.end());
      return out;
    };
    if (dead(w[i])) return {};
    const Letter& x = w[i];
    const Letter& y = w[i + 1];
    if (right(x) != left(y)) return {};
    if (x.kind == Letter::Kind::vertex) return {{splice(i, i + 2, {y}), Scalar(1)}};
    if (y.kind == Letter::Kind::vertex) return {{splice(i, i + 2, {x}), Scalar(1)}};
    if (x.kind == Letter::Kind::ghost && y.kind == Letter::Kind::edge) {
      if (x.index != y.index) return {};
      const Letter v{Letter::Kind::vertex, src_[x.index]};
      return {{splice(i, i + 2, {v}), Scalar(1)}};
    }
    // special-edge vertex relation: p^g p*_g = 1_v - sum_{e != g} p^e p*_e
    const std::size_t v = tgt_[x.index];
    std::vector<std::pair<Word, Scalar>> out;
    out.push_back({splice(i, i + 2, {Letter{Letter::Kind::vertex, v}}), Scalar(1)});
    for (std::size_t e = 0; e < q_.edges.size(); ++e) {
      if (tgt_[e] != v || e == x.index || dead_edge(e)) continue;
      out.push_back({splice(i, i + 2, {Letter{Letter::Kind::edge, e}, Letter{Letter::Kind::ghost, e}}),
                     Scalar(-1)});
    }
    return out;
  }

  /// Normalize a linear combination of raw words under the given strategy.
  LpaElement normalize(const LpaElement& raw, Strategy strategy = Strategy::leftmost()) const {
    std::mt19937_64 rng(strategy.seed);
    LpaElement done;
    std::vector<std::pair<Word, Scalar>> work(raw.begin(), raw.end());
    while (!work.empty()) {
      auto [w, c] = std::move(work.back());
      work.pop_back();
      if (c.is_zero()) continue;
      if (w.empty()) throw Error("empty word");
      std::vector<std::size_t> sites;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (reducible_at(w, i)) sites.push_back(i);
      }
      if (sites.empty()) {
        add_term(done, w, c);
        continue;
      }
      std::size_t site = sites.front();
      if (strategy.kind == Strategy::Kind::rightmost) {
        site = sites.back();
      } else if (strategy.kind == Strategy::Kind::random) {
        site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
      }
      for (auto& [nw, nc] : rewrite(w, site)) work.emplace_back(std::move(nw), c * nc);
      if (strategy.kind == Strategy::Kind::random) {
        // shuffle the pending terms as well, so the processing order varies too
        std::shuffle(work.begin(), work.end(), rng);
      }
    }
    return done;
  }

  LpaElement normalize(const Word& w, Strategy strategy = Strategy::leftmost()) const {
    return normalize(LpaElement{{w, Scalar(1)}}, strategy);
  }

  LpaElement mul(const LpaElement& x, const LpaElement& y) const {
    LpaElement raw;
    for (const auto& [a, ca] : x) {
      for (const auto& [b, cb] : y) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        add_term(raw, w, ca * cb);
      }
    }
    return normalize(raw);
  }

  /// Sum of the (live) vertex idempotents: the unit of the algebra.
  LpaElement unit() const {
    LpaElement u;
    for (std::size_t v = 0; v < q_.vertices.size(); ++v) {
      if (!dead_vertex_[v]) u[{Letter{Letter::Kind::vertex, v}}] = Scalar(1);
    }
    return u;
  }

  bool is_normal_monomial(const Word& w) const {
    if (w.empty()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (reducible_at(w, i)) return false;
    }
    return true;
  }

  /// Generators: live vertices, edges and ghost edges.
  std::vector<Word> generators() const {
    std::vector<Word> out;
    for (std::size_t v = 0; v < q_.vertices.size(); ++v) {
      if (!dead_vertex_[v]) out.push_back({Letter{Letter::Kind::vertex, v}});
    }
    for (std::size_t e = 0; e < q_.edges.size(); ++e) {
      if (dead_edge(e)) continue;
      out.push_back({Letter{Letter::Kind::edge, e}});
      out.push_back({Letter{Letter::Kind::ghost, e}});
    }
    return out;
  }

  // -- text -------------------------------------------------------------------

  /// "alpha ; beta*" with dot-separated labels; an empty side is "v(x)".
  std::string monomial_str(const Word& w) const {
    if (w.size() == 1 && w[0].kind == Letter::Kind::vertex) {
      const auto& v = q_.vertices[w[0].index];
      return "v(" + v + ") ; v(" + v + ")*";
    }
    std::vector<std::string> alpha, beta;
    for (const auto& x : w) {
      if (x.kind == Letter::Kind::edge) alpha.push_back(q_.edges[x.index].name);
      if (x.kind == Letter::Kind::ghost) beta.insert(beta.begin(), q_.edges[x.index].name);
    }
    auto join = [](const std::vector<std::string>& parts) {
      std::string s;
      for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "." : "") + parts[k];
      return s;
    };
    // The meeting vertex sits between the last edge and the first ghost.
    const std::size_t meet = alpha.empty() ? left(w.front()) : right(w[alpha.size() - 1]);
    const std::string vtx = "v(" + q_.vertices[meet] + ")";
    return (alpha.empty() ? vtx : join(alpha)) + " ; " + (beta.empty() ? vtx : join(beta)) + "*";
  }

  std::string str(const LpaElement& x) const {
    std::vector<std::pair<std::string, std::string>> terms;
    for (const auto& [w, c] : x) {
      if (c.is_zero()) continue;
      std::string coef = c.is_real() ? c.str() : "(" + c.str() + ")";
      terms.emplace_back(monomial_str(w), coef);
    }
    if (terms.empty()) return "0";
    std::sort(terms.begin(), terms.end());
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      out += (k ? " + " : "") + terms[k].second + " * " + terms[k].first;
    }
    return out;
  }

  std::string word_str(const Word& w) const {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += " ";
      const auto& x = w[k];
      if (x.kind == Letter::Kind::vertex) out += "v(" + q_.vertices[x.index] + ")";
      if (x.kind == Letter::Kind::edge) out += q_.edges[x.index].name;
      if (x.kind == Letter::Kind::ghost) out += q_.edges[x.index].name + "*";
    }
    return out;
  }

  /// Parse a raw word "v(x) e f* ..." (space-separated letters).
  Word parse_word(const std::string& text) const {
    std::istringstream in(text);
    std::string tok;
    Word w;
    while (in >> tok) w.push_back(parse_letter(tok));
    if (w.empty()) throw ParseError("empty word");
    return w;
  }

  /// Parse "alpha ; beta*" back into a word.
  Word parse_monomial(const std::string& text) const {
    const auto semi = text.find(';');
    std::string a = trim(text.substr(0, semi));
    std::string b = trim(text.substr(semi + 1));
    if (b.empty() || b.back() != '*') throw ParseError("monomial '" + text + "' lacks the trailing *");
    b.pop_back();
    b = trim(b);
    auto side = [&](const std::string& s, bool ghost) -> std::pair<Word, std::optional<std::size_t>> {
      if (s.rfind("v(", 0) == 0) return {{}, parse_letter(s).index};
      Word w;
      std::size_t start = 0;
      while (start <= s.size()) {
        const auto dot = s.find('.', start);
        const std::string label = trim(s.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
        w.push_back({ghost ? Letter::Kind::ghost : Letter::Kind::edge, edge_of(label)});
        if (dot == std::string::npos) break;
        start = dot + 1;
      }
      return {w, std::nullopt};
    };
    auto [alpha, va] = side(a, false);
    auto [beta, vb] = side(b, true);
    std::reverse(beta.begin(), beta.end());
    if (alpha.empty() && beta.empty()) {
      if (*va != *vb) throw ParseError("monomial '" + text + "' names two different vertices");
      return {Letter{Letter::Kind::vertex, *va}};
    }
    Word w = alpha;
    w.insert(w.end(), beta.begin(), beta.end());
    if (va && *va != left(w.front())) throw ParseError("vertex does not match the path in '" + text + "'");
    if (vb && *vb != right(w.back())) throw ParseError("vertex does not match the path in '" + text + "'");
    return w;
  }

  /// Parse a sum of terms "coef * body"; a body with ';' is a monomial,
  /// otherwise a raw word. Coefficients default to 1; Gaussian coefficients
  /// are parenthesized. The result is normalized.
  LpaElement parse(const std::string& text) const {
    LpaElement raw;
    const std::string t = trim(text);
    if (t == "0") return raw;
    for (const auto& term : split_terms(t)) {
      std::string body = term;
      Scalar coef(1);
      const auto star = find_coef_separator(term);
      if (star != std::string::npos) {
        std::string c = trim(term.substr(0, star));
        if (!c.empty() && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
        coef = Scalar::parse(c);
        body = trim(term.substr(star + 3));
      }
      const Word w = body.find(';') != std::string::npos ? parse_monomial(body) : parse_word(body);
      add_term(raw, w, coef);
    }
    return normalize(raw);
  }

  static void add_term(LpaElement& x, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = x.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) x.erase(it);
    }
  }

 private:
  static std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
  }

  static std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '(') ++depth;
      if (s[k] == ')') --depth;
      if (depth == 0 && s.compare(k, 3, " + ") == 0) {
        out.push_back(trim(s.substr(start, k - start)));
        start = k + 3;
        k += 2;
      }
    }
    out.push_back(trim(s.substr(start)));
    for (const auto& t : out) {
      if (t.empty()) throw ParseError("empty term in '" + s + "'");
    }
    return out;
  }

  // Position of the " * " that separates a coefficient from the body.
  static std::size_t find_coef_separator(const std::string& term) {
    int depth = 0;
    for (std::size_t k = 0; k + 2 < term.size(); ++k) {
      if (term[k] == '(') ++depth;
      if (term[k] == ')') --depth;
      if (depth == 0 && term.compare(k, 3, " * ") == 0) return k;
    }
    return std::string::npos;
  }

  std::size_t edge_of(const std::string& label) const {
    for (std::size_t e = 0; e < q_.edges.size(); ++e) {
      if (q_.edges[e].name == label) return e;
    }
    throw ParseError("unknown edge label '" + label + "'");
  }

  Letter parse_letter(const std::string& tok) const {
    if (tok.size() > 3 && tok.rfind("v(", 0) == 0 && tok.back() == ')') {
      const std::string v = tok.substr(2, tok.size() - 3);
      for (std::size_t k = 0; k < q_.vertices.size(); ++k) {
        if (q_.vertices[k] == v) return {Letter::Kind::vertex, k};
      }
      throw ParseError("unknown vertex label '" + v + "'");
    }
    if (!tok.empty() && tok.back() == '*') {
      return {Letter::Kind::ghost, edge_of(tok.substr(0, tok.size() - 1))};
    }
    return {Letter::Kind::edge, edge_of(tok)};
  }

  ClassicalQuiver q_;
  LpaMode mode_;
  std::vector<std::size_t> src_, tgt_;
  std::vector<bool> dead_vertex_;
  std::vector<std::optional<std::size_t>> special_;
};

/// Brute-force closure of the normal-form basis under products, starting
/// from the generators. Stops (returning nullopt) past `limit` monomials.
inline std::optional<std::vector<Word>> closure_basis(const Leavitt& lpa, std::size_t limit = 4096) {
  std::set<Word> basis;
  std::vector<Word> frontier;
  for (const auto& g : lpa.generators()) {
    for (const auto& [w, c] : lpa.normalize(g)) {
      if (basis.insert(w).second) frontier.push_back(w);
    }
  }
  while (!frontier.empty()) {
    std::vector<Word> next;
    const std::vector<Word> current(basis.begin(), basis.end());
    for (const auto& a : frontier) {
      for (const auto& b : current) {
        for (const auto& order : {std::pair{&a, &b}, std::pair{&b, &a}}) {
          Word w = *order.first;
          w.insert(w.end(), order.second->begin(), order.second->end());
          for (const auto& [m, c] : lpa.normalize(w)) {
            if (basis.insert(m).second) next.push_back(m);
            if (basis.size() > limit) return std::nullopt;
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Word>(basis.begin(), basis.end());
}

/// Matrix of a word acting on the vertex-indexed space under the assignment
/// 1_v -> E_vv, p^e -> E_{t(e), s(e)}, p*_e -> E_{s(e), t(e)}.
inline Matrix matrix_unit_image(const Leavitt& lpa, const Word& w) {
  const std::size_t n = lpa.quiver().vertices.size();
  Matrix acc = Matrix::identity(n);
  for (const auto& x : w) {
    Matrix m(n, n);
    m.set(lpa.left(x), lpa.right(x), Scalar(1));
    acc = acc * m;
  }
  return acc;
}

inline Matrix matrix_unit_image(const Leavitt& lpa, const LpaElement& x) {
  const std::size_t n = lpa.quiver().vertices.size();
  Matrix acc(n, n);
  for (const auto& [w, c] : x) acc += c * matrix_unit_image(lpa, w);
  return acc;
}

/// Exponent of a normal-form monomial in the loop quiver: p^a -> a, (p*)^b -> -b.
inline long loop_degree(const Word& w) {
  long d = 0;
  for (const auto& x : w) {
    if (x.kind == Letter::Kind::edge) ++d;
    if (x.kind == Letter::Kind::ghost) --d;
  }
  return d;
}

/// One presented relation: lhs = rhs, both as linear combinations of raw words.
struct Relation {
  std::string kind;
  LpaElement lhs;
  LpaElement rhs;
};

/// The generator/relation presentation used by the rewriting system.
inline std::vector<Relation> cp_relation_audit(const Leavitt& lpa) {
  const auto& q = lpa.quiver();
  const std::size_t nv = q.vertices.size();
  const std::size_t ne = q.edges.size();
  using K = Letter::Kind;
  std::vector<Relation> out;
  auto word = [](std::initializer_list<Letter> l) { return LpaElement{{Word(l), Scalar(1)}}; };
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t w = 0; w < nv; ++w) {
      out.push_back({"vertex", word({{K::vertex, v}, {K::vertex, w}}),
                     v == w ? word({{K::vertex, v}}) : LpaElement{}});
    }
  }
  for (std::size_t e = 0; e < ne; ++e) {
    out.push_back({"edge", word({{K::vertex, lpa.t(e)}, {K::edge, e}}), word({{K::edge, e}})});
    out.push_back({"edge", word({{K::edge, e}, {K::vertex, lpa.s(e)}}), word({{K::edge, e}})});
    out.push_back({"ghost", word({{K::vertex, lpa.s(e)}, {K::ghost, e}}), word({{K::ghost, e}})});
    out.push_back({"ghost", word({{K::ghost, e}, {K::vertex, lpa.t(e)}}), word({{K::ghost, e}})});
  }
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t f = 0; f < ne; ++f) {
      out.push_back({"CK1", word({{K::ghost, e}, {K::edge, f}}),
                     e == f ? word({{K::vertex, lpa.s(e)}}) : LpaElement{}});
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const auto fiber = q.incoming(v);
    if (fiber.empty() && lpa.mode() == LpaMode::standard) continue;
    LpaElement rhs;
    for (auto e : fiber) rhs[{Letter{K::edge, e}, Letter{K::ghost, e}}] = Scalar(1);
    out.push_back({fiber.empty() ? "CK2 (empty fiber)" : "CK2", word({{K::vertex, v}}), rhs});
  }
  return out;
}

inline std::string relation_str(const Leavitt& lpa, const Relation& r) {
  auto side = [&](const LpaElement& x) {
    if (x.empty()) return std::string("0");
    std::string s;
    bool first = true;
    for (const auto& [w, c] : x) {
      s += (first ? "" : " + ") + (c.is_one() ? std::string() : c.str() + " * ") + lpa.word_str(w);
      first = false;
    }
    return s;
  };
  return r.kind + ": " + side(r.lhs) + " = " + side(r.rhs);
}

// -- stable representations ------------------------------------------------

/// Vertex spaces N_v with omega_v : N_v -> F_v and sigma_v : F_v -> N_v, where
/// F_v = sum over edges e with t(e) = v (edge-list order) of N_{s(e)}.
struct StableRep {
  ClassicalQuiver quiver;
  std::vector<std::size_t> dims;
  std::vector<Matrix> omega;
  std::vector<Matrix> sigma;
};

inline std::size_t fiber_dim(const StableRep& r, std::size_t v) {
  std::size_t d = 0;
  for (auto e : r.quiver.incoming(v)) d += r.dims[r.quiver.s(e)];
  return d;
}

struct StableCheck {
  struct Failure {
    std::string equation;
    std::string vertex;
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

inline void check_rep_shapes(const StableRep& r) {
  r.quiver.check();
  const std::size_t nv = r.quiver.vertices.size();
  if (r.dims.size() != nv || r.omega.size() != nv || r.sigma.size() != nv) {
    throw DimensionError("stable rep needs dims, omega and sigma for every vertex");
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t f = fiber_dim(r, v);
    if (r.omega[v].rows() != f || r.omega[v].cols() != r.dims[v]) {
      throw DimensionError("omega at " + r.quiver.vertices[v] + " has shape " +
                           r.omega[v].shape_str());
    }
    if (r.sigma[v].rows() != r.dims[v] || r.sigma[v].cols() != f) {
      throw DimensionError("sigma at " + r.quiver.vertices[v] + " has shape " +
                           r.sigma[v].shape_str());
    }
  }
}

/// sigma_v omega_v = Id where the vertex relation is imposed, and
/// omega_v sigma_v = Id on every fiber (the edge/ghost contraction, blockwise).
inline StableCheck stable_rep_check(const StableRep& r, LpaMode mode = LpaMode::standard) {
  check_rep_shapes(r);
  StableCheck out;
  for (std::size_t v = 0; v < r.quiver.vertices.size(); ++v) {
    const bool imposed = mode == LpaMode::absolute || !r.quiver.incoming(v).empty();
    if (imposed && r.sigma[v] * r.omega[v] != Matrix::identity(r.dims[v])) {
      out.failures.push_back({"sigma omega = id", r.quiver.vertices[v]});
    }
    const std::size_t f = fiber_dim(r, v);
    if (r.omega[v] * r.sigma[v] != Matrix::identity(f)) {
      out.failures.push_back({"omega sigma = id", r.quiver.vertices[v]});
    }
  }
  return out;
}

/// Right module over the Leavitt path algebra on N = sum_v N_v (vertex
/// blocks in order): one matrix per generator. A word x1..xk acts by
/// R(xk)...R(x1).
struct ModuleData {
  ClassicalQuiver quiver;
  std::vector<std::size_t> dims;
  std::vector<Matrix> vertex;
  std::vector<Matrix> edge;   // p^e : N_{t(e)} -> N_{s(e)}
  std::vector<Matrix> ghost;  // p*_e : N_{s(e)} -> N_{t(e)}
};

namespace detail {

inline std::vector<std::size_t> offsets(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  return off;
}

inline void place(Matrix& big, const Matrix& block, std::size_t r0, std::size_t c0) {
  block.for_each([&](std::size_t r, std::size_t c, const Scalar& x) { big.set(r0 + r, c0 + c, x); });
}

inline Matrix take(const Matrix& big, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  return big.row_block(r0, nr).col_block(c0, nc);
}

}  // namespace detail

inline ModuleData rep_to_module(const StableRep& r) {
  check_rep_shapes(r);
  const auto off = detail::offsets(r.dims);
  const std::size_t n = off.back();
  ModuleData m{r.quiver, r.dims, {}, {}, {}};
  for (std::size_t v = 0; v < r.dims.size(); ++v) {
    Matrix p(n, n);
    for (std::size_t k = off[v]; k < off[v + 1]; ++k) p.set(k, k, Scalar(1));
    m.vertex.push_back(std::move(p));
  }
  m.edge.assign(r.quiver.edges.size(), Matrix(n, n));
  m.ghost.assign(r.quiver.edges.size(), Matrix(n, n));
  for (std::size_t v = 0; v < r.dims.size(); ++v) {
    std::size_t row = 0;
    for (auto e : r.quiver.incoming(v)) {
      const std::size_t se = r.quiver.s(e);
      const std::size_t de = r.dims[se];
      detail::place(m.edge[e], r.omega[v].row_block(row, de), off[se], off[v]);
      detail::place(m.ghost[e], r.sigma[v].col_block(row, de), off[v], off[se]);
      row += de;
    }
  }
  return m;
}

inline StableRep module_to_rep(const ModuleData& m) {
  const auto off = detail::offsets(m.dims);
  StableRep r{m.quiver, m.dims, {}, {}};
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    std::vector<Matrix> om, sg;
    for (auto e : m.quiver.incoming(v)) {
      const std::size_t se = m.quiver.s(e);
      om.push_back(detail::take(m.edge[e], off[se], m.dims[se], off[v], m.dims[v]));
      sg.push_back(detail::take(m.ghost[e], off[v], m.dims[v], off[se], m.dims[se]));
    }
    r.omega.push_back(vconcat(om, m.dims[v]));
    r.sigma.push_back(hconcat(sg, m.dims[v]));
    if (om.empty()) {
      r.omega.back() = Matrix(0, m.dims[v]);
      r.sigma.back() = Matrix(m.dims[v], 0);
    }
  }
  return r;
}

inline Matrix action(const ModuleData& m, const Word& w) {
  const std::size_t n = detail::offsets(m.dims).back();
  Matrix acc = Matrix::identity(n);
  for (const auto& x : w) {
    const Matrix& g = x.kind == Letter::Kind::vertex ? m.vertex[x.index]
                      : x.kind == Letter::Kind::edge ? m.edge[x.index]
                                                     : m.ghost[x.index];
    acc = g * acc;
  }
  return acc;
}

inline Matrix action(const ModuleData& m, const LpaElement& x) {
  const std::size_t n = detail::offsets(m.dims).back();
  Matrix acc(n, n);
  for (const auto& [w, c] : x) acc += c * action(m, w);
  return acc;
}

struct ModuleCheck {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every audited relation, unitality, and agreement with the normal form on
/// all products of two generators.
inline ModuleCheck module_check(const ModuleData& m, const Leavitt& lpa) {
  ModuleCheck out;
  const std::size_t n = detail::offsets(m.dims).back();
  for (const auto& rel : cp_relation_audit(lpa)) {
    if (action(m, rel.lhs) != action(m, rel.rhs)) out.failures.push_back(relation_str(lpa, rel));
  }
  if (action(m, lpa.unit()) != Matrix::identity(n)) out.failures.push_back("unit does not act as 1");
  const auto gens = lpa.generators();
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      if (action(m, w) != action(m, lpa.normalize(w))) {
        out.failures.push_back("generator pair " + lpa.word_str(w));
      }
    }
  }
  return out;
}

inline bool same_rep(const StableRep& a, const StableRep& b) {
  return a.dims == b.dims && a.omega == b.omega && a.sigma == b.sigma;
}

}  // namespace qcomb
