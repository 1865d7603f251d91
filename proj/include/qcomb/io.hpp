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
 * @file io.hpp
 * @brief JSON input formats and exact serialization of results.
 *
 * Parse errors carry line and column; semantic errors carry the JSON
 * pointer of the offending value.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcomb/leavitt.hpp"
#include "qcomb/qbool.hpp"
#include "qcomb/qlogic.hpp"

namespace qcomb::io {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

/// Input error; maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A parsed document with its source text.
struct Document {
  std::string path;
  std::string text;
  Json root;
};

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Json parse_text(const std::string& text, const std::string& where = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte just past the offending character.
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto pos = what.find("parse error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw InputError(where + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

inline Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  Document d{path, ss.str(), {}};
  d.root = parse_text(d.text, path);
  return d;
}

/// Position-carrying view into a JSON value.
class Node {
 public:
  Node(const Json& j, std::string ptr = "") : j_(&j), ptr_(std::move(ptr)) {}

  const Json& json() const { return *j_; }
  const std::string& pointer() const { return ptr_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError((ptr_.empty() ? std::string("/") : ptr_) + ": " + msg);
  }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  Node at(const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) fail("missing field \"" + key + "\"");
    return Node(*it, ptr_ + "/" + key);
  }

  Node at(std::size_t k) const {
    if (!j_->is_array()) fail("expected an array");
    if (k >= j_->size()) fail("index " + std::to_string(k) + " out of range");
    return Node((*j_)[k], ptr_ + "/" + std::to_string(k));
  }

  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }

  std::vector<Node> items() const {
    std::vector<Node> out;
    for (std::size_t k = 0; k < size(); ++k) out.push_back(at(k));
    return out;
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  std::size_t index() const {
    if (!j_->is_number_unsigned() && !(j_->is_number_integer() && j_->get<long long>() >= 0)) {
      fail("expected a nonnegative integer");
    }
    return j_->get<std::size_t>();
  }

  Scalar scalar() const {
    if (j_->is_number_integer()) return Scalar(static_cast<long>(j_->get<long long>()));
    if (j_->is_string()) {
      try {
        return Scalar::parse(j_->get<std::string>());
      } catch (const Error& e) {
        fail(std::string("bad scalar: ") + e.what());
      }
    }
    fail("expected a scalar (\"p/q\", \"p/q+r/s i\" or an integer)");
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& n : items()) out.push_back(n.str());
    return out;
  }

 private:
  const Json* j_;
  std::string ptr_;
};

// ---------------------------------------------------------------------------
// Coalgebras

inline std::size_t parse_count(const Node& at, const std::string& s) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    at.fail("bad count \"" + s + "\" in builtin name");
  }
}

/// Builtins: "omega", "singleton", "empty", "comatrix:n", "linearize:a,b",
/// "monoid_add:n", "monoid_mul:n", "pair_category:n", "chain_category:n",
/// "discrete_category:n", and "opposite:<builtin>".
inline Coalgebra builtin_coalgebra(const std::string& spec, const Node& at) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "omega") return omega();
  if (head == "singleton") return singleton();
  if (head == "empty") return empty_coalgebra();
  if (head == "opposite") return opposite(builtin_coalgebra(arg, at));
  if (head == "linearize") {
    std::vector<std::string> labels;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) labels.push_back(item);
    return linearize(labels);
  }
  if (colon == std::string::npos) at.fail("unknown builtin coalgebra \"" + spec + "\"");
  const std::size_t n = parse_count(at, arg);
  if (head == "comatrix") return comatrix(n);
  if (head == "monoid_add") return fd_monoid_additive(n);
  if (head == "monoid_mul") return fd_monoid_multiplicative(n);
  if (head == "pair_category") return fd_category(pair_category(n), "pair" + arg);
  if (head == "chain_category") return fd_category(chain_category(n), "chain" + arg);
  if (head == "discrete_category") {
    std::vector<std::string> objects;
    for (std::size_t k = 0; k < n; ++k) objects.push_back("o" + std::to_string(k));
    return fd_category(discrete_category(objects), "discrete" + arg);
  }
  at.fail("unknown builtin coalgebra \"" + spec + "\"");
}

inline std::size_t label_or_index(const Node& n, const std::vector<std::string>& labels) {
  if (n.json().is_string()) {
    const auto s = n.str();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == s) return k;
    }
    n.fail("unknown label \"" + s + "\"");
  }
  const std::size_t k = n.index();
  if (k >= labels.size()) n.fail("index out of range");
  return k;
}

/// Explicit format {"name","basis","delta":[[k,i,j,s]],"eps":[s],"star":[{"from","to"}]}
/// or a builtin name (bare string or {"builtin": name}).
inline Coalgebra parse_coalgebra(const Node& n) {
  if (n.json().is_string()) return builtin_coalgebra(n.str(), n);
  if (n.has("builtin")) return builtin_coalgebra(n.at("builtin").str(), n.at("builtin"));
  const auto basis = n.at("basis").strings();
  const std::size_t d = basis.size();
  Tensor3 delta(d, d, d);
  for (const auto& e : n.at("delta").items()) {
    if (e.size() != 4) e.fail("delta entries are [k, i, j, scalar]");
    const auto k = label_or_index(e.at(0), basis);
    const auto i = label_or_index(e.at(1), basis);
    const auto j = label_or_index(e.at(2), basis);
    delta.add_to(k, i, j, e.at(3).scalar());
  }
  const Node eps = n.at("eps");
  if (eps.size() != d) eps.fail("eps must have one entry per basis element");
  Vector ev(d);
  for (std::size_t k = 0; k < d; ++k) ev[k] = eps.at(k).scalar();
  Coalgebra c(n.has("name") ? n.at("name").str() : "C", basis, std::move(delta), std::move(ev));
  if (n.has("star")) {
    std::vector<std::size_t> perm(d);
    for (std::size_t k = 0; k < d; ++k) perm[k] = k;
    for (const auto& s : n.at("star").items()) {
      perm[label_or_index(s.at("from"), basis)] = label_or_index(s.at("to"), basis);
    }
    try {
      c.set_star(std::move(perm));
    } catch (const Error& e) {
      n.at("star").fail(e.what());
    }
  }
  return c;
}

/// Either the document itself or its "coalgebra" field.
inline Coalgebra coalgebra_of(const Node& root) {
  return root.has("coalgebra") ? parse_coalgebra(root.at("coalgebra")) : parse_coalgebra(root);
}

/// A vector over a coalgebra: an array of scalars or an object {label: scalar}.
inline Vector parse_vector(const Node& n, const std::vector<std::string>& labels) {
  Vector v(labels.size());
  if (n.json().is_object()) {
    for (const auto& [key, val] : n.json().items()) {
      Node child(val, n.pointer() + "/" + key);
      std::size_t k = labels.size();
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == key) k = i;
      }
      if (k == labels.size()) n.fail("unknown label \"" + key + "\"");
      v[k] = child.scalar();
    }
    return v;
  }
  if (n.json().is_string()) {
    // A bare label denotes the basis (or dual basis) vector.
    v[label_or_index(n, labels)] = Scalar(1);
    return v;
  }
  if (n.size() != labels.size()) n.fail("expected " + std::to_string(labels.size()) + " entries");
  for (std::size_t k = 0; k < labels.size(); ++k) v[k] = n.at(k).scalar();
  return v;
}

/// A dense matrix: array of rows of scalars. An empty array with explicit
/// shape is given as {"rows": r, "cols": c, "entries": [[i, j, s]]}.
inline Matrix parse_matrix(const Node& n) {
  if (n.json().is_object()) {
    Matrix m(n.at("rows").index(), n.at("cols").index());
    if (n.has("entries")) {
      for (const auto& e : n.at("entries").items()) {
        if (e.size() != 3) e.fail("matrix entries are [row, col, scalar]");
        const auto r = e.at(0).index();
        const auto c = e.at(1).index();
        if (r >= m.rows() || c >= m.cols()) e.fail("entry out of range");
        m.add_to(r, c, e.at(2).scalar());
      }
    }
    return m;
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : n.items()) {
    std::vector<Scalar> r;
    for (const auto& x : row.items()) r.push_back(x.scalar());
    rows.push_back(std::move(r));
  }
  try {
    return Matrix::from_dense(rows);
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

/// A map out of `source`: {"target": coalgebra, "set": {src: tgt}} or
/// {"target": coalgebra, "matrix": dense (rows = target basis)} or
/// {"target": coalgebra, "images": {src: vector over target}}.
inline CoalgebraMap parse_map(const Node& n, const CoalgebraPtr& source) {
  const auto target = share(parse_coalgebra(n.at("target")));
  Matrix m(target->dim(), source->dim());
  if (n.has("set")) {
    const Node s = n.at("set");
    if (!s.json().is_object()) s.fail("expected an object {source label: target label}");
    std::vector<bool> seen(source->dim(), false);
    for (const auto& [key, val] : s.json().items()) {
      Node child(val, s.pointer() + "/" + key);
      const auto k = label_or_index(Node(Json(key), s.pointer()), source->basis());
      m.set(label_or_index(child, target->basis()), k, Scalar(1));
      seen[k] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
      if (!seen[k]) s.fail("no image for \"" + source->basis()[k] + "\"");
    }
  } else if (n.has("images")) {
    const Node s = n.at("images");
    for (const auto& [key, val] : s.json().items()) {
      Node child(val, s.pointer() + "/" + key);
      const auto k = label_or_index(Node(Json(key), s.pointer()), source->basis());
      const Vector img = parse_vector(child, target->basis());
      for (std::size_t r = 0; r < img.size(); ++r) m.set(r, k, img[r]);
    }
  } else {
    m = parse_matrix(n.at("matrix"));
    if (m.rows() != target->dim() || m.cols() != source->dim()) {
      n.at("matrix").fail("expected shape " + std::to_string(target->dim()) + "x" +
                          std::to_string(source->dim()) + ", got " + m.shape_str());
    }
  }
  return CoalgebraMap(source, target, std::move(m));
}

/// {"source": coalgebra, "maps": [map...]}.
inline std::vector<CoalgebraMap> parse_map_bundle(const Node& root, CoalgebraPtr* source_out = nullptr) {
  const auto source = share(parse_coalgebra(root.at("source")));
  std::vector<CoalgebraMap> maps;
  for (const auto& m : root.at("maps").items()) maps.push_back(parse_map(m, source));
  if (source_out) *source_out = source;
  return maps;
}

// ---------------------------------------------------------------------------
// Boolean algebras, quivers, representations

inline BooleanTables parse_boolean_tables(const Node& n) {
  BooleanTables t;
  t.elements = n.at("elements").strings();
  auto table = [&](const char* key) {
    std::vector<std::vector<std::string>> out;
    const Node tn = n.at(key);
    if (tn.size() != t.elements.size()) tn.fail("table must have one row per element");
    for (const auto& row : tn.items()) {
      auto r = row.strings();
      if (r.size() != t.elements.size()) row.fail("table row has the wrong length");
      out.push_back(std::move(r));
    }
    return out;
  };
  t.meet = table("meet");
  t.join = table("join");
  if (n.has("neg")) {
    t.neg = n.at("neg").strings();
    if (t.neg->size() != t.elements.size()) n.at("neg").fail("neg must have one entry per element");
  }
  t.bot = n.at("bot").str();
  t.top = n.at("top").str();
  return t;
}

/// {"vertices":[...], "edges":[{"name","s","t"}]} or a builtin "loop", "line:n".
inline ClassicalQuiver parse_quiver(const Node& n) {
  if (n.json().is_string()) {
    const auto s = n.str();
    if (s == "loop") return loop_quiver();
    if (s.rfind("line:", 0) == 0) return line_quiver(parse_count(n, s.substr(5)));
    n.fail("unknown builtin quiver \"" + s + "\"");
  }
  ClassicalQuiver q;
  q.vertices = n.at("vertices").strings();
  for (const auto& e : n.at("edges").items()) {
    q.edges.push_back({e.at("name").str(), e.at("s").str(), e.at("t").str()});
  }
  try {
    q.check();
  } catch (const Error& e) {
    n.fail(e.what());
  }
  return q;
}

inline ClassicalQuiver quiver_of(const Node& root) {
  return root.has("quiver") ? parse_quiver(root.at("quiver")) : parse_quiver(root);
}

/// {"quiver", "dims": {v: n}, "omega": {v: matrix}, "sigma": {v: matrix}}.
/// Missing blocks at vertices with empty fiber default to empty matrices.
inline StableRep parse_stable_rep(const Node& n) {
  StableRep r;
  r.quiver = quiver_of(n);
  const std::size_t nv = r.quiver.vertices.size();
  r.dims.assign(nv, 0);
  const Node dims = n.at("dims");
  for (std::size_t v = 0; v < nv; ++v) r.dims[v] = dims.at(r.quiver.vertices[v]).index();
  auto blocks = [&](const char* key, bool omega) {
    std::vector<Matrix> out;
    const Node bn = n.at(key);
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& label = r.quiver.vertices[v];
      const std::size_t f = fiber_dim(r, v);
      if (bn.has(label)) {
        Matrix m = parse_matrix(bn.at(label));
        // An empty dense array carries no shape; restore it from the data.
        if (m.rows() == 0 && m.cols() == 0) m = omega ? Matrix(f, r.dims[v]) : Matrix(r.dims[v], f);
        out.push_back(std::move(m));
      } else if (f == 0 || r.dims[v] == 0) {
        out.push_back(omega ? Matrix(f, r.dims[v]) : Matrix(r.dims[v], f));
      } else {
        bn.fail("missing block for vertex \"" + label + "\"");
      }
    }
    return out;
  };
  r.omega = blocks("omega", true);
  r.sigma = blocks("sigma", false);
  try {
    check_rep_shapes(r);
  } catch (const Error& e) {
    n.fail(e.what());
  }
  return r;
}

/// {"coalgebra", "dim", "coaction": matrix of shape (dim * dimC) x dim}.
inline Comodule parse_comodule(const Node& n) {
  Comodule m;
  m.C = share(coalgebra_of(n));
  m.dim = n.at("dim").index();
  m.coaction = parse_matrix(n.at("coaction"));
  if (m.coaction.rows() != m.dim * m.C->dim() || m.coaction.cols() != m.dim) {
    n.at("coaction").fail("coaction must have shape " + std::to_string(m.dim * m.C->dim()) + "x" +
                          std::to_string(m.dim));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Output

inline OJson scalar_json(const Scalar& s) { return s.str(); }

inline OJson vector_json(const Vector& v) {
  OJson a = OJson::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

/// Sparse vector keyed by basis label, zeros omitted.
inline OJson labelled_json(const Vector& v, const std::vector<std::string>& labels) {
  OJson o = OJson::object();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) o[labels[k]] = v[k].str();
  }
  return o;
}

inline OJson matrix_json(const Matrix& m) {
  OJson rows = OJson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    OJson row = OJson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline OJson labels_json(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels) {
  OJson a = OJson::array();
  for (auto k : idx) a.push_back(labels[k]);
  return a;
}

}  // namespace qcomb::io
