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
 * @file cli.hpp
 * @brief Command dispatch and JSON reports for the qcomb tool.
 *
 * Exit codes: 0 when every check passes, 1 when a check fails, 2 on input
 * errors. Reports are deterministic; wall-clock timing is opt-in.
 */

#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcomb/io.hpp"
#include "qcomb/random.hpp"

namespace qcomb::cli {

using io::Json;
using io::Node;
using io::OJson;

struct Options {
  std::string command;
  std::vector<std::string> files;
  LpaMode mode = LpaMode::standard;
  bool strict_paper = false;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct Outcome {
  OJson report;
  int exit_code = 0;
};

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

/// Collects checks, counterexamples and results for one command.
class Builder {
 public:
  void check(const std::string& name, bool ok, OJson detail = nullptr) {
    OJson c = OJson::object();
    c["name"] = name;
    c["ok"] = ok;
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks_.push_back(std::move(c));
    ok_ = ok_ && ok;
  }
  void counterexample(OJson c) { counterexamples_.push_back(std::move(c)); }
  OJson& result() { return result_; }
  bool ok() const { return ok_; }
  const OJson& checks() const { return checks_; }
  const OJson& counterexamples() const { return counterexamples_; }

 private:
  OJson checks_ = OJson::array();
  OJson counterexamples_ = OJson::array();
  OJson result_ = OJson::object();
  bool ok_ = true;
};

struct Context {
  const Options& opt;
  std::vector<io::Document> docs;
  Builder out;

  Node root(std::size_t k = 0) const {
    if (k >= docs.size()) throw io::InputError(opt.command + ": missing input file");
    return Node(docs[k].root);
  }
};

namespace detail {

inline OJson labels_of(const std::vector<std::size_t>& idx, const Coalgebra& c) {
  return io::labels_json(idx, c.basis());
}

inline void map_checks(Context& ctx, const std::string& name, const CoalgebraMap& f) {
  const auto chk = is_coalgebra_map(f);
  OJson d = nullptr;
  if (!chk.ok) {
    d = OJson::object();
    d["law"] = chk.law;
    d["element"] = f.source->basis()[chk.element];
    ctx.out.counterexample({{"check", name + " is a coalgebra map"},
                            {"law", chk.law},
                            {"element", f.source->basis()[chk.element]}});
  }
  ctx.out.check(name + " is a coalgebra map", chk.ok, d);
}

inline OJson map_json(const CoalgebraMap& f) {
  OJson o = OJson::object();
  o["source"] = f.source->name();
  o["target"] = f.target->name();
  o["matrix"] = io::matrix_json(f.mat);
  return o;
}

// ---------------------------------------------------------------------------
// coalg, elements

inline void cmd_validate(Context& ctx) {
  const Coalgebra c = io::coalgebra_of(ctx.root());
  const auto rep = validate(c);
  std::map<std::string, bool> laws = {{"coassociativity", true}, {"counit-left", true},
                                      {"counit-right", true}};
  if (c.star()) {
    laws["star-involution"] = true;
    laws["star-counit"] = true;
    laws["star-comultiplication"] = true;
  }
  for (const auto& v : rep.violations) laws[v.law] = false;
  for (const auto& [law, ok] : laws) ctx.out.check(law, ok);
  std::size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown++ == 16) break;
    OJson idx = OJson::array();
    for (auto k : v.indices) idx.push_back(c.basis()[k]);
    ctx.out.counterexample({{"law", v.law}, {"indices", idx}, {"detail", v.detail}});
  }
  auto& r = ctx.out.result();
  r["name"] = c.name();
  r["dim"] = c.dim();
  r["cocommutative"] = is_cocommutative(c);
  r["failing_elements"] = labels_of(rep.failing_elements, c);
}

inline void cmd_grouplikes(Context& ctx) {
  const Node root = ctx.root();
  const Coalgebra c = io::coalgebra_of(root);
  OJson list = OJson::array();
  if (root.has("candidates")) {
    for (const auto& n : root.at("candidates").items()) {
      const Vector g = io::parse_vector(n, c.basis());
      const bool ok = is_grouplike(c, g);
      list.push_back({{"element", io::labelled_json(g, c.basis())}, {"grouplike", ok}});
      ctx.out.check("candidate " + n.pointer() + " is group-like", ok);
    }
    ctx.out.result()["candidates"] = std::move(list);
    return;
  }
  std::vector<Vector> gs;
  try {
    gs = grouplikes(c);
  } catch (const VerificationOnly& e) {
    throw io::InputError(std::string(e.what()) + "; supply \"candidates\" to verify");
  }
  bool all = true;
  for (const auto& g : gs) {
    all = all && is_grouplike(c, g);
    list.push_back(io::labelled_json(g, c.basis()));
  }
  ctx.out.check("enumerated elements are group-like", all);
  ctx.out.result()["count"] = gs.size();
  ctx.out.result()["grouplikes"] = std::move(list);
}

inline void cmd_primitives(Context& ctx) {
  const Node root = ctx.root();
  const Coalgebra c = io::coalgebra_of(root);
  const Vector g = io::parse_vector(root.at("g"), c.basis());
  const Vector h = root.has("h") ? io::parse_vector(root.at("h"), c.basis()) : g;
  ctx.out.check("g is group-like", is_grouplike(c, g));
  ctx.out.check("h is group-like", is_grouplike(c, h));
  if (!ctx.out.ok()) return;
  const Matrix basis = primitives(c, g, h);
  OJson list = OJson::array();
  bool all = true;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    const Vector p = basis.column(k);
    const Vector lhs = comultiply(c, p);
    const Vector rhs = kron(Matrix::column_of(p), Matrix::column_of(g)).column(0) +
                       kron(Matrix::column_of(h), Matrix::column_of(p)).column(0);
    all = all && lhs == rhs && counit(c, p).is_zero();
    list.push_back(io::labelled_json(p, c.basis()));
  }
  ctx.out.check("basis elements are (g,h)-primitive", all);
  ctx.out.result()["dim"] = basis.cols();
  ctx.out.result()["basis"] = std::move(list);
}

// ---------------------------------------------------------------------------
// partial, convolution, qlogic

inline std::vector<CoalgebraMap> bundle(Context& ctx, std::size_t min, std::size_t max) {
  const auto maps = io::parse_map_bundle(ctx.root());
  if (maps.size() < min || maps.size() > max) {
    throw io::InputError("/maps: expected " + std::to_string(min) +
                         (min == max ? "" : " to " + std::to_string(max)) + " maps");
  }
  for (std::size_t k = 0; k < maps.size(); ++k) map_checks(ctx, "x" + std::to_string(k + 1), maps[k]);
  return maps;
}

inline void admissibility_check(Context& ctx, const CoalgebraMap& a, const CoalgebraMap& b,
                                const std::string& name) {
  const auto adm = is_admissible(a, b);
  OJson d = nullptr;
  if (!adm.ok) {
    d = {{"witness", a.source->basis()[adm.failing.front()]},
         {"failing", labels_of(adm.failing, *a.source)}};
    ctx.out.counterexample({{"check", name}, {"witness", a.source->basis()[adm.failing.front()]}});
  }
  ctx.out.check(name, adm.ok, d);
}

inline void cmd_admissible(Context& ctx) {
  const auto maps = bundle(ctx, 2, 2);
  if (!ctx.out.ok()) return;
  admissibility_check(ctx, maps[0], maps[1], "(x1, x2) admissible");
}

inline void cmd_pair(Context& ctx) {
  const auto maps = bundle(ctx, 2, 3);
  if (!ctx.out.ok()) return;
  admissibility_check(ctx, maps[0], maps[1], "(x1, x2) admissible");
  if (!ctx.out.ok()) return;
  const CoalgebraMap p = pair(certify(maps[0], maps[1]));
  map_checks(ctx, "pair(x1, x2)", p);
  ctx.out.result()["pair"] = map_json(p);
  if (maps.size() == 3) {
    const auto a = partial_assoc_check(maps[0], maps[1], maps[2]);
    ctx.out.result()["associativity"] = {{"left_defined", a.left_defined},
                                         {"right_defined", a.right_defined},
                                         {"maps_equal", a.maps_equal}};
    ctx.out.check("partial associativity", a.ok());
  }
}

inline void cmd_conv(Context& ctx) {
  const Node root = ctx.root();
  const Coalgebra c = io::coalgebra_of(root);
  const Functional x = io::parse_vector(root.at("x"), c.basis());
  const Functional y = io::parse_vector(root.at("y"), c.basis());
  const Functional xy = conv_mul(c, x, y);
  const Functional yx = conv_mul(c, y, x);
  const bool adm = functionals_admissible(c, x, y);
  const bool commute = xy == yx;
  ctx.out.check("admissible pairs commute", !adm || commute);
  auto& r = ctx.out.result();
  r["x*y"] = io::labelled_json(xy, c.basis());
  r["y*x"] = io::labelled_json(yx, c.basis());
  r["admissible"] = adm;
  r["commute"] = commute;
}

inline void cmd_idempotents(Context& ctx) {
  const auto maps = bundle(ctx, 1, 1);
  if (!ctx.out.ok()) return;
  const CoalgebraMap& f = maps[0];
  const auto family = orthogonal_idempotent_family(f);
  const Coalgebra& c = *f.source;
  bool idem = true, orth = true;
  Functional sum(c.dim());
  OJson list = OJson::object();
  for (std::size_t a = 0; a < family.size(); ++a) {
    sum = sum + family[a];
    list[f.target->basis()[a]] = io::labelled_json(family[a], c.basis());
    for (std::size_t b = 0; b < family.size(); ++b) {
      const Functional p = conv_mul(c, family[a], family[b]);
      if (a == b && p != family[a]) idem = false;
      if (a != b && !is_zero(p)) orth = false;
    }
  }
  ctx.out.check("idempotent", idem);
  ctx.out.check("orthogonal", orth);
  ctx.out.check("sums to the unit", sum == conv_unit(c));
  ctx.out.check("assemble round-trip", assemble(f.source, f.target, family).mat == f.mat);
  ctx.out.result()["family"] = std::move(list);
}

inline State parse_state(const Node& n, const Coalgebra& c) {
  State s;
  s.coords = io::parse_vector(n.at("coords"), c.basis());
  if (n.has("witness")) {
    std::vector<Vector> w;
    for (const auto& e : n.at("witness").items()) w.push_back(io::parse_vector(e, c.basis()));
    s.witness = std::move(w);
  }
  return s;
}

inline void cmd_expect(Context& ctx) {
  const Node root = ctx.root();
  const Coalgebra c = io::coalgebra_of(root);
  const State s = parse_state(root.at("state"), c);
  const auto sc = check_state(c, s);
  ctx.out.check("state is normalized", sc.normalized);
  if (s.witness) ctx.out.check("positivity witness", sc.witnessed);
  ctx.out.check("<eps> = 1", expectation(c, conv_unit(c), s).is_one());
  auto& r = ctx.out.result();
  if (!root.has("observable")) return;
  const Functional x = io::parse_vector(root.at("observable"), c.basis());
  const Scalar e = expectation(c, x, s);
  r["expectation"] = e.str();
  const bool idempotent = conv_mul(c, x, x) == x;
  const bool self_adjoint = c.star() && star_on_functionals(c, x) == x;
  r["idempotent"] = idempotent;
  r["self_adjoint"] = self_adjoint;
  if (s.witness && sc.witnessed && c.star()) {
    const Rational pos = positivity_check(c, x, s);
    r["<x* x>"] = rational_str(pos);
    ctx.out.check("<x* x> >= 0", sgn(pos) >= 0);
    if (idempotent && self_adjoint) {
      ctx.out.check("<x> in [0, 1]", e.is_real() && sgn(e.re()) >= 0 && e.re() <= 1);
    }
  }
}

// ---------------------------------------------------------------------------
// qbool

inline void report_axioms(Context& ctx, const QBoolReport& rep) {
  for (const auto& a : rep.axioms) {
    OJson d = nullptr;
    if (!a.ok) {
      d = {{"witness", a.witness}};
      ctx.out.counterexample({{"axiom", a.name}, {"witness", a.witness}});
    }
    ctx.out.check(a.name, a.ok, d);
  }
}

/// Linearize tables; a neg that is not a classical complement is kept so the
/// complement axioms can report it.
inline std::optional<QBoolStructure> linearized_tables(Context& ctx, const BooleanTables& t) {
  BooleanTables lattice = t;
  lattice.neg.reset();
  QBoolStructure q;
  try {
    q = linearize_boolean(lattice);
  } catch (const Error& e) {
    ctx.out.check("classical lattice tables", false, e.what());
    return std::nullopt;
  }
  if (t.neg) {
    Matrix neg(t.elements.size(), t.elements.size());
    for (std::size_t a = 0; a < t.elements.size(); ++a) {
      neg.set(q.B->index_of((*t.neg)[a]), a, Scalar(1));
    }
    q.neg = std::move(neg);
  }
  return q;
}

inline void cmd_qbool_check(Context& ctx) {
  const BooleanTables t = io::parse_boolean_tables(ctx.root());
  const auto q = linearized_tables(ctx, t);
  if (!q) return;
  QBoolStructure lattice = *q;
  lattice.neg.reset();
  const auto st = check_structure(lattice);
  ctx.out.check(st.name, st.ok);
  report_axioms(ctx, check_lattice_axioms(*q));
  auto& r = ctx.out.result();
  r["dim"] = q->B->dim();
  r["classically_complemented"] = classically_complemented(t);
  if (!q->neg) {
    r["complement"] = "absent";
    return;
  }
  report_axioms(ctx, check_complement(*q));
  report_axioms(ctx, check_weak_de_morgan(*q));
  r["complement"] = "present";
}

inline void cmd_demorgan(Context& ctx) {
  const BooleanTables t = io::parse_boolean_tables(ctx.root());
  if (!t.neg) throw io::InputError("/neg: weak de Morgan laws need a negation");
  const auto q = linearized_tables(ctx, t);
  if (!q) return;
  report_axioms(ctx, check_weak_de_morgan(*q));
}

// ---------------------------------------------------------------------------
// quiver

inline QuantumQuiver parse_quantum_quiver(const Node& n) {
  QuantumQuiver q;
  q.D1 = share(io::parse_coalgebra(n.at("D1")));
  q.d1 = io::parse_map(n.at("d1"), q.D1);
  q.D0 = q.d1.target;
  q.d0 = io::parse_map(n.at("d0"), q.D1);
  if (!same_structure(*q.d0.target, opposite(*q.D0))) {
    n.at("d0").fail("target of d0 must be the opposite of the target of d1");
  }
  return q;
}

inline void cmd_quiver_check(Context& ctx) {
  const Node root = ctx.root();
  QuantumQuiver q;
  const bool quantum = root.has("D1");
  if (quantum) {
    q = parse_quantum_quiver(root);
  } else {
    q = from_classical(io::quiver_of(root));
  }
  map_checks(ctx, "d0", q.d0);
  map_checks(ctx, "d1", q.d1);
  if (!ctx.out.ok()) return;
  const auto chk = quantum_quiver_check(q, ctx.opt.strict_paper);
  OJson d = nullptr;
  if (!chk.ok) {
    d = {{"witness", q.D1->basis()[chk.failing.front()]}, {"failing", labels_of(chk.failing, *q.D1)}};
    ctx.out.counterexample({{"check", "compatibility"}, {"witness", q.D1->basis()[chk.failing.front()]}});
  }
  ctx.out.check("compatibility (" + chk.reading + ")", chk.ok, d);
  ctx.out.result()["reading"] = chk.reading;
  ctx.out.result()["edges"] = q.D1->dim();
  ctx.out.result()["vertices"] = q.D0->dim();
}

inline void cmd_comodule_check(Context& ctx) {
  const Node root = ctx.root();
  const Comodule m = io::parse_comodule(root);
  auto report = [&](const std::string& name, const Comodule& x) {
    const auto chk = comodule_validate(x);
    ctx.out.check(name + " coassociative", chk.coassociative);
    ctx.out.check(name + " counital", chk.counital);
    if (chk.witness) ctx.out.counterexample({{"comodule", name}, {"basis_index", *chk.witness}});
  };
  report("M", m);
  if (root.has("map")) {
    const CoalgebraMap f = io::parse_map(root.at("map"), m.C);
    map_checks(ctx, "f", f);
    if (!ctx.out.ok()) return;
    const Comodule fm = corestrict(f, m);
    report("f_* M", fm);
    const Coinduced back = coinduce(f, fm);
    report("f^* f_* M", back.comodule);
    ctx.out.result()["corestricted_dim"] = fm.dim;
    ctx.out.result()["coinduced_dim"] = back.comodule.dim;
  }
  ctx.out.result()["dim"] = m.dim;
}

// ---------------------------------------------------------------------------
// leavitt

inline Leavitt lpa_of(Context& ctx) { return Leavitt(io::quiver_of(ctx.root()), ctx.opt.mode); }

inline std::vector<std::pair<std::string, Strategy>> strategies(std::uint64_t seed) {
  return {{"leftmost", Strategy::leftmost()},
          {"rightmost", Strategy::rightmost()},
          {"random(" + std::to_string(seed) + ")", Strategy::random(seed)},
          {"random(" + std::to_string(seed + 1) + ")", Strategy::random(seed + 1)},
          {"random(" + std::to_string(seed + 2) + ")", Strategy::random(seed + 2)}};
}

inline LpaElement parse_lpa(const Leavitt& lpa, const Node& n) {
  try {
    return lpa.parse(n.str());
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

inline void cmd_lpa_normalize(Context& ctx) {
  const Node root = ctx.root();
  const Leavitt lpa = lpa_of(ctx);
  OJson out = OJson::array();
  bool confluent = true;
  for (const auto& n : root.at("words").items()) {
    Word w;
    try {
      w = lpa.parse_word(n.str());
    } catch (const Error& e) {
      n.fail(e.what());
    }
    const LpaElement ref = lpa.normalize(w);
    for (const auto& [name, s] : strategies(ctx.opt.seed)) {
      if (lpa.normalize(w, s) != ref) {
        confluent = false;
        ctx.out.counterexample({{"word", n.str()}, {"strategy", name}, {"normal_form", lpa.str(lpa.normalize(w, s))}});
      }
    }
    out.push_back({{"word", n.str()}, {"normal_form", lpa.str(ref)}});
  }
  ctx.out.check("normal form independent of rewrite order", confluent);
  ctx.out.result()["mode"] = mode_name(ctx.opt.mode);
  ctx.out.result()["normalized"] = std::move(out);
}

inline void cmd_lpa_mul(Context& ctx) {
  const Node root = ctx.root();
  const Leavitt lpa = lpa_of(ctx);
  const LpaElement x = parse_lpa(lpa, root.at("x"));
  const LpaElement y = parse_lpa(lpa, root.at("y"));
  const LpaElement xy = lpa.mul(x, y);
  ctx.out.check("unit is neutral", lpa.mul(lpa.unit(), x) == x && lpa.mul(x, lpa.unit()) == x);
  if (root.has("z")) {
    const LpaElement z = parse_lpa(lpa, root.at("z"));
    ctx.out.check("associativity", lpa.mul(xy, z) == lpa.mul(x, lpa.mul(y, z)));
  }
  ctx.out.result()["mode"] = mode_name(ctx.opt.mode);
  ctx.out.result()["x"] = lpa.str(x);
  ctx.out.result()["y"] = lpa.str(y);
  ctx.out.result()["x*y"] = lpa.str(xy);
}

inline void cmd_lpa_table(Context& ctx) {
  const Leavitt lpa = lpa_of(ctx);
  const auto basis = closure_basis(lpa);
  ctx.out.check("finite normal-form closure", basis.has_value());
  if (!basis) return;
  const auto& q = lpa.quiver();
  OJson names = OJson::array();
  for (const auto& w : *basis) names.push_back(lpa.monomial_str(w));
  OJson table = OJson::array();
  for (const auto& a : *basis) {
    OJson row = OJson::array();
    for (const auto& b : *basis) {
      row.push_back(lpa.str(lpa.mul(LpaElement{{a, Scalar(1)}}, LpaElement{{b, Scalar(1)}})));
    }
    table.push_back(std::move(row));
  }
  auto& r = ctx.out.result();
  r["mode"] = mode_name(ctx.opt.mode);
  r["dim"] = basis->size();
  r["basis"] = std::move(names);
  r["table"] = std::move(table);
  const std::size_t n = q.vertices.size();
  if (basis->size() != n * n || basis->empty()) return;
  // Matrix-unit comparison: images of the basis must be distinct matrix units
  // and the map must be multiplicative on every basis pair.
  std::set<std::pair<std::size_t, std::size_t>> units;
  bool ok = true;
  OJson images = OJson::object();
  for (const auto& w : *basis) {
    const Matrix m = matrix_unit_image(lpa, w);
    std::vector<std::pair<std::size_t, std::size_t>> nz;
    bool unit_entry = true;
    m.for_each([&](std::size_t i, std::size_t j, const Scalar& v) {
      nz.emplace_back(i, j);
      unit_entry = unit_entry && v.is_one();
    });
    if (nz.size() != 1 || !unit_entry) {
      ok = false;
      continue;
    }
    units.insert(nz.front());
    images[lpa.monomial_str(w)] =
        "E" + std::to_string(nz.front().first + 1) + "," + std::to_string(nz.front().second + 1);
  }
  ok = ok && units.size() == n * n;
  for (const auto& a : *basis) {
    for (const auto& b : *basis) {
      const LpaElement ab = lpa.mul(LpaElement{{a, Scalar(1)}}, LpaElement{{b, Scalar(1)}});
      if (matrix_unit_image(lpa, ab) != matrix_unit_image(lpa, a) * matrix_unit_image(lpa, b)) ok = false;
    }
  }
  ctx.out.check("isomorphic to matrix units", ok);
  r["matrix_units"] = std::move(images);
}

inline void stable_report(Context& ctx, const StableRep& rep) {
  const auto chk = stable_rep_check(rep, ctx.opt.mode);
  std::map<std::string, bool> eqs = {{"sigma omega = id", true}, {"omega sigma = id", true}};
  for (const auto& f : chk.failures) {
    eqs[f.equation] = false;
    ctx.out.counterexample({{"equation", f.equation}, {"vertex", f.vertex}});
  }
  for (const auto& [name, ok] : eqs) ctx.out.check(name, ok);
}

inline void cmd_stable_check(Context& ctx) {
  const StableRep rep = io::parse_stable_rep(ctx.root());
  stable_report(ctx, rep);
  ctx.out.result()["mode"] = mode_name(ctx.opt.mode);
}

inline void cmd_rep_roundtrip(Context& ctx) {
  const StableRep rep = io::parse_stable_rep(ctx.root());
  stable_report(ctx, rep);
  if (!ctx.out.ok()) return;
  const Leavitt lpa(rep.quiver, ctx.opt.mode);
  const ModuleData m = rep_to_module(rep);
  const auto mc = module_check(m, lpa);
  for (const auto& f : mc.failures) ctx.out.counterexample({{"relation", f}});
  ctx.out.check("module satisfies the relations", mc.ok());
  ctx.out.check("module_to_rep . rep_to_module = id", same_rep(module_to_rep(m), rep));
  OJson edges = OJson::object();
  for (std::size_t e = 0; e < rep.quiver.edges.size(); ++e) {
    const auto& name = rep.quiver.edges[e].name;
    edges[name] = io::matrix_json(m.edge[e]);
    edges[name + "*"] = io::matrix_json(m.ghost[e]);
  }
  ctx.out.result()["mode"] = mode_name(ctx.opt.mode);
  ctx.out.result()["action"] = std::move(edges);
}

inline void cmd_cp_audit(Context& ctx) {
  const Leavitt lpa = lpa_of(ctx);
  OJson rels = OJson::array();
  bool ok = true;
  for (const auto& rel : cp_relation_audit(lpa)) {
    const bool holds = lpa.normalize(rel.lhs) == lpa.normalize(rel.rhs);
    ok = ok && holds;
    if (!holds) ctx.out.counterexample({{"relation", relation_str(lpa, rel)}});
    rels.push_back({{"kind", rel.kind}, {"relation", relation_str(lpa, rel)}});
  }
  ctx.out.check("normal form respects every relation", ok);
  ctx.out.result()["mode"] = mode_name(ctx.opt.mode);
  ctx.out.result()["unit"] = lpa.str(lpa.unit());
  ctx.out.result()["relations"] = std::move(rels);
}

}  // namespace detail

using Handler = std::function<void(Context&)>;

inline const std::map<std::string, Handler>& commands() {
  static const std::map<std::string, Handler> table = {
      {"validate", detail::cmd_validate},
      {"grouplikes", detail::cmd_grouplikes},
      {"primitives", detail::cmd_primitives},
      {"admissible", detail::cmd_admissible},
      {"pair", detail::cmd_pair},
      {"conv", detail::cmd_conv},
      {"idempotents", detail::cmd_idempotents},
      {"expect", detail::cmd_expect},
      {"qbool-check", detail::cmd_qbool_check},
      {"demorgan", detail::cmd_demorgan},
      {"quiver-check", detail::cmd_quiver_check},
      {"comodule-check", detail::cmd_comodule_check},
      {"lpa-normalize", detail::cmd_lpa_normalize},
      {"lpa-mul", detail::cmd_lpa_mul},
      {"lpa-table", detail::cmd_lpa_table},
      {"stable-check", detail::cmd_stable_check},
      {"rep-roundtrip", detail::cmd_rep_roundtrip},
      {"cp-audit", detail::cmd_cp_audit},
  };
  return table;
}

/// Run one command. Input problems and rejected data give exit code 2.
inline Outcome run(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  OJson report = OJson::object();
  report["command"] = opt.command;
  report["inputs"] = OJson::array();
  report["flags"] = {{"mode", mode_name(opt.mode)}, {"strict_paper", opt.strict_paper}, {"seed", opt.seed}};
  Outcome out;
  Context ctx{opt, {}, {}};
  try {
    const auto it = commands().find(opt.command);
    if (it == commands().end()) throw io::InputError("unknown command \"" + opt.command + "\"");
    for (const auto& f : opt.files) {
      ctx.docs.push_back(io::load(f));
      report["inputs"].push_back({{"file", f}, {"sha256", sha256_hex(ctx.docs.back().text)}});
    }
    it->second(ctx);
    report["verdict"] = ctx.out.ok() ? "pass" : "fail";
    report["checks"] = ctx.out.checks();
    report["counterexamples"] = ctx.out.counterexamples();
    report["result"] = ctx.out.result();
    out.exit_code = ctx.out.ok() ? 0 : 1;
  } catch (const Error& e) {
    report["verdict"] = "input-error";
    report["error"] = e.what();
    out.exit_code = 2;
  }
  if (opt.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report["timing_ms"] = ms;
  }
  out.report = std::move(report);
  return out;
}

}  // namespace qcomb::cli
