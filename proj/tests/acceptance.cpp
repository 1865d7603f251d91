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

// Acceptance suite: one line per criterion, "[PASS] ACn ..." or "[FAIL] ACn ...".
// Usage: acceptance [n]   (no argument runs every criterion)

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcomb/qbool.hpp"
#include "qcomb/random.hpp"

namespace {

using namespace qcomb;

struct Verdict {
  bool ok = true;
  std::ostringstream note;
  std::string failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

// 1. Constructor validity.
void ac1(Verdict& v) {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back("s" + std::to_string(k));
    v.require(validate(linearize(labels)).ok, "linearize |S| = " + std::to_string(n));
    ++checked;
  }
  for (std::size_t n = 1; n <= 4; ++n, ++checked) {
    v.require(validate(comatrix(n)).ok, "comatrix " + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 6; ++n, ++checked) {
    v.require(validate(fd_monoid_additive(n)).ok, "monoid_add " + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 3; ++n, ++checked) {
    v.require(validate(fd_category(pair_category(n))).ok, "pair category " + std::to_string(n));
  }
  v.require(validate(fd_category(chain_category(3))).ok, "3-chain category");
  ++checked;
  v.note << checked << " coalgebras validated";
}

// 2. Partial monoidal structure: pairs and triples.
void ac2(Verdict& v) {
  Rng rng(2024);
  const SweepSource kinds[] = {SweepSource::set, SweepSource::comatrix2, SweepSource::monoid2};
  std::size_t admissible = 0, rejected = 0, draws = 0;
  while (admissible < 240) {
    const SweepSource kind = kinds[draws++ % 3];
    const auto c = sweep_source(rng, kind);
    const SweepMap a = random_map(rng, kind, c);
    const CoalgebraMap b = (a.idempotent && random_int(rng, 0, 1)) ? commuting_map(rng, c, *a.idempotent)
                                                                   : random_map(rng, kind, c).map;
    v.require(is_coalgebra_map(a.map).ok && is_coalgebra_map(b).ok, "generator produced a non-map");
    const auto p = try_pair(a.map, b);
    if (!p) {
      ++rejected;
      continue;
    }
    ++admissible;
    v.require(is_coalgebra_map(*p).ok, "pair is not a coalgebra map");
  }
  std::size_t triples = 0, both_defined = 0;
  for (std::size_t k = 0; k < 90; ++k) {
    const SweepSource kind = kinds[k % 3];
    const auto c = sweep_source(rng, kind);
    const SweepMap a = random_map(rng, kind, c);
    auto next = [&] {
      return (a.idempotent && random_int(rng, 0, 2) > 0) ? commuting_map(rng, c, *a.idempotent)
                                                         : random_map(rng, kind, c).map;
    };
    const CoalgebraMap b = next();
    const CoalgebraMap d = next();
    const auto r = partial_assoc_check(a.map, b, d);
    v.require(r.ok(), "partial associativity failed on triple " + std::to_string(k));
    if (r.left_defined && r.right_defined) ++both_defined;
    ++triples;
  }
  v.require(both_defined >= 50, "fewer than 50 triples with both nestings defined");
  v.note << admissible << " admissible pairs verified (" << rejected << " non-admissible draws rejected), "
         << triples << " triples (" << both_defined << " with both nestings defined)";
}

// 3. F is partial commutative.
void ac3(Verdict& v) {
  Rng rng(3033);
  const SweepSource kinds[] = {SweepSource::set, SweepSource::comatrix2, SweepSource::monoid2};
  std::size_t adm_pairs = 0, non_adm = 0;
  for (std::size_t k = 0; k < 300; ++k) {
    const SweepSource kind = kinds[k % 3];
    const auto c = sweep_source(rng, kind);
    std::vector<Functional> xs;
    for (int m = 0; m < 2; ++m) {
      const SweepMap f = random_map(rng, kind, c);
      if (f.map.target->origin().kind == Origin::Kind::linearized) {
        for (const auto& x : orthogonal_idempotent_family(f.map)) xs.push_back(x);
      }
    }
    Functional r(c->dim());
    for (auto& x : r) x = Scalar(random_rational(rng));
    xs.push_back(r);
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        if (functionals_admissible(*c, x, y)) {
          ++adm_pairs;
          v.require(conv_mul(*c, x, y) == conv_mul(*c, y, x), "admissible pair does not commute");
        } else {
          ++non_adm;
        }
      }
    }
  }
  const Coalgebra c = comatrix(2);
  const Functional e11 = dual_basis(c, "d11");
  const Functional e12 = dual_basis(c, "d12");
  v.require(!functionals_admissible(c, e11, e12), "(e11, e12) flagged admissible");
  v.require(conv_mul(c, e11, e12) != conv_mul(c, e12, e11), "(e11, e12) commute");
  v.note << adm_pairs << " admissible functional pairs commute, " << non_adm
         << " non-admissible seen; (e11, e12) non-admissible and non-commuting";
}

// 4. Orthogonal idempotent families and propositions.
void ac4(Verdict& v) {
  Rng rng(4044);
  const SweepSource kinds[] = {SweepSource::set, SweepSource::comatrix2, SweepSource::monoid2};
  std::size_t instances = 0, props = 0;
  for (std::size_t k = 0; instances < 150; ++k) {
    const SweepSource kind = kinds[k % 3];
    const auto c = sweep_source(rng, kind);
    const SweepMap f = random_map(rng, kind, c);
    if (f.map.target->origin().kind != Origin::Kind::linearized) continue;
    const auto family = orthogonal_idempotent_family(f.map);
    const CoalgebraMap back = assemble(c, f.map.target, family);
    v.require(back.mat == f.map.mat, "assemble . family != id");
    v.require(orthogonal_idempotent_family(back) == family, "family . assemble != id");
    ++instances;
    for (const auto& x : family) {
      const Proposition p(c, x);
      v.require(conv_mul(*c, p.value(), p.value()) == p.value(), "proposition is not idempotent");
      const Proposition n = prop_not(p);
      v.require(conv_mul(*c, n.value(), n.value()) == n.value(), "negated proposition is not idempotent");
      v.require(truth_value_map(p.as_map()).value() == p.value(), "truth value round trip");
      props += 2;
    }
    for (std::size_t a = 0; a + 1 < family.size(); ++a) {
      const Proposition p(c, family[a]), q(c, family[a + 1]);
      const Proposition m = prop_and(p, q), j = prop_or(p, q);
      v.require(conv_mul(*c, m.value(), m.value()) == m.value(), "meet is not idempotent");
      v.require(conv_mul(*c, j.value(), j.value()) == j.value(), "join is not idempotent");
      props += 2;
    }
  }
  v.note << instances << " round trips, " << props << " propositions idempotent";
}

// 5. Quantum Boolean algebras.
void ac5(Verdict& v) {
  for (std::size_t atoms = 1; atoms <= 3; ++atoms) {
    const QBoolStructure q = linearize_boolean(powerset_algebra(atoms));
    QBoolStructure lattice = q;
    lattice.neg.reset();
    v.require(check_structure(lattice).ok, "structure maps");
    const auto l = check_lattice_axioms(q);
    v.require(l.axioms.size() == 10 && l.ok(), "lattice axioms, atoms = " + std::to_string(atoms));
    v.require(check_complement(q).ok(), "complement, atoms = " + std::to_string(atoms));
    const auto dm = check_weak_de_morgan(q);
    v.require(dm.axioms.size() == 4 && dm.ok(), "weak de Morgan, atoms = " + std::to_string(atoms));
  }
  const BooleanTables chain = chain_lattice(3);
  const QBoolStructure c = linearize_boolean(chain);
  v.require(check_lattice_axioms(c).ok(), "3-chain lattice axioms");
  v.require(!classically_complemented(chain) && !c.neg, "3-chain reported complemented");
  v.note << "powersets of 1..3 atoms pass 10 lattice axioms, complement and 4 de Morgan laws; "
            "3-chain passes lattice axioms and is complement-free";
}

// 6. Negation uniqueness probe.
void ac6(Verdict& v) {
  // Coalgebra endomaps of a linearized set are linearized set maps, so the
  // structurally admissible involutions are exactly the involutive permutations.
  std::size_t equal = 0, rejected = 0, violated = 0;
  for (std::size_t atoms = 1; atoms <= 3; ++atoms) {
    const QBoolStructure q = linearize_boolean(powerset_algebra(atoms));
    std::size_t eq_here = 0;
    for (const auto& r : negation_uniqueness_sweep(q, involutive_permutations(q.B->dim()))) {
      switch (r.outcome) {
        case UniquenessVerdict::Outcome::equal:
          ++equal;
          ++eq_here;
          break;
        case UniquenessVerdict::Outcome::not_a_negation:
          ++rejected;
          break;
        case UniquenessVerdict::Outcome::uniqueness_violated:
          ++violated;
          break;
      }
    }
    v.require(eq_here == 1, "canonical complement not found exactly once");
  }
  v.require(violated == 0, "uniqueness violated");
  v.note << equal << " equal, " << rejected << " rejected, " << violated << " third outcomes";
}

// 7. Expectations and positivity.
void ac7(Verdict& v) {
  Rng rng(7077);
  std::size_t n = 0;
  for (std::size_t k = 0; k < 120; ++k) {
    Coalgebra c;
    State s;
    Functional x;
    switch (k % 3) {
      case 0:
        c = comatrix(2);
        s = random_comatrix_state(rng, 2);
        x = random_projection(rng, 2);
        break;
      case 1:
        c = comatrix(3);
        s = random_comatrix_state(rng, 3);
        x = random_projection(rng, 3);
        break;
      default: {
        const std::size_t d = static_cast<std::size_t>(random_int(rng, 2, 5));
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
        c = linearize(labels);
        s = random_set_state(rng, d);
        x = Functional(d);
        for (auto& xi : x) xi = Scalar(random_int(rng, 0, 1));
      }
    }
    const auto chk = check_state(c, s);
    v.require(chk.ok() && chk.witnessed, "generated state is not witnessed");
    v.require(expectation(c, conv_unit(c), s).is_one(), "<eps> != 1");
    v.require(conv_mul(c, x, x) == x && star_on_functionals(c, x) == x, "proposition not *-certified");
    const Scalar e = expectation(c, x, s);
    v.require(e.is_real() && sgn(e.re()) >= 0 && e.re() <= 1, "<x> outside [0, 1]: " + e.str());
    v.require(Scalar(positivity_check(c, x, s)) == e, "<x* x> != <x> for a projection");
    ++n;
  }
  v.note << n << " *-certified propositions with witnessed states, all in [0, 1]";
}

// 8. Leavitt oracle equivalence.
void ac8(Verdict& v) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Leavitt lpa(line_quiver(n), LpaMode::standard);
    const auto basis = closure_basis(lpa);
    v.require(basis && basis->size() == n * n, "A" + std::to_string(n) + " closure size");
    if (!basis) continue;
    // The bijection: each basis monomial goes to a single matrix unit.
    std::set<std::pair<std::size_t, std::size_t>> units;
    for (const auto& w : *basis) {
      const Matrix m = matrix_unit_image(lpa, w);
      std::vector<std::pair<std::size_t, std::size_t>> nz;
      m.for_each([&](std::size_t i, std::size_t j, const Scalar& s) {
        if (s.is_one()) nz.emplace_back(i, j);
      });
      v.require(nz.size() == 1 && m.nonzeros() == 1, "image is not a matrix unit");
      if (!nz.empty()) units.insert(nz.front());
    }
    v.require(units.size() == n * n, "images do not exhaust the matrix units");
    for (const auto& a : *basis) {
      for (const auto& b : *basis) {
        const LpaElement ab = lpa.mul(LpaElement{{a, Scalar(1)}}, LpaElement{{b, Scalar(1)}});
        v.require(matrix_unit_image(lpa, ab) == matrix_unit_image(lpa, a) * matrix_unit_image(lpa, b),
                  "table differs from matrix units");
      }
    }
  }
  const Leavitt loop(loop_quiver(), LpaMode::standard);
  auto power = [&](long k) {
    Word w;
    for (long i = 0; i < std::abs(k); ++i) w.push_back({k > 0 ? Letter::Kind::edge : Letter::Kind::ghost, 0});
    return w.empty() ? loop.unit() : loop.normalize(w);
  };
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      v.require(loop.mul(power(a), power(b)) == power(a + b), "group law at " + std::to_string(a) + "," +
                                                                  std::to_string(b));
    }
  }
  for (long a = 0; a <= 6; ++a) {
    for (long b = 0; b <= 6; ++b) {
      Word w;
      for (long i = 0; i < a; ++i) w.push_back({Letter::Kind::edge, 0});
      for (long i = 0; i < b; ++i) w.push_back({Letter::Kind::ghost, 0});
      const LpaElement x = w.empty() ? loop.unit() : loop.normalize(w);
      v.require(x == power(a - b), "p^a (p*)^b != degree a - b");
      v.require(x.size() == 1 && loop_degree(x.begin()->first) == a - b, "loop degree");
    }
  }
  v.note << "A1..A4 give 1, 4, 9, 16 basis elements isomorphic to matrix units; loop group law for |a|,|b| <= 6";
}

// 9. Rewriting confluence.
void ac9(Verdict& v) {
  Rng rng(9099);
  const std::vector<std::pair<ClassicalQuiver, LpaMode>> cases = {
      {loop_quiver(), LpaMode::standard},
      {line_quiver(2), LpaMode::standard},
      {line_quiver(3), LpaMode::standard},
      {line_quiver(3), LpaMode::absolute},
      {ClassicalQuiver{{"v"}, {{"a", "v", "v"}, {"b", "v", "v"}}}, LpaMode::standard},
      {ClassicalQuiver{{"u", "v"}, {{"a", "u", "v"}, {"b", "v", "v"}, {"c", "v", "u"}}}, LpaMode::standard},
  };
  std::size_t words = 0;
  for (const auto& [q, mode] : cases) {
    const Leavitt lpa(q, mode);
    for (int k = 0; k < 500; ++k) {
      const Word w = random_word(rng, lpa, 10);
      const LpaElement ref = lpa.normalize(w, Strategy::leftmost());
      const Strategy orders[] = {Strategy::rightmost(), Strategy::random(rng()), Strategy::random(rng()),
                                 Strategy::random(rng())};
      for (const auto& s : orders) {
        v.require(lpa.normalize(w, s) == ref, "order dependence on " + lpa.word_str(w));
      }
      for (const auto& [mono, coef] : ref) {
        v.require(lpa.is_normal_monomial(mono) && !coef.is_zero(), "non-normal output");
      }
      ++words;
    }
  }
  v.note << words << " words over " << cases.size() << " quiver/mode cases, 5 rewrite orders each";
}

// 10. Stable representations and modules.
void ac10(Verdict& v) {
  Rng rng(1010);
  std::size_t n = 0;
  for (const auto& q : {loop_quiver(), line_quiver(2)}) {
    const Leavitt lpa(q, LpaMode::standard);
    for (int k = 0; k < 30; ++k) {
      const StableRep r = random_stable_rep(rng, q);
      v.require(stable_rep_check(r).ok(), "generated rep is not stable");
      const ModuleData m = rep_to_module(r);
      const auto mc = module_check(m, lpa);
      v.require(mc.ok(), "module relation fails: " + (mc.failures.empty() ? "" : mc.failures.front()));
      v.require(same_rep(module_to_rep(m), r), "module_to_rep . rep_to_module != id");
      v.require(rep_to_module(module_to_rep(m)).edge == m.edge, "rep_to_module . module_to_rep != id");
      ++n;
    }
  }
  v.note << n << " stable representations round-tripped through modules";
}

// 11. Quiver compatibility.
void ac11(Verdict& v) {
  Rng rng(1111);
  std::vector<ClassicalQuiver> corpus = {loop_quiver()};
  for (std::size_t n = 1; n <= 5; ++n) corpus.push_back(line_quiver(n));
  corpus.push_back({{"v"}, {{"a", "v", "v"}, {"b", "v", "v"}}});
  corpus.push_back({{"a", "b", "c", "d", "f"},
                    {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}, {"e4", "c", "d"},
                     {"e5", "d", "d"}, {"e6", "a", "f"}, {"e7", "a", "f"}, {"e8", "f", "b"}}});
  for (int k = 0; k < 60; ++k) {
    ClassicalQuiver q;
    const long nv = random_int(rng, 1, 5);
    for (long i = 0; i < nv; ++i) q.vertices.push_back("v" + std::to_string(i));
    const long ne = random_int(rng, 0, 8);
    for (long e = 0; e < ne; ++e) {
      q.edges.push_back({"e" + std::to_string(e), q.vertices[static_cast<std::size_t>(random_int(rng, 0, nv - 1))],
                         q.vertices[static_cast<std::size_t>(random_int(rng, 0, nv - 1))]});
    }
    corpus.push_back(std::move(q));
  }
  for (const auto& q : corpus) v.require(quantum_quiver_check(from_classical(q)).ok, "classical quiver fails");
  const auto c = share(comatrix(2));
  Matrix tr(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) tr.set(b * 2 + a, a * 2 + b, Scalar(1));
  }
  const QuantumQuiver bad{c, c, CoalgebraMap(c, share(opposite(*c)), tr), identity_map(c)};
  const auto r = quantum_quiver_check(bad);
  bool d12 = false;
  for (auto k : r.failing) d12 = d12 || c->basis()[k] == "d12";
  v.require(!r.ok && d12, "comatrix counterexample not flagged at d12");
  v.note << corpus.size() << " classical quivers pass; comatrix counterexample fails with d12 among "
         << r.failing.size() << " failing basis elements";
}

struct Criterion {
  const char* title;
  std::function<void(Verdict&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"constructor validity", ac1},
      {"partial monoidal pairs and triples", ac2},
      {"convolution algebra is partial commutative", ac3},
      {"orthogonal idempotents and propositions", ac4},
      {"quantum Boolean algebras", ac5},
      {"negation uniqueness probe", ac6},
      {"expectation and positivity", ac7},
      {"Leavitt normal forms against oracles", ac8},
      {"rewriting confluence", ac9},
      {"stable representations and modules", ac10},
      {"quantum quiver compatibility", ac11},
  };
  std::size_t only = 0;
  if (argc > 1) only = std::stoul(argv[1]);
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && only != k + 1) continue;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].run(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.failure = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    all = all && v.ok;
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << "AC" << k + 1 << " " << criteria[k].title << ": "
              << (v.ok ? v.note.str() : v.failure) << " (" << ms << " ms)" << std::endl;
  }
  return all ? 0 : 1;
}
