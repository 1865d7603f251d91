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

#include <gtest/gtest.h>

#include "qcomb/quiver.hpp"

namespace qcomb {
namespace {

Matrix transpose_matrix(std::size_t n) {
  Matrix tr(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) tr.set(b * n + a, a * n + b, Scalar(1));
  }
  return tr;
}

TEST(QuantumQuiver, ClassicalQuiversPass) {
  for (const auto& q : {loop_quiver(), line_quiver(1), line_quiver(4)}) {
    EXPECT_TRUE(quantum_quiver_check(from_classical(q)).ok);
  }
}

TEST(QuantumQuiver, ComatrixOverSingletonPasses) {
  const auto c = share(comatrix(2));
  const auto s = share(singleton());
  QuantumQuiver q{c, s, collapse(c), collapse(c)};
  q.d0 = CoalgebraMap(c, share(opposite(*s)), collapse(c).mat);
  EXPECT_TRUE(quantum_quiver_check(q).ok);
}

TEST(QuantumQuiver, ComatrixCounterexample) {
  const auto c = share(comatrix(2));
  const QuantumQuiver q{c, c, CoalgebraMap(c, share(opposite(*c)), transpose_matrix(2)),
                        identity_map(c)};
  const auto r = quantum_quiver_check(q);
  EXPECT_FALSE(r.ok);
  std::vector<std::string> failing;
  for (auto k : r.failing) failing.push_back(c->basis()[k]);
  EXPECT_NE(std::find(failing.begin(), failing.end(), "d12"), failing.end());
}

TEST(QuantumQuiver, LiteralReadingDiffersOnLineQuiver) {
  const auto q = from_classical(line_quiver(3));
  EXPECT_TRUE(quantum_quiver_check(q).ok);
  const auto lit = quantum_quiver_check(q, true);
  EXPECT_EQ(lit.reading, "literal");
  EXPECT_FALSE(lit.ok);
  EXPECT_TRUE(quantum_quiver_check(from_classical(loop_quiver()), true).ok);
}

TEST(QuantumQuiver, ClassicalPointsRoundTrip) {
  const ClassicalQuiver q = line_quiver(3);
  const ClassicalQuiver back = classical_points(from_classical(q));
  EXPECT_EQ(back.vertices, q.vertices);
  ASSERT_EQ(back.edges.size(), q.edges.size());
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    EXPECT_EQ(back.edges[e].s, q.edges[e].s);
    EXPECT_EQ(back.edges[e].t, q.edges[e].t);
  }
}

TEST(Comodule, RegularAndGraded) {
  EXPECT_TRUE(comodule_validate(regular_comodule(share(comatrix(2)))).ok());
  const auto kv = share(linearize({"u", "v", "w"}));
  EXPECT_TRUE(comodule_validate(graded_comodule(kv, {2, 0, 1})).ok());
}

TEST(Comodule, SwappedBasisFailsCounit) {
  const auto kv = share(linearize({"u", "v"}));
  Comodule m = graded_comodule(kv, {1, 1});
  // The two basis vectors trade places: m_0 -> m_1 (x) u.
  m.coaction = Matrix(4, 2);
  m.coaction.set(1 * 2 + 0, 0, Scalar(1));
  m.coaction.set(0 * 2 + 1, 1, Scalar(1));
  const auto chk = comodule_validate(m);
  EXPECT_FALSE(chk.counital);
  EXPECT_EQ(chk.witness, std::optional<std::size_t>(0));
}

TEST(Corestrict, IdentityAndSetMap) {
  const auto c = share(comatrix(2));
  const Comodule reg = regular_comodule(c);
  EXPECT_EQ(corestrict(identity_map(c), reg).coaction, reg.coaction);
  const auto kv = share(linearize({"a", "b", "c"}));
  const auto kw = share(linearize({"x", "y"}));
  const Comodule m = graded_comodule(kv, {1, 2, 3});
  const Comodule fm = corestrict(set_map(kv, kw, {0, 1, 0}), m);
  EXPECT_TRUE(comodule_validate(fm).ok());
  // Fibers merge: x gets a and c (dim 4), y gets b (dim 2).
  const Matrix hom_x = comodule_homs(graded_comodule(kw, {1, 0}), fm);
  EXPECT_EQ(hom_x.cols(), 4u);
  const Comodule triv = corestrict(collapse(c), reg);
  EXPECT_TRUE(comodule_validate(triv).ok());
  EXPECT_EQ(comodule_homs(graded_comodule(share(singleton()), {1}), triv).cols(), 4u);
}

TEST(Cotensor, OverTheCoalgebraItself) {
  const auto kv = share(linearize({"a", "b"}));
  const Comodule n = graded_comodule(kv, {2, 1});
  const Cotensor box = cotensor(n, as_left_comodule_of(identity_map(kv)));
  EXPECT_EQ(box.basis.cols(), n.dim);
  const auto c = share(comatrix(2));
  const Cotensor box2 = cotensor(regular_comodule(c), as_left_comodule_of(identity_map(c)));
  EXPECT_EQ(box2.basis.cols(), 4u);
}

TEST(Cotensor, OverSingletonIsTensor) {
  const auto s = share(singleton());
  const Comodule n = graded_comodule(s, {3});
  Comodule l = graded_comodule(share(opposite(*s)), {2});
  EXPECT_EQ(cotensor(n, l).basis.cols(), 6u);
}

TEST(Coinduce, PullbackAlongSetMap) {
  const auto kv = share(linearize({"a", "b", "c"}));
  const auto kw = share(linearize({"x", "y"}));
  const auto f = set_map(kv, kw, {0, 1, 0});
  const Coinduced ci = coinduce(f, graded_comodule(kw, {2, 3}));
  EXPECT_TRUE(comodule_validate(ci.comodule).ok());
  EXPECT_EQ(ci.comodule.dim, 2u + 3u + 2u);
  // (f^* N)_s = N_{f(s)}
  for (std::size_t s = 0; s < 3; ++s) {
    std::vector<std::size_t> probe(3, 0);
    probe[s] = 1;
    const std::size_t expected = f.mat.at(0, s).is_one() ? 2 : 3;
    EXPECT_EQ(comodule_homs(graded_comodule(kv, probe), ci.comodule).cols(), expected);
  }
}

TEST(Adjunction, Identity) {
  const auto c = share(comatrix(2));
  EXPECT_TRUE(adjunction_check(identity_map(c), regular_comodule(c), regular_comodule(c)).ok());
}

TEST(Adjunction, SetMapHomDimensions) {
  const auto ab = share(linearize({"a", "b"}));
  const auto x = share(linearize({"x"}));
  const auto r = adjunction_check(set_map(ab, x, {0, 0}), graded_comodule(ab, {1, 1}),
                                  graded_comodule(x, {1}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.hom_left, 2u);
  EXPECT_EQ(r.hom_right, 2u);
}

TEST(Adjunction, OmegaToPoint) {
  const auto o = share(omega());
  const auto f = collapse(o);
  EXPECT_TRUE(adjunction_check(f, regular_comodule(o), regular_comodule(f.target)).ok());
}

TEST(Adjunction, LeftAdjointOnlyForSetMaps) {
  const auto ab = share(linearize({"a", "b"}));
  const auto x = share(linearize({"x"}));
  const Comodule m = graded_comodule(ab, {1, 2});
  EXPECT_EQ(discrete_left_adjoint(set_map(ab, x, {0, 0}), m).dim, 3u);
  const auto c = share(comatrix(2));
  EXPECT_THROW(discrete_left_adjoint(identity_map(c), regular_comodule(c)), Error);
}

}  // namespace
}  // namespace qcomb
