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

#include "qcomb/random.hpp"

namespace qcomb {
namespace {

CoalgebraMap transpose_map(const CoalgebraPtr& c) {
  Matrix tr(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) tr.set(b * 2 + a, a * 2 + b, Scalar(1));
  }
  return CoalgebraMap(c, share(opposite(*c)), tr);
}

TEST(Admissible, CocommutativeSourceAlwaysAdmissible) {
  const auto s = share(linearize({"a", "b", "c"}));
  const auto t = share(omega());
  EXPECT_TRUE(is_admissible(set_map(s, t, {0, 1, 1}), set_map(s, t, {1, 1, 0})).ok);
}

TEST(Admissible, IdentityPairOnComatrixFails) {
  const auto c = share(comatrix(2));
  const auto adm = is_admissible(identity_map(c), identity_map(c));
  EXPECT_FALSE(adm.ok);
  std::vector<std::string> failing;
  for (auto k : adm.failing) failing.push_back(c->basis()[k]);
  EXPECT_NE(std::find(failing.begin(), failing.end(), "d12"), failing.end());
  EXPECT_FALSE(try_pair(identity_map(c), identity_map(c)).has_value());
}

TEST(Admissible, CounitCollapseIsAlwaysAdmissible) {
  const auto c = share(comatrix(2));
  EXPECT_TRUE(is_admissible(identity_map(c), collapse(c)).ok);
  EXPECT_TRUE(is_admissible(collapse(c), transpose_map(c)).ok);
}

TEST(Admissible, RequiresVerifiedMaps) {
  const auto s = share(linearize({"a"}));
  Matrix m(1, 1);
  m.set(0, 0, Scalar(2));
  EXPECT_THROW(is_admissible(CoalgebraMap(s, s, m), identity_map(s)), Error);
}

TEST(Pair, SetMapsGiveProductMap) {
  const auto s = share(linearize({"a", "b", "c"}));
  const auto t1 = share(linearize({"x", "y"}));
  const auto t2 = share(linearize({"u", "v"}));
  const CoalgebraMap p = pair(certify(set_map(s, t1, {0, 1, 1}), set_map(s, t2, {1, 1, 0})));
  // (a, b, c) -> ((x,v), (y,v), (y,u))
  EXPECT_EQ(p.target->basis(), (std::vector<std::string>{"(x,u)", "(x,v)", "(y,u)", "(y,v)"}));
  EXPECT_EQ(p.mat, set_map(s, share(linearize(p.target->basis())), {1, 3, 2}).mat);
  EXPECT_TRUE(is_coalgebra_map(p).ok);
}

TEST(Pair, CounitCollapseIsTheUnitLaw) {
  const auto c = share(comatrix(2));
  const CoalgebraMap p = pair(certify(identity_map(c), collapse(c)));
  EXPECT_EQ(p.mat, identity_map(c).mat);
}

TEST(Pair, GrouplikeValuedMapsIntoOmega) {
  const auto s = share(linearize({"a", "b"}));
  const auto t = share(omega());
  const CoalgebraMap p = pair(certify(set_map(s, t, {0, 1}), set_map(s, t, {1, 0})));
  EXPECT_TRUE(is_coalgebra_map(p).ok);
  EXPECT_EQ(p.target->dim(), 4u);
}

TEST(PartialAssoc, SetMaps) {
  const auto s = share(linearize({"a", "b"}));
  const auto t = share(omega());
  const auto r = partial_assoc_check(set_map(s, t, {0, 1}), set_map(s, t, {1, 1}),
                                     set_map(s, t, {1, 0}));
  EXPECT_TRUE(r.left_defined && r.right_defined && r.maps_equal);
  EXPECT_TRUE(r.ok());
}

TEST(PartialAssoc, CollapseReducesToPair) {
  const auto c = share(comatrix(2));
  const auto r = partial_assoc_check(identity_map(c), identity_map(c), collapse(c));
  EXPECT_FALSE(r.left_defined);
  EXPECT_FALSE(r.right_defined);
  EXPECT_TRUE(r.ok());
}

TEST(PartialAssoc, RandomComatrixTriples) {
  Rng rng(11);
  const auto c = share(comatrix(2));
  for (int k = 0; k < 40; ++k) {
    const auto a = random_map(rng, SweepSource::comatrix2, c);
    const auto b = random_map(rng, SweepSource::comatrix2, c);
    const auto d = random_map(rng, SweepSource::comatrix2, c);
    EXPECT_TRUE(partial_assoc_check(a.map, b.map, d.map).ok()) << k;
  }
}

TEST(Reassociate, IsAPermutation) {
  const Matrix r = reassociate(2, 3, 2);
  EXPECT_EQ(r.rows(), 12u);
  EXPECT_EQ(r * r.transpose(), Matrix::identity(12));
}

TEST(Convolution, SetsArePointwise) {
  const Coalgebra s = linearize({"a", "b", "c"});
  const Functional x = {Scalar(2), Scalar(3), Scalar(0)};
  const Functional y = {Scalar(5), Scalar::parse("1/3"), Scalar(7)};
  EXPECT_EQ(conv_mul(s, x, y), (Functional{Scalar(10), Scalar(1), Scalar(0)}));
  EXPECT_EQ(conv_mul(s, conv_unit(s), x), x);
}

TEST(Convolution, ComatrixIsMatrixAlgebra) {
  const Coalgebra c = comatrix(2);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t cc = 0; cc < 2; ++cc) {
        for (std::size_t d = 0; d < 2; ++d) {
          const Functional p = conv_mul(c, dual_basis(c, a * 2 + b), dual_basis(c, cc * 2 + d));
          const Functional expected = b == cc ? dual_basis(c, a * 2 + d) : Functional(4);
          EXPECT_EQ(p, expected);
        }
      }
    }
  }
}

TEST(FunctionalsAdmissible, DiagonalAndOffDiagonal) {
  const Coalgebra c = comatrix(2);
  const Functional e11 = dual_basis(c, "d11");
  const Functional e12 = dual_basis(c, "d12");
  const Functional e22 = dual_basis(c, "d22");
  EXPECT_TRUE(functionals_admissible(c, e11, e22));
  EXPECT_TRUE(is_zero(conv_mul(c, e11, e22)));
  EXPECT_TRUE(is_zero(conv_mul(c, e22, e11)));
  EXPECT_FALSE(functionals_admissible(c, e11, e12));
  EXPECT_EQ(conv_mul(c, e11, e12), e12);
  EXPECT_TRUE(is_zero(conv_mul(c, e12, e11)));
  const Coalgebra s = linearize({"a", "b"});
  EXPECT_TRUE(functionals_admissible(s, {Scalar(1), Scalar(2)}, {Scalar(3), Scalar(5)}));
}

TEST(OrthogonalIdempotents, AssembleIntoOmega) {
  const auto c = share(comatrix(2));
  const auto t = share(omega());
  const CoalgebraMap f = assemble(c, t, {dual_basis(*c, "d22"), dual_basis(*c, "d11")});
  EXPECT_TRUE(is_coalgebra_map(f).ok);
  EXPECT_EQ(f.mat.at(1, 0), Scalar(1));
  EXPECT_EQ(f.mat.at(0, 3), Scalar(1));
  EXPECT_TRUE(f.mat.row(0).size() == 1 && f.mat.row(1).size() == 1);
  const auto fam = orthogonal_idempotent_family(f);
  EXPECT_EQ(assemble(c, t, fam).mat, f.mat);
}

TEST(OrthogonalIdempotents, SetMapsGiveFiberIndicators) {
  const auto s = share(linearize({"a", "b", "c"}));
  const auto t = share(linearize({"x", "y"}));
  const auto fam = orthogonal_idempotent_family(set_map(s, t, {1, 0, 1}));
  EXPECT_EQ(fam[0], (Functional{Scalar(0), Scalar(1), Scalar(0)}));
  EXPECT_EQ(fam[1], (Functional{Scalar(1), Scalar(0), Scalar(1)}));
}

TEST(OrthogonalIdempotents, SingletonTargetIsCounit) {
  const auto c = share(comatrix(3));
  const auto fam = orthogonal_idempotent_family(collapse(c));
  ASSERT_EQ(fam.size(), 1u);
  EXPECT_EQ(fam[0], conv_unit(*c));
}

TEST(OrthogonalIdempotents, RejectsNonOrthogonal) {
  const auto c = share(comatrix(2));
  EXPECT_THROW(assemble(c, share(omega()), {dual_basis(*c, "d11"), dual_basis(*c, "d11")}), Error);
}

}  // namespace
}  // namespace qcomb
