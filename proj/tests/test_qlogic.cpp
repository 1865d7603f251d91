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

TEST(Proposition, TruthValueMaps) {
  const auto c = share(comatrix(2));
  const auto t = share(omega());
  EXPECT_EQ(truth_value_map(assemble(c, t, {Functional(4), conv_unit(*c)})).value(), conv_unit(*c));
  EXPECT_TRUE(is_zero(truth_value_map(assemble(c, t, {conv_unit(*c), Functional(4)})).value()));
  const auto f = assemble(c, t, {dual_basis(*c, "d22"), dual_basis(*c, "d11")});
  EXPECT_EQ(truth_value_map(f).value(), dual_basis(*c, "d11"));
  EXPECT_EQ(truth_value_map(f).as_map().mat, f.mat);
}

TEST(Proposition, RejectsNonIdempotent) {
  const auto c = share(comatrix(2));
  EXPECT_THROW(Proposition(c, dual_basis(*c, "d12")), Error);
}

TEST(Proposition, Connectives) {
  const auto c = share(comatrix(2));
  const Proposition p(c, dual_basis(*c, "d11"));
  const Proposition q(c, dual_basis(*c, "d22"));
  EXPECT_EQ(prop_and(p, prop_top(c)).value(), p.value());
  EXPECT_TRUE(is_zero(prop_and(p, q).value()));
  EXPECT_EQ(prop_or(p, q).value(), conv_unit(*c));
  EXPECT_EQ(prop_not(p).value(), q.value());
  EXPECT_TRUE(is_zero(prop_and(p, prop_bot(c)).value()));
}

TEST(Proposition, NonCommutingPairRejected) {
  Rng rng(3);
  const auto c = share(comatrix(2));
  const Proposition p(c, dual_basis(*c, "d11"));
  Functional x(4);  // [[1,1],[0,0]] is idempotent but does not commute with E11
  x[0] = Scalar(1);
  x[1] = Scalar(1);
  const Proposition q(c, x);
  EXPECT_THROW(prop_and(p, q), Error);
}

TEST(Proposition, IndicatorsOnSetsAreMinMax) {
  const auto s = share(linearize({"a", "b", "c"}));
  const Proposition p(s, {Scalar(1), Scalar(1), Scalar(0)});
  const Proposition q(s, {Scalar(0), Scalar(1), Scalar(1)});
  EXPECT_EQ(prop_and(p, q).value(), (Functional{Scalar(0), Scalar(1), Scalar(0)}));
  EXPECT_EQ(prop_or(p, q).value(), (Functional{Scalar(1), Scalar(1), Scalar(1)}));
}

TEST(Expectation, Basics) {
  const Coalgebra o = omega();
  State s;
  s.coords = {Scalar::parse("1/3"), Scalar::parse("2/3")};
  EXPECT_TRUE(check_state(o, s).ok());
  EXPECT_TRUE(expectation(o, conv_unit(o), s).is_one());
  EXPECT_TRUE(expectation(o, Functional(2), s).is_zero());
  // Oracle: direct evaluation gives 2/3.
  EXPECT_EQ(expectation(o, dual_basis(o, "top"), s).str(), "2/3");
}

TEST(Expectation, UnnormalizedStateIsReported) {
  State s;
  s.coords = {Scalar(1), Scalar(1)};
  EXPECT_FALSE(check_state(omega(), s).ok());
}

TEST(Positivity, CounitGivesOne) {
  Rng rng(5);
  const Coalgebra c = comatrix(2);
  const State s = random_comatrix_state(rng, 2);
  EXPECT_EQ(positivity_check(c, conv_unit(c), s), Rational(1));
}

TEST(Positivity, TruthValueOnOmegaIsAProbability) {
  Rng rng(9);
  const Coalgebra o = omega();
  for (int k = 0; k < 10; ++k) {
    const State s = random_set_state(rng, 2);
    ASSERT_TRUE(check_state(o, s).ok());
    const Scalar e = expectation(o, dual_basis(o, "top"), s);
    EXPECT_TRUE(e.is_real());
    EXPECT_GE(sgn(e.re()), 0);
    EXPECT_LE(e.re(), 1);
    EXPECT_EQ(Scalar(positivity_check(o, dual_basis(o, "top"), s)), e);
  }
}

TEST(Positivity, StarOnFunctionalsReversesProducts) {
  const Coalgebra c = comatrix(2);
  const Functional x = {Scalar::parse("1+1 i"), Scalar(2), Scalar(0), Scalar::parse("0-3 i")};
  const Functional y = {Scalar(1), Scalar::parse("1/2 i"), Scalar(5), Scalar(0)};
  EXPECT_EQ(star_on_functionals(c, star_on_functionals(c, x)), x);
  EXPECT_EQ(star_on_functionals(c, conv_mul(c, x, y)),
            conv_mul(c, star_on_functionals(c, y), star_on_functionals(c, x)));
  EXPECT_THROW(star_on_functionals(fd_monoid_additive(2), Functional(3)), Error);
}

TEST(Positivity, ConvexCombination) {
  Rng rng(13);
  const Coalgebra c = comatrix(2);
  const State s0 = random_comatrix_state(rng, 2);
  const State s1 = random_comatrix_state(rng, 2);
  const auto mix = convex_combination(s0, s1, Rational(9, 25));
  ASSERT_TRUE(mix.has_value());
  EXPECT_TRUE(check_state(c, *mix).ok());
  EXPECT_TRUE(check_state(c, *mix).witnessed);
  EXPECT_FALSE(convex_combination(s0, s1, Rational(1, 2)).has_value());
}

TEST(Positivity, MissingWitnessIsAnError) {
  State s;
  s.coords = {Scalar(1), Scalar(0)};
  EXPECT_THROW(positivity_check(omega(), conv_unit(omega()), s), Error);
}

}  // namespace
}  // namespace qcomb
