// Copyright 2026 The pdeglab Authors.
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

#include <cmath>

#include "pdeglab/boolean_function.hpp"
#include "pdeglab/error.hpp"
#include "pdeglab/parallel.hpp"
#include "pdeglab/prob_polynomial.hpp"

namespace pdeglab {
namespace {

// Exact f w.p. 7/10, its complement w.p. 3/10: error 3/10 everywhere.
ProbPolynomial noisy(const BooleanFunction& f) {
  const auto p = mobius_interpolate(f);
  return from_support(f.arity(), {{p, Rational(7, 10)},
                                  {Polynomial::constant(f.arity(), 1) - p, Rational(3, 10)}});
}

TEST(ProbPolynomial, LiftExactHasZeroError) {
  const auto f = majority_function(3);
  const auto pp = lift_exact(mobius_interpolate(f));
  const auto inputs = all_inputs(3);
  const auto report = error_scan(pp, f, inputs, ErrorMode::Exact);
  EXPECT_EQ(report.max_error(), 0.0);
  EXPECT_EQ(pp.degree_bound(), 3);
}

TEST(ProbPolynomial, SupportMustBeADistribution) {
  const auto p = Polynomial::variable(1, 0);
  EXPECT_THROW(from_support(1, {{p, Rational(1, 2)}}), PreconditionError);
  EXPECT_THROW(from_support(1, {{p, Rational(3, 2)}, {p, Rational(-1, 2)}}), PreconditionError);
}

TEST(ProbPolynomial, FromSupportSamplesWithTheRightFrequencies) {
  const auto pp = noisy(or_function(2));
  int complement = 0;
  for (std::uint64_t s = 0; s < 5000; ++s) {
    complement += pp.sample(s).evaluate_mask(0) == 1;
  }
  EXPECT_NEAR(complement / 5000.0, 0.3, 0.03);
}

TEST(MajorityTail, ClosedForms) {
  EXPECT_EQ(majority_tail(1, Rational(1, 3)), Rational(1, 3));
  // 3 e^2 (1-e) + e^3 at e = 3/10
  EXPECT_EQ(majority_tail(3, Rational(3, 10)), Rational(27, 125));
  EXPECT_THROW(majority_tail(4, Rational(1, 3)), PreconditionError);
}

TEST(MajorityTail, CopiesAreMinimal) {
  const Rational eps(1, 3), delta(1, 20);
  const auto l = majority_copies(eps, delta);
  EXPECT_EQ(l % 2, 1u);
  EXPECT_LE(majority_tail(l, eps), delta);
  ASSERT_GE(l, 3u);
  EXPECT_GT(majority_tail(l - 2, eps), delta);
  EXPECT_EQ(majority_copies(eps, Rational(1, 2)), 1u);
  EXPECT_THROW(majority_copies(Rational(1, 2), delta), PreconditionError);
}

TEST(ReduceError, ThreeCopiesGiveExactTail) {
  const auto f = xor_function(2);
  const auto pp = noisy(f);
  // forcing three copies: tail(1) = 3/10 > 1/4 >= tail(3) = 0.216
  const auto reduced = reduce_error(pp, Rational(3, 10), Rational(1, 4));
  ASSERT_TRUE(reduced.support().has_value());
  EXPECT_EQ(reduced.support()->size(), 8u);
  EXPECT_EQ(reduced.degree_bound(), 3 * pp.degree_bound());
  const auto inputs = all_inputs(2);
  const auto report = error_scan(reduced, f, inputs, ErrorMode::Exact);
  for (const auto& e : report.entries) EXPECT_EQ(e.exact, Rational(27, 125));
}

TEST(ReduceError, MonteCarloAgreesWithExact) {
  const auto f = majority_function(3);
  const auto reduced = reduce_error(noisy(f), Rational(3, 10), Rational(1, 4));
  const auto inputs = all_inputs(3);
  ScanConfig cfg;
  cfg.trials = 4000;
  cfg.seed0 = 11;
  const auto mc = error_scan(reduced, f, inputs, ErrorMode::MonteCarlo, cfg);
  for (const auto& e : mc.entries) {
    EXPECT_LE(std::abs(e.estimate - 0.216), e.radius);
    EXPECT_EQ(e.trials, 4000u);
  }
}

TEST(ReduceError, DeltaAboveEpsIsIdentity) {
  const auto pp = noisy(or_function(2));
  const auto same = reduce_error(pp, Rational(1, 5), Rational(1, 3));
  EXPECT_EQ(same.degree_bound(), pp.degree_bound());
  EXPECT_EQ(same.sample(4), pp.sample(4));
}

TEST(ComposeProb, ExactErrorOfCompositionOfExact) {
  const auto outer = lift_exact(mobius_interpolate(and_function(2)));
  const std::vector<ProbPolynomial> inners = {lift_exact(mobius_interpolate(or_function(3))),
                                              lift_exact(mobius_interpolate(xor_function(3)))};
  const auto c = compose_prob(outer, inners);
  EXPECT_EQ(c.degree_bound(), 6);
  const auto f = BooleanFunction::from_rule(3, [](std::uint64_t k) {
    return k != 0 && (__builtin_popcountll(k) & 1);
  });
  const auto inputs = all_inputs(3);
  EXPECT_EQ(error_scan(c, f, inputs, ErrorMode::Exact).max_error(), 0.0);
  EXPECT_THROW(compose_prob(outer, std::span(inners.data(), 1)), ShapeError);
}

TEST(Transforms, RestrictProjectShiftComplement) {
  const auto f = majority_function(3);
  const auto pp = lift_exact(mobius_interpolate(f));
  const Restriction rho{{Fix::One, Fix::Star, Fix::Star}};
  EXPECT_EQ(restrict_prob(pp, rho).sample(0), mobius_interpolate(restrict(f, rho)));
  EXPECT_EQ(restrict_prob_keep_arity(pp, rho).sample(0),
            mobius_interpolate(restrict_keep_arity(f, rho)));
  const Projection nu{{0, 1, 1}, 2};
  EXPECT_EQ(project_prob(pp, nu).sample(0), mobius_interpolate(project(f, nu)));
  const auto shift = BitVector::from_string("101");
  EXPECT_EQ(shift_prob(pp, shift).sample(0), mobius_interpolate(xor_shift(f, shift)));
  EXPECT_EQ(complement_prob(pp).sample(0), mobius_interpolate(f.complement()));
}

TEST(ErrorReport, JsonShape) {
  const auto f = or_function(2);
  const auto inputs = all_inputs(2);
  const auto exact = to_json(error_scan(noisy(f), f, inputs, ErrorMode::Exact));
  EXPECT_EQ(exact["entries"].size(), 4u);
  EXPECT_EQ(exact["entries"][0]["exact"], "3/10");
  EXPECT_EQ(exact["summary"]["mode"], "exact");
  ScanConfig cfg;
  cfg.trials = 100;
  const auto mc = to_json(error_scan(noisy(f), f, inputs, ErrorMode::MonteCarlo, cfg));
  EXPECT_EQ(mc["summary"]["mode"], "monte_carlo");
  EXPECT_TRUE(mc["summary"].contains("confidence"));
}

TEST(ErrorReport, ExactModeNeedsSupport) {
  const auto pp = ProbPolynomial(1, 1, [](std::uint64_t) -> FormPtr {
    return std::make_shared<PolynomialForm>(Polynomial::variable(1, 0));
  });
  const auto inputs = all_inputs(1);
  EXPECT_THROW(error_scan(pp, dictator_function(1, 0), inputs, ErrorMode::Exact),
               PreconditionError);
}

TEST(Hoeffding, Radius) {
  EXPECT_NEAR(hoeffding_radius(10000, 0.999), std::sqrt(std::log(2000.0) / 20000.0), 1e-12);
}

TEST(Parallel, CountsDoNotDependOnJobs) {
  auto body = [](std::uint64_t seed, std::span<std::uint64_t> c) {
    c[0] += seed & 1;
    c[1] += derive_seed(seed, 0) % 3 == 0;
  };
  const auto one = parallel_counts(5, 1001, 2, 1, body);
  const auto four = parallel_counts(5, 1001, 2, 4, body);
  EXPECT_EQ(one, four);
  EXPECT_EQ(one[0], 501u);
}

}  // namespace
}  // namespace pdeglab
