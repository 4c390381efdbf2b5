#include "oracles.hpp"
#include "sharp/constants.hpp"

#include <gtest/gtest.h>

using namespace sharp;
using oracle::pi;

TEST(Constant, FirstOrderSupNorm) {
  const ConstantRecord r = c_pn(Params::from_p(1, kInf));
  EXPECT_NEAR(r.c_value, 4 / pi, 1e-15);
  ASSERT_TRUE(r.pipeline_value);
  EXPECT_NEAR(*r.pipeline_value, 4 / pi, 1e-10 * 4 / pi);
  ASSERT_TRUE(r.cross_check_delta);
  EXPECT_LE(*r.cross_check_delta, 1e-12);
  EXPECT_EQ(r.method, Method::ClosedForm);
  EXPECT_EQ(r.formula, FormulaId::Q1_ODD);
}

TEST(Constant, ThirdOrderSupNorm) {
  EXPECT_NEAR(c_pn(Params::from_p(3, kInf)).c_value, 48 / pi, 1e-12);
}

TEST(Constant, SecondOrderSupNormFromQuadrature) {
  // (2!/pi) 2^2 (3 sqrt 3 / 4) with the maximum at beta = 0.
  const ConstantRecord r = c_pn(Params::from_p(2, kInf));
  const double want = 6 * std::sqrt(3.0) / pi;
  EXPECT_NEAR(*r.pipeline_value, want, 1e-11 * want);
  EXPECT_NEAR(r.c_value, want, 1e-14 * want);
  EXPECT_EQ(r.beta_star, 0.0);
  EXPECT_EQ(r.formula, FormulaId::Q1_EVEN_SPLIT);
}

TEST(Constant, HilbertCase) {
  for (int n = 1; n <= 4; ++n) {
    const ConstantRecord r = c_pn(Params::from_p(n, 2));
    // n! sqrt(C(2n, n) / pi)
    const double want = std::tgamma(n + 1.0) * std::sqrt(std::tgamma(2.0 * n + 1) / (std::pow(std::tgamma(n + 1.0), 2) * pi));
    EXPECT_NEAR(r.c_value, want, 1e-12 * want) << n;
    EXPECT_LE(*r.cross_check_delta, 1e-10);
    EXPECT_EQ(r.formula, FormulaId::Q2);
  }
}

TEST(Constant, PEqualsOneLimit) {
  const ConstantRecord r = c_pn(Params::from_p(2, 1));
  EXPECT_EQ(r.method, Method::Limit);
  EXPECT_NEAR(r.c_value, 16 / pi, 1e-14);
  EXPECT_FALSE(r.pipeline_value);
}

TEST(Constant, LargeQApproachesLimit) {
  ConstantOptions opts;
  opts.gridsize = 9;
  for (int n : {1, 2}) {
    const double limit = c_pn(Params::from_p(n, 1)).c_value;
    const double c1000 = c_pn(Params::from_q(n, 1000), opts).c_value;
    EXPECT_NEAR(c1000, limit, 0.01 * limit) << n;
    EXPECT_LT(c1000, limit);
  }
}

TEST(Constant, ContinuousInQ) {
  double prev = c_pn(Params::from_q(2, 1.0)).c_value;
  for (double q = 1.25; q <= 8.0; q += 0.25) {
    const double c = c_pn(Params::from_q(2, q), {{}, 33, {}}).c_value;
    EXPECT_LT(std::abs(c - prev) / prev, 0.2) << q;
    prev = c;
  }
}

TEST(Constant, CachedRecordsAreIdentical) {
  const Params p = Params::from_p(3, 2.5);
  const ConstantRecord a = c_pn(p), b = c_pn(p);
  EXPECT_EQ(a.c_value, b.c_value);
  EXPECT_EQ(a.beta_star, b.beta_star);
}

TEST(Constant, HFactorDominated) {
  for (auto [n, p] : {std::pair{1, 2.0}, {2, 3.0}, {3, 1.5}, {2, kInf}, {1, 1.0}}) {
    const Params params = Params::from_p(n, p);
    const double c = c_pn(params).c_value;
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
      const double h = h_factor(params, r);
      EXPECT_LE(h * std::pow(1 - r * r, params.inv_p() + n), c * (1 + 1e-9)) << n << " " << p << " " << r;
    }
  }
}

TEST(Bound, Examples) {
  const ConstantRecord r = c_pn(Params::from_p(1, kInf));
  EXPECT_NEAR(bound_rhs(r, {0.0, 1.0}), 4 / pi, 1e-15);
  EXPECT_EQ(bound_rhs(r, {0.3, 0.0}), 0.0);
  EXPECT_NEAR(bound_rhs(r, {0.5, 2.0}), 32 / (3 * pi), 1e-14);
  EXPECT_NEAR(bound_rhs(r, {std::polar(0.5, 1.0), 2.0}), 32 / (3 * pi), 1e-14);
  EXPECT_THROW(bound_rhs(r, {1.0, 1.0}), std::domain_error);
  EXPECT_THROW(bound_rhs(r, {0.2, -1.0}), std::domain_error);
}

TEST(Bound, OverflowGivesInfinity) {
  const ConstantRecord r = c_pn(Params::from_p(40, kInf));
  EXPECT_TRUE(std::isinf(bound_rhs(r, {1 - 1e-15, 1e300})));
}

TEST(DomainBound, Examples) {
  EXPECT_NEAR(domain_bound(1, 1.0), 4 / pi, 1e-15);
  EXPECT_NEAR(domain_bound(3, 2.0), 6 / pi, 1e-13);
  EXPECT_EQ(domain_bound(1, INFINITY), 0.0);
  EXPECT_THROW(domain_bound(1, 0.0), std::domain_error);
}

TEST(DomainBound, DiskInstance) {
  // Unit disk: dist(z, boundary) = 1 - |z|. A Fejer mean of the strip map has
  // |Re f| <= 1, so |f'(z)| must respect the domain bound.
  for (double r : {0.0, 0.2, 0.5, 0.8}) {
    std::complex<double> d = 0.0;
    for (int k = 1; k <= 201; k += 2) d += 4.0 / pi * (1.0 - k / 202.0) * std::pow(std::complex<double>(r, 0.0), k - 1);
    EXPECT_LE(std::abs(d), domain_bound(1, 1 - r)) << r;
  }
}

TEST(Bloch, Conventions) {
  const BlochBound b = bloch_order_n(1);
  EXPECT_NEAR(b.value, 4 / pi, 1e-15);
  EXPECT_NEAR(b.oscillation_form, 8 / pi, 1e-15);
  EXPECT_TRUE(b.odd);
  EXPECT_EQ(bloch_order_n(1, 0.0).value, 0.0);
  EXPECT_NEAR(bloch_order_n(3, 1.0).value, 24 / pi, 1e-13);
  EXPECT_FALSE(bloch_order_n(2).odd);
}

TEST(Bloch, EvenLiteralDiagnostic) {
  EXPECT_NEAR(theorem_even_literal(2) * 4, c_pn(Params::from_p(2, kInf)).c_value, 1e-14);
  EXPECT_THROW(theorem_even_literal(3), std::domain_error);
}
