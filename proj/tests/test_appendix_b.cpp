#include "oracles.hpp"
#include "sharp/appendix_b.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

using namespace sharp;
using namespace sharp::appb;
using oracle::pi;

namespace {

double d(const BigFloat& x) { return static_cast<double>(x); }

// Direct double precision sum, used only for small s.
double f_direct(int s, double beta) {
  double sum = 0.0;
  for (int k = 1; k <= s; ++k) sum += std::pow(std::sin((k * pi - beta) / s), s);
  return sum;
}

// ln(u!!) for odd u.
double log_odd_df(int u) { return std::lgamma(u + 1.0) - 0.5 * (u - 1) * std::log(2.0) - std::lgamma(0.5 * (u + 1)); }

double log10_gl_oracle(int s, int l) {
  const double ln = std::log(4 / pi) + std::lgamma(s + 1.0) + log_odd_df((2 * l - 1) * s) - std::log(2.0 * l - 1) -
                    log_odd_df((2 * l + 1) * s);
  return ln / std::log(10.0);
}

const PrecisionCtx kCtx{60};

}  // namespace

TEST(AppendixB, SmallSums) {
  EXPECT_NEAR(d(g0(3, kCtx)), 4 / pi, 1e-15);
  for (const char* b : {"0", "0.3", "pi/2", "1.1"}) EXPECT_NEAR(d(f_sum(4, b, kCtx)), 1.5, 1e-15) << b;
  EXPECT_NEAR(d(f_sum(3, "0", kCtx)), 3 * std::sqrt(3.0) / 4, 1e-15);
  for (int s : {3, 5, 6, 9}) {
    for (double b : {0.0, 0.4, 1.3, 2.9}) EXPECT_NEAR(d(f_sum(s, std::to_string(b), kCtx)), f_direct(s, b), 1e-13);
  }
}

TEST(AppendixB, RejectsLowPrecision) {
  EXPECT_THROW(f_sum(5, "0", PrecisionCtx{20}), std::invalid_argument);
  EXPECT_THROW(gl(4, 1, kCtx), std::invalid_argument);  // s must be odd
}

TEST(AppendixB, GlMatchesLogGamma) {
  for (int s : {3, 7, 19, 99, 301}) {
    for (int l = 1; l <= 3; ++l) {
      EXPECT_NEAR(log10_abs_gl(s, l), log10_gl_oracle(s, l), 1e-9) << s << " " << l;
      const unsigned digits = 20 + static_cast<unsigned>(-log10_gl_oracle(s, l));
      const BigFloat v = gl(s, l, PrecisionCtx{std::max(digits, kMinDigits)});
      PrecisionScope scope(PrecisionCtx{std::max(digits, kMinDigits)});
      EXPECT_NEAR(d(log10(abs(v))), log10_gl_oracle(s, l), 1e-9) << s << " " << l;
    }
  }
}

TEST(AppendixB, GlSignAlternates) {
  // (-1)^{m+l-1}, s = 2m + 1.
  for (int s : {3, 5, 99, 101}) {
    const int m = (s - 1) / 2;
    for (int l = 1; l <= 4; ++l) {
      const double v = d(gl(s, l, PrecisionCtx{600}));
      EXPECT_EQ(v < 0, (m + l - 1) % 2 == 1) << s << " " << l;
    }
  }
}

TEST(AppendixB, HundredDigitAnchors) {
  const PrecisionCtx ctx{recommended_digits(99, 3)};
  const CascadeResult c = residual_cascade(99, maximum_point(99), 3, ctx);
  ASSERT_EQ(c.residuals.size(), 3u);
  EXPECT_NEAR(d(abs(c.residuals[0])) / 2.5799047817666032e-70, 1.0, 1e-15);
  EXPECT_NEAR(d(abs(c.residuals[1])) / 5.9110594089304202e-102, 1.0, 1e-15);
  EXPECT_NEAR(d(abs(c.residuals[2])) / 7.92129489904e-120, 1.0, 1e-11);
  EXPECT_LE(c.digits_consumed, ctx.digits - 10.0);
}

TEST(AppendixB, CascadeDecay) {
  // Each residual is dominated by the next term of the series.
  for (int s : {19, 49, 99, 101}) {
    const int levels = 3;
    const CascadeResult c = residual_cascade(s, maximum_point(s), levels, PrecisionCtx{recommended_digits(s, levels)});
    for (int l = 0; l < levels; ++l) {
      PrecisionScope scope(PrecisionCtx{c.digits});
      const double ratio = d(abs(c.residuals[l]) / c.next_terms[l]);
      EXPECT_GT(ratio, 0.5) << s << " " << l;
      EXPECT_LT(ratio, 2.0) << s << " " << l;
      if (l + 1 < levels) EXPECT_LT(d(abs(c.residuals[l + 1])), d(abs(c.residuals[l]))) << s << " " << l;
    }
  }
}

TEST(AppendixB, CascadeDetectsPrecisionLoss) {
  EXPECT_THROW(residual_cascade(99, "-pi/2", 3, PrecisionCtx{80}), PrecisionError);
}

TEST(AppendixB, MaximumPointAlternates) {
  EXPECT_EQ(maximum_point(5), "0");
  EXPECT_EQ(maximum_point(3), "-pi/2");
  EXPECT_EQ(maximum_point(99), "-pi/2");
  EXPECT_EQ(maximum_point(101), "0");
  // The chosen point beats nearby offsets.
  for (int s : {5, 7, 9}) {
    const double at = d(g_shifted(s, maximum_point(s), kCtx));
    const double base = maximum_point(s) == "0" ? 0.0 : -pi / 2;
    for (double h : {-0.2, -0.05, 0.05, 0.2}) EXPECT_GE(at, f_direct(s, base + h + pi / 2) - 1e-14) << s << " " << h;
  }
}

TEST(AppendixB, GSymmetries) {
  for (int s : {3, 5, 7}) {
    for (const char* x : {"0.37", "pi/5", "1.9"}) {
      const std::string neg = std::string("-") + x;
      EXPECT_NEAR(d(g_shifted(s, x, kCtx)), d(g_shifted(s, neg, kCtx)), 1e-50) << s << " " << x;
    }
    // g(x + s pi) = -g(x) through f: beta = pi/7 + s pi.
    const std::string shifted = std::to_string(1 + 7 * s) + "*pi/7";
    EXPECT_NEAR(d(f_sum(s, shifted, kCtx)), -d(f_sum(s, "pi/7", kCtx)), 1e-50) << s;
  }
}

TEST(AppendixB, FourierExpansionIsShifted) {
  for (int s : {3, 5, 7, 99}) {
    const PrecisionCtx ctx{std::max(60u, recommended_digits(s))};
    for (const char* x : {"0", "0.3", "-pi/2", "2.2"}) {
      const BigFloat err = fourier_expansion_check(s, x, ctx);
      PrecisionScope scope(ctx);
      EXPECT_LT(d(err), std::pow(10.0, -static_cast<double>(ctx.digits) + 5)) << s << " " << x;
    }
    const ConventionReport r = resolve_fourier_convention(s, "0.3", ctx);
    EXPECT_EQ(r.convention, FourierConvention::Shifted) << s;
  }
}

TEST(AppendixB, ShiftIdentity) {
  for (int s : {3, 5, 99}) {
    const PrecisionCtx ctx{120};
    for (const char* b : {"0", "pi/3", "0.71"}) {
      EXPECT_LT(d(shift_identity_check(s, b, ctx)), 1e-110) << s << " " << b;
    }
  }
}

TEST(AppendixB, AsymptoticRate) {
  const auto rates = asymptotic_probe({19, 49, 99, 201, 301}, PrecisionCtx{40});
  ASSERT_EQ(rates.size(), 5u);
  for (std::size_t i = 0; i + 1 < rates.size(); ++i) EXPECT_LT(rates[i].rate, rates[i + 1].rate);
  for (const auto& r : rates) {
    EXPECT_LT(r.rate, 27.0);
    // Independent: exp(-(2/s) log10 g_1 ln 10) = ((4/pi) s! s!! / (3s)!!)^{-2/s}.
    EXPECT_NEAR(r.rate, std::exp(-2.0 / r.s * log10_gl_oracle(r.s, 1) * std::log(10.0)), 1e-9 * r.rate) << r.s;
  }
  EXPECT_LT(rates.back().relative_gap, 0.025);
  EXPECT_THROW(asymptotic_probe({49, 19}, PrecisionCtx{40}), std::invalid_argument);
}

TEST(AppendixB, RecommendedDigits) {
  EXPECT_EQ(recommended_digits(99, 3), 158u);
  EXPECT_GE(recommended_digits(99, 1), 15u + static_cast<unsigned>(std::ceil(1.2 * 99 * std::log10(3.0))));
  EXPECT_LT(recommended_digits(19), recommended_digits(99));
}
