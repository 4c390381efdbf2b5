#include "sharp/appendix_b.hpp"

#include "sharp/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sharp::appb {

namespace {

using Rational = boost::multiprecision::mpq_rational;

void check_digits(PrecisionCtx ctx) {
  if (ctx.digits < kMinDigits) throw std::invalid_argument("appendix-b: digits must be >= 30");
}

void check_odd(int s) {
  if (s < 3 || s % 2 == 0) throw std::invalid_argument("appendix-b: s must be odd and >= 3");
}

// Callers hold a PrecisionScope.
BigFloat f_at(int s, const BigFloat& beta) {
  if (s < 1) throw std::invalid_argument("appendix-b: s must be >= 1");
  const BigFloat pi = big_pi();
  BigFloat sum = 0;
  for (int k = 1; k <= s; ++k) sum += pow(sin((pi * k - beta) / s), s);
  return sum;
}

BigFloat expansion_at(int s, const BigFloat& x) {
  const BigFloat pi = big_pi();
  const int m = (s - 1) / 2;
  BigFloat sum = 0;
  for (int j = 0; j <= s; ++j) {
    const int t = s - 2 * j;
    BigFloat term = to_big(binomial_exact(s, j)) * cos(x * t / s) / sin(pi * t / (2 * s));
    sum += j % 2 == 0 ? term : BigFloat(-term);
  }
  sum /= pow(BigFloat(2), s);
  return m % 2 == 0 ? sum : BigFloat(-sum);
}

BigFloat gl_at(int s, int l) {
  const int m = (s - 1) / 2;
  const unsigned lo = (2 * l - 1) * s;
  const unsigned hi = (2 * l + 1) * s;
  const Rational core(ExactInt(factorial_exact(s) * double_factorial(lo)), ExactInt(double_factorial(hi) * (2 * l - 1)));
  BigFloat value;
  value = core;
  value = value * 4 / big_pi();
  return (m + l - 1) % 2 == 0 ? value : BigFloat(-value);
}

double log10_double_factorial(int u) {
  // u!! = u! / (2^{(u-1)/2} ((u-1)/2)!) for odd u.
  const double k = (u - 1) / 2.0;
  return (std::lgamma(u + 1.0) - k * std::log(2.0) - std::lgamma(k + 1.0)) / std::numbers::ln10;
}

}  // namespace

BigFloat f_sum(int s, const std::string& beta, PrecisionCtx ctx) {
  check_digits(ctx);
  PrecisionScope scope(ctx);
  return f_at(s, parse_angle(beta));
}

BigFloat g_shifted(int s, const std::string& x, PrecisionCtx ctx) {
  check_digits(ctx);
  PrecisionScope scope(ctx);
  return f_at(s, parse_angle(x) + big_pi() / 2);
}

BigFloat g0(int s, PrecisionCtx ctx) {
  check_digits(ctx);
  if (s < 1) throw std::invalid_argument("appendix-b: s must be >= 1");
  PrecisionScope scope(ctx);
  const BigFloat half("0.5");
  const BigFloat hs = BigFloat(s) / 2;
  return BigFloat(2 * tgamma(hs + half) / (tgamma(half) * tgamma(hs)));
}

BigFloat gl(int s, int l, PrecisionCtx ctx) {
  check_digits(ctx);
  check_odd(s);
  if (l < 1) throw std::invalid_argument("appendix-b: l must be >= 1");
  PrecisionScope scope(ctx);
  return gl_at(s, l);
}

double log10_abs_gl(int s, int l) {
  check_odd(s);
  if (l < 1) throw std::invalid_argument("appendix-b: l must be >= 1");
  return std::log10(4.0 / std::numbers::pi) + std::lgamma(s + 1.0) / std::numbers::ln10 +
         log10_double_factorial((2 * l - 1) * s) - log10_double_factorial((2 * l + 1) * s) - std::log10(2.0 * l - 1);
}

std::string maximum_point(int s) {
  check_odd(s);
  return ((s - 1) / 2) % 2 == 0 ? "0" : "-pi/2";
}

CascadeResult residual_cascade(int s, const std::string& x, int levels, PrecisionCtx ctx) {
  check_digits(ctx);
  check_odd(s);
  if (levels < 1) throw std::invalid_argument("residual_cascade: levels must be >= 1");
  CascadeResult out{.s = s, .x = x, .residuals = {}, .next_terms = {}, .digits = ctx.digits};
  PrecisionScope scope(ctx);
  const BigFloat xv = parse_angle(x);
  const BigFloat f = f_at(s, xv + big_pi() / 2);
  const BigFloat magnitude = abs(f);

  BigFloat r = f - BigFloat(2 * tgamma(BigFloat(s + 1) / 2) / (tgamma(BigFloat("0.5")) * tgamma(BigFloat(s) / 2)));
  for (int l = 1; l <= levels; ++l) {
    if (l > 1) r -= gl_at(s, l - 1) * cos(xv * (2 * (l - 1)));
    const double consumed = r == 0 ? double(ctx.digits) : static_cast<double>(log10(magnitude / abs(r)));
    out.digits_consumed = std::max(out.digits_consumed, consumed);
    if (consumed > double(ctx.digits) - 10) {
      throw PrecisionError("residual_cascade: level " + std::to_string(l) + " cancels " + std::to_string(consumed) +
                           " digits, more than digits - 10 = " + std::to_string(ctx.digits - 10));
    }
    out.residuals.push_back(r);
    out.next_terms.push_back(abs(gl_at(s, l)));
  }
  return out;
}

BigFloat fourier_expansion(int s, const std::string& x, PrecisionCtx ctx) {
  check_digits(ctx);
  check_odd(s);
  PrecisionScope scope(ctx);
  return expansion_at(s, parse_angle(x));
}

BigFloat fourier_expansion_check(int s, const std::string& x, PrecisionCtx ctx) {
  check_digits(ctx);
  check_odd(s);
  PrecisionScope scope(ctx);
  const BigFloat xv = parse_angle(x);
  return BigFloat(abs(expansion_at(s, xv) - f_at(s, xv + big_pi() / 2)));
}

ConventionReport resolve_fourier_convention(int s, const std::string& x, PrecisionCtx ctx) {
  check_digits(ctx);
  check_odd(s);
  PrecisionScope scope(ctx);
  const BigFloat xv = parse_angle(x);
  const BigFloat e = expansion_at(s, xv);
  ConventionReport rep;
  rep.shifted_error = abs(e - f_at(s, xv + big_pi() / 2));
  rep.unshifted_error = abs(e - f_at(s, xv));
  const BigFloat noise = pow(BigFloat(10), -static_cast<int>(ctx.digits) + 15);
  if (rep.shifted_error <= noise) {
    rep.convention = FourierConvention::Shifted;
  } else if (rep.unshifted_error <= noise) {
    rep.convention = FourierConvention::Unshifted;
  }
  return rep;
}

BigFloat shift_identity_check(int s, const std::string& beta, PrecisionCtx ctx) {
  check_digits(ctx);
  check_odd(s);
  PrecisionScope scope(ctx);
  const BigFloat b = parse_angle(beta);
  return BigFloat(abs(f_at(s, b) - f_at(s, b + big_pi()) - 2 * pow(sin(b / s), s)));
}

std::vector<RateSample> asymptotic_probe(const std::vector<int>& s_list, PrecisionCtx ctx) {
  check_digits(ctx);
  if (!std::is_sorted(s_list.begin(), s_list.end())) throw std::invalid_argument("asymptotic_probe: s_list must be ascending");
  PrecisionScope scope(ctx);
  std::vector<RateSample> out;
  for (int s : s_list) {
    check_odd(s);
    const Rational core(ExactInt(factorial_exact(s) * double_factorial(s)), double_factorial(3 * s));
    BigFloat v;
    v = core;
    v = v * 4 / big_pi();
    const double rate = static_cast<double>(exp(-log(v) * 2 / s));
    out.push_back({s, rate, std::abs(rate - 27.0) / 27.0});
  }
  return out;
}

unsigned recommended_digits(int s, int levels) {
  check_odd(s);
  if (levels < 1) throw std::invalid_argument("recommended_digits: levels must be >= 1");
  const double base = 15 + std::ceil(1.2 * s * std::log10(3.0));
  const double deep = 15 + std::ceil(1.2 * std::abs(log10_abs_gl(s, levels)));
  return static_cast<unsigned>(std::max({base, deep, double(kMinDigits)}));
}

}  // namespace sharp::appb
