#include "sharp/closed_forms.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sharp {

namespace {

using Rational = boost::multiprecision::mpq_rational;

void require_positive(int n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + ": n must be >= 1");
}

int half_of_odd(int n, const char* what) {
  require_positive(n, what);
  if (n % 2 == 0) throw std::domain_error(std::string(what) + ": n must be odd");
  return (n + 1) / 2;
}

int half_of_even(int n, const char* what) {
  require_positive(n, what);
  if (n % 2 != 0) throw std::domain_error(std::string(what) + ": n must be even");
  return n / 2;
}

BigFloat to_big(const Rational& x) {
  BigFloat r;
  r = x;
  return r;
}

}  // namespace

std::string_view formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::Q1_ODD: return "Q1_ODD";
    case FormulaId::Q1_EVEN_SPLIT: return "Q1_EVEN_SPLIT";
    case FormulaId::Q1_EVEN_SALT: return "Q1_EVEN_SALT";
    case FormulaId::Q2: return "Q2";
    case FormulaId::Q_INF: return "Q_INF";
    case FormulaId::APPB_G0: return "APPB_G0";
    case FormulaId::APPB_GL: return "APPB_GL";
  }
  return "UNKNOWN";
}

ExactInt factorial_exact(unsigned n) {
  ExactInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

ExactInt binomial_exact(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactInt double_factorial(const ExactInt& u) {
  if (u < 1 || (u % 2) == 0) throw std::domain_error("double_factorial: argument must be a positive odd integer");
  ExactInt r = 1;
  for (ExactInt k = 3; k <= u; k += 2) r *= k;
  return r;
}

double full_circle_scale(const Params& params) {
  return std::pow(2.0, (params.n() + 1) * params.q() / 2.0);
}

ClosedFormValue c_q1_odd(int n, PrecisionCtx ctx) {
  const int m = half_of_odd(n, "c_q1_odd");
  PrecisionScope scope(ctx);
  const ExactInt top = factorial_exact(2 * m);
  const ExactInt bottom = factorial_exact(m);
  const Rational ratio(ExactInt(top * top), ExactInt(bottom * bottom * n));
  return {to_big(ratio) / big_pi(), FormulaId::Q1_ODD};
}

ClosedFormValue fq1_fbeta_odd(int n, PrecisionCtx ctx) {
  const int m = half_of_odd(n, "fq1_fbeta_odd");
  PrecisionScope scope(ctx);
  const Rational ratio(ExactInt(4 * m * binomial_exact(2 * m, m)), ExactInt(ExactInt(n) << (2 * m)));
  return {to_big(ratio), FormulaId::Q1_ODD};
}

ClosedFormValue fq1_even_sum(int n, double beta, PrecisionCtx ctx) {
  const int m = half_of_even(n, "fq1_even_sum");
  PrecisionScope scope(ctx);
  const BigFloat pi = big_pi();
  const BigFloat b(beta);
  BigFloat sum = 0;
  for (int k = 1; k <= n + 1; ++k) sum += pow(sin((pi * k - b) / (n + 1)), n + 1);
  return {BigFloat(sum / m), FormulaId::Q1_EVEN_SPLIT};
}

ClosedFormValue fq1_even_salt(int n, double beta, PrecisionCtx ctx) {
  const int m = half_of_even(n, "fq1_even_salt");
  if (!(beta >= 0.0 && beta <= std::acos(-1.0) / 2)) {
    throw std::domain_error("fq1_even_salt: gamma = beta + pi/2 must lie in [pi/2, pi]");
  }
  PrecisionScope scope(ctx);
  const BigFloat pi = big_pi();
  const BigFloat gamma = BigFloat(beta) + pi / 2;
  const BigFloat two_pow_n = pow(BigFloat(2), n);
  BigFloat sum = 0;
  for (int j = 0; j <= m; ++j) {
    const BigFloat term = to_big(binomial_exact(n + 1, m - j)) * cos(gamma * (2 * j + 1) / (n + 1)) /
                          sin(pi * (2 * j + 1) / (2 * (n + 1)));
    sum += (j % 2 == 0 ? term : BigFloat(-term)) / two_pow_n;
  }
  sum += 2 * pow(sin((gamma - pi / 2) / (n + 1)), n + 1);
  return {BigFloat(sum / m), FormulaId::Q1_EVEN_SALT};
}

ClosedFormValue fq2_value(int n, PrecisionCtx ctx) {
  require_positive(n, "fq2_value");
  PrecisionScope scope(ctx);
  const Rational ratio(binomial_exact(2 * n, n), ExactInt(ExactInt(1) << (2 * n + 1)));
  return {big_pi() * to_big(ratio), FormulaId::Q2};
}

ClosedFormValue c_q_infty(int n, PrecisionCtx ctx) {
  require_positive(n, "c_q_infty");
  PrecisionScope scope(ctx);
  const ExactInt top = factorial_exact(n) << (n + 1);
  return {to_big(top) / big_pi(), FormulaId::Q_INF};
}

BigFloat hilbert_case_value(int n, PrecisionCtx ctx) {
  require_positive(n, "hilbert_case_value");
  PrecisionScope scope(ctx);
  const BigFloat half("0.5");
  const BigFloat ratio = tgamma(BigFloat(n) + half) / tgamma(BigFloat(n + 1));
  const BigFloat pi = big_pi();
  return BigFloat(pow(BigFloat(2), n) / pow(pi, BigFloat("0.75")) * sqrt(ratio));
}

}  // namespace sharp
