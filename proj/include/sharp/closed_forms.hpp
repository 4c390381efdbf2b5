#pragma once

#include "sharp/bigfloat.hpp"
#include "sharp/params.hpp"

#include <string_view>

namespace sharp {

enum class FormulaId { Q1_ODD, Q1_EVEN_SPLIT, Q1_EVEN_SALT, Q2, Q_INF, APPB_G0, APPB_GL };

std::string_view formula_name(FormulaId id);

/// A closed-form value at the working precision it was computed with.
struct ClosedFormValue {
  BigFloat value;
  FormulaId formula;

  double to_double() const { return static_cast<double>(value); }
};

// Exact integer combinatorics.
ExactInt factorial_exact(unsigned n);
ExactInt binomial_exact(unsigned n, unsigned k);
/// u!! = u (u-2) ... 3 1 for odd u >= 1; std::domain_error otherwise.
ExactInt double_factorial(const ExactInt& u);

/// Ratio between the F_q normalisations: the integral over the full circle in
/// u = 2v carries 2^{(n+1)q/2} relative to the canonical int_0^pi |phi|^q dv.
/// The scaled values quoted for n = 2 and n = 4 use this factor with q = 1.
double full_circle_scale(const Params& params);

/// C_n = ((2m)!)^2 / (n pi (m!)^2) for odd n = 2m - 1.
ClosedFormValue c_q1_odd(int n, PrecisionCtx ctx = {});

/// beta-independent int_0^pi |phi_beta| dv for odd n = 2m - 1: 4m C(2m,m) / (n 4^m).
ClosedFormValue fq1_fbeta_odd(int n, PrecisionCtx ctx = {});

/// int_0^pi |phi_beta| dv for even n = 2m as (1/m) sum_{k=1}^{n+1} sin^{n+1}((k pi - beta)/(n+1)).
ClosedFormValue fq1_even_sum(int n, double beta, PrecisionCtx ctx = {});

/// The same quantity through the cosine expansion in gamma = beta + pi/2,
/// valid for gamma in [pi/2, pi], i.e. beta in [0, pi/2].
ClosedFormValue fq1_even_salt(int n, double beta, PrecisionCtx ctx = {});

/// F_2 = pi C(2n,n) / 2^{2n+1}, independent of beta.
ClosedFormValue fq2_value(int n, PrecisionCtx ctx = {});

/// C_{1,n} = n! 2^{n+1} / pi, the q = inf (p = 1) constant.
ClosedFormValue c_q_infty(int n, PrecisionCtx ctx = {});

/// (2^n / pi^{3/4}) sqrt(Gamma(n + 1/2) / Gamma(n + 1)), evaluated through
/// MPFR's Gamma. Equals C_{2,n} / n!.
BigFloat hilbert_case_value(int n, PrecisionCtx ctx = {});

}  // namespace sharp
