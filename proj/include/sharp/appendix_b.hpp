#pragma once

#include "sharp/bigfloat.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sharp::appb {

// Angles are text ("0.3", "pi/4", "-pi/2") so they are parsed at the working
// precision of the call, not rounded through a double.

inline constexpr unsigned kMinDigits = 30;

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f(beta) = sum_{k=1}^{s} sin^s((k pi - beta) / s).
BigFloat f_sum(int s, const std::string& beta, PrecisionCtx ctx);

/// g(x) = f(x + pi/2).
BigFloat g_shifted(int s, const std::string& x, PrecisionCtx ctx);

/// 2 / B(1/2, s/2) through Gamma.
BigFloat g0(int s, PrecisionCtx ctx);

/// g_l = (-1)^{m+l-1} (4/pi) s! ((2l-1)s)!! / ((2l-1) ((2l+1)s)!!), s = 2m + 1.
BigFloat gl(int s, int l, PrecisionCtx ctx);

/// log10 |g_l| in double precision, from log-Gamma.
double log10_abs_gl(int s, int l);

/// Offset x of the maximum of g(x) = f(x + pi/2): "0" for even m, "-pi/2" for odd m.
std::string maximum_point(int s);

struct CascadeResult {
  int s = 0;
  std::string x;
  /// f - g0, f - g0 - g1 cos 2x, ...
  std::vector<BigFloat> residuals;
  /// |g_{l+1}| paired with residual l.
  std::vector<BigFloat> next_terms;
  /// Decimal digits lost to cancellation at the deepest level.
  double digits_consumed = 0.0;
  unsigned digits = 0;
};

/// Residuals of f(x + pi/2) against g0 + sum_l g_l cos(2 l x).
/// Throws PrecisionError when cancellation eats more than digits - 10 digits.
CascadeResult residual_cascade(int s, const std::string& x, int levels, PrecisionCtx ctx);

/// (-1)^m 2^{-s} sum_{j=0}^{s} (-1)^j C(s,j) cos(t x / s) / sin(pi t / (2s)), t = s - 2j.
BigFloat fourier_expansion(int s, const std::string& x, PrecisionCtx ctx);

/// |fourier_expansion(s, x) - f(x + pi/2)|.
BigFloat fourier_expansion_check(int s, const std::string& x, PrecisionCtx ctx);

enum class FourierConvention { Shifted, Unshifted, Neither };

struct ConventionReport {
  FourierConvention convention = FourierConvention::Neither;
  BigFloat shifted_error;    // against f(x + pi/2)
  BigFloat unshifted_error;  // against f(x)
};

/// Compares the expansion with both f(x + pi/2) and f(x) at x.
ConventionReport resolve_fourier_convention(int s, const std::string& x, PrecisionCtx ctx);

/// |f(beta) - f(beta + pi) - 2 sin^s(beta / s)|.
BigFloat shift_identity_check(int s, const std::string& beta, PrecisionCtx ctx);

struct RateSample {
  int s = 0;
  double rate = 0.0;
  double relative_gap = 0.0;  // |rate - 27| / 27
};

/// rate = exp(-(2/s) ln((4/pi) s! s!! / (3s)!!)) for each s, which tends to 27.
std::vector<RateSample> asymptotic_probe(const std::vector<int>& s_list, PrecisionCtx ctx);

/// Working digits for a cascade of `levels` residuals at s:
/// max(15 + ceil(1.2 s log10 3), 15 + ceil(1.2 |log10 g_levels|)).
unsigned recommended_digits(int s, int levels = 1);

}  // namespace sharp::appb
