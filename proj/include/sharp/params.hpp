#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sharp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Arithmetic used inside quadrature. Extended runs the same rules on a
/// 50-digit MPFR float and rounds the result back to double.
enum class Arithmetic { Double, Extended };

/// Problem triple: derivative order n, Hardy exponent p and its conjugate q.
///
/// Construct through from_p() or from_q(); both enforce 1/p + 1/q = 1 with
/// p = 1 <=> q = inf and p = inf <=> q = 1.
class Params {
 public:
  static Params from_p(int n, double p) {
    check_order(n);
    if (std::isnan(p) || p < 1.0) {
      throw std::invalid_argument("Hardy exponent p must lie in [1, inf], got " + std::to_string(p));
    }
    double q = kInf;
    if (std::isinf(p)) {
      q = 1.0;
    } else if (p > 1.0) {
      q = p / (p - 1.0);
    }
    return Params(n, p, q);
  }

  static Params from_q(int n, double q) {
    check_order(n);
    if (std::isnan(q) || q < 1.0) {
      throw std::invalid_argument("conjugate exponent q must lie in [1, inf], got " + std::to_string(q));
    }
    double p = kInf;
    if (std::isinf(q)) {
      p = 1.0;
    } else if (q > 1.0) {
      p = q / (q - 1.0);
    }
    return Params(n, p, q);
  }

  int n() const noexcept { return n_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  bool q_infinite() const noexcept { return std::isinf(q_); }

  /// 1/p, exactly 0 for p = inf.
  double inv_p() const noexcept { return std::isinf(p_) ? 0.0 : 1.0 / p_; }
  /// 1/q, exactly 0 for q = inf.
  double inv_q() const noexcept { return q_infinite() ? 0.0 : 1.0 / q_; }

  /// Exponent of the sine factor in the kernel profile: (n+1) - 2/q.
  double sine_exponent() const noexcept { return static_cast<double>(n_ + 1) - 2.0 * inv_q(); }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(int n, double p, double q) : n_(n), p_(p), q_(q) {}

  static void check_order(int n) {
    if (n < 1) {
      throw std::invalid_argument("derivative order n must be >= 1, got " + std::to_string(n));
    }
  }

  int n_;
  double p_;
  double q_;
};

/// Parses an exponent: a real number >= 1 or "inf"/"infinity".
double parse_exponent(const std::string& text);

std::string format_exponent(double x);

}  // namespace sharp
