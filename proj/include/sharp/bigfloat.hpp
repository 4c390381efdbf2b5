#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

namespace sharp {

/// Variable-precision float; precision comes from the active PrecisionScope.
using BigFloat = boost::multiprecision::mpfr_float;
/// Fixed 50-digit float used by Arithmetic::Extended quadrature.
using ExtFloat = boost::multiprecision::cpp_bin_float_50;
/// Exact signed integer.
using ExactInt = boost::multiprecision::mpz_int;

/// Decimal working precision for BigFloat evaluation.
struct PrecisionCtx {
  unsigned digits = 50;
};

/// Sets the BigFloat working precision for the lifetime of the object.
///
/// MPFR's default precision in Boost is process-wide, so scopes serialize on a
/// recursive mutex. Nested scopes on one thread are fine and restore the outer
/// precision on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(PrecisionCtx ctx);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// pi at the current working precision.
BigFloat big_pi();

/// Converts an exact integer at the current working precision.
BigFloat to_big(const ExactInt& x);

/// Scientific decimal string with `significant` digits, e.g. "2.5799e-70".
std::string to_sci(const BigFloat& x, unsigned significant);

/// Shortest round-trip decimal for a double ("%.17g").
std::string to_decimal(double x);

/// Parses an angle: a decimal literal, or [k*]pi[/d] such as "pi/2", "3*pi/4".
/// The result carries the current working precision.
BigFloat parse_angle(const std::string& text);

}  // namespace sharp
