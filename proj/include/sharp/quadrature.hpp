#pragma once

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharp {

/// Quadrature value with a heuristic error estimate and panel diagnostics.
struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int panels = 0;
  /// Interior breakpoints where the integrand loses smoothness.
  std::vector<double> kinks;
};

/// Raised when panel refinement runs out of levels before meeting the tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string to_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

template <class Real>
boost::math::quadrature::tanh_sinh<Real>& tanh_sinh_rule() {
  thread_local boost::math::quadrature::tanh_sinh<Real> rule(15);
  return rule;
}

}  // namespace detail

/// Sum of tanh-sinh integrals over consecutive breakpoints.
///
/// `breaks` must be nondecreasing; zero-width panels are skipped. `tol` is
/// relative to the L1 norm of the integrand over the whole range.
template <class Real, class F>
QuadResult integrate_panels(const F& f, std::span<const Real> breaks, double tol) {
  if (breaks.size() < 2) throw std::invalid_argument("integrate_panels: need at least two breakpoints");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_panels: tolerance must be positive");
  auto& rule = detail::tanh_sinh_rule<Real>();
  // Panels aim below the overall target so the summed estimate still meets it.
  const Real rtol(tol / 10);
  Real total(0), err_total(0), l1_total(0);
  QuadResult out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Real& a = breaks[i];
    const Real& b = breaks[i + 1];
    if (!(b > a)) continue;
    Real err(0), l1(0);
    Real value;
    try {
      value = rule.integrate(f, a, b, rtol, &err, &l1);
    } catch (const std::exception& e) {
      throw QuadratureError(std::string("tanh-sinh failed on panel: ") + e.what());
    }
    total += value;
    err_total += err;
    l1_total += l1;
    ++out.panels;
  }
  out.value = static_cast<double>(total);
  out.err_estimate = static_cast<double>(err_total);
  const double l1 = static_cast<double>(l1_total);
  if (!std::isfinite(out.value)) throw QuadratureError("quadrature produced a non-finite value");
  // Absolute floor covers integrands that vanish identically on the range.
  if (out.err_estimate > tol * l1 && out.err_estimate > 1e-300) {
    throw QuadratureError("quadrature did not converge: error estimate " + detail::to_sci(out.err_estimate) + " exceeds tolerance " + detail::to_sci(tol * l1));
  }
  return out;
}

}  // namespace sharp
