#include "sharp/kernel.hpp"

#include "sharp/bigfloat.hpp"
#include "sharp/golden.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace sharp {

namespace {

using std::numbers::pi;

template <class Real>
Real pi_of() {
  return boost::math::constants::pi<Real>();
}

// Indices j with v_j = (pi n/2 + j pi - beta)/(n+1) strictly inside (0, pi).
std::vector<int> kink_indices(int n, double beta) {
  std::vector<int> js;
  const double base = pi * n / 2.0 - beta;
  const int lo = static_cast<int>(std::floor(-base / pi)) - 1;
  const int hi = static_cast<int>(std::ceil(((n + 1) * pi - base) / pi)) + 1;
  constexpr double margin = 1e-14;
  for (int j = lo; j <= hi; ++j) {
    const double v = (base + j * pi) / (n + 1);
    if (v > margin && v < pi - margin) js.push_back(j);
  }
  return js;
}

// Interior maximiser of |g| on [a, b] when log|g| is unimodal there.
std::optional<double> interior_peak(const auto& log_abs, double a, double b) {
  const double width = b - a;
  if (!(width > 0.0)) return std::nullopt;
  const auto best = golden_maximize(log_abs, a, b, 1e-12 * std::max(1.0, width));
  if (best.x > a + 1e-6 * width && best.x < b - 1e-6 * width) return best.x;
  return std::nullopt;
}

template <class Real>
QuadResult fq_beta_impl(const Params& params, double beta, double tol) {
  const int n = params.n();
  const double q = params.q();
  const double sin_power = (n + 1) * q - 2.0;
  const Real pi_r = pi_of<Real>();
  const Real b(beta);
  const Real shift = pi_r * (n - 1) / 2;

  std::vector<Real> breaks{Real(0)};
  std::vector<double> kinks;
  for (int j : kink_indices(n, beta)) {
    breaks.push_back((pi_r * n / 2 + pi_r * j - b) / (n + 1));
    kinks.push_back(static_cast<double>(breaks.back()));
  }
  breaks.push_back(pi_r);

  const double exponent = params.sine_exponent();
  auto log_abs_phi = [&](double v) {
    return exponent * std::log(std::abs(std::sin(v))) +
           std::log(std::abs(std::cos(v * (n + 1) + beta - pi / 2 * (n - 1))));
  };
  std::vector<Real> split;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    split.push_back(breaks[i]);
    if (auto peak = interior_peak(log_abs_phi, static_cast<double>(breaks[i]), static_cast<double>(breaks[i + 1]))) {
      split.push_back(Real(*peak));
    }
  }
  split.push_back(breaks.back());

  const Real qr(q), sp(sin_power);
  auto integrand = [&](const Real& v) -> Real {
    using std::abs, std::cos, std::pow, std::sin;
    const Real s = abs(sin(v));
    const Real c = abs(cos(v * (n + 1) + b - shift));
    return pow(s, sp) * pow(c, qr);
  };
  QuadResult out = integrate_panels<Real>(integrand, std::span<const Real>(split), tol);
  out.kinks = std::move(kinks);
  return out;
}

// Integrates |w|^q over [scan.front(), scan.back()], splitting at sign changes
// of w found on the scan grid and at the largest |w| of each sign run.
template <class Real, class W>
QuadResult integrate_abs_pow_scanned(const W& w, const std::vector<double>& scan, double q, double tol) {
  std::vector<double> values(scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) values[i] = static_cast<double>(w(Real(scan[i])));

  std::vector<Real> breaks{Real(scan.front())};
  std::vector<double> kinks;
  auto add_break = [&](const Real& x) {
    if (x > breaks.back()) breaks.push_back(x);
  };
  std::size_t run_best = 0;
  for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
    if (std::abs(values[i]) > std::abs(values[run_best])) run_best = i;
    const bool zero_here = values[i] == 0.0 && i > 0;
    const bool sign_change = values[i] * values[i + 1] < 0.0;
    if (!zero_here && !sign_change) continue;
    if (run_best > 0 && run_best != i) add_break(Real(scan[run_best]));
    Real root(scan[i]);
    if (sign_change) {
      const Real lo(scan[i]), hi(scan[i + 1]);
      boost::math::tools::eps_tolerance<Real> stop(std::numeric_limits<Real>::digits - 3);
      boost::uintmax_t iters = 200;
      const auto bracket = boost::math::tools::toms748_solve(
          [&](const Real& x) { return w(x); }, lo, hi, w(lo), w(hi), stop, iters);
      root = (bracket.first + bracket.second) / 2;
    }
    add_break(root);
    kinks.push_back(static_cast<double>(root));
    run_best = i + 1;
  }
  if (std::abs(values.back()) > std::abs(values[run_best])) run_best = scan.size() - 1;
  if (run_best > 0 && run_best + 1 < scan.size()) add_break(Real(scan[run_best]));
  add_break(Real(scan.back()));

  const Real qr(q);
  auto integrand = [&](const Real& x) -> Real {
    using std::abs, std::pow;
    return pow(abs(w(x)), qr);
  };
  QuadResult out = integrate_panels<Real>(integrand, std::span<const Real>(breaks), tol);
  out.kinks = std::move(kinks);
  return out;
}

template <class Real>
QuadResult i_alpha_impl(const Params& params, double alpha, double r, double tol) {
  const int n = params.n();
  const Real rr(r), a(alpha);
  auto w = [&](const Real& t) -> Real {
    using std::atan2, std::cos, std::pow, std::sin, std::sqrt;
    // r - e^{it} = x + iy, with r - cos t written without cancellation near t = 0.
    const Real half = sin(t / 2);
    const Real x = (rr - 1) + 2 * half * half;
    const Real y = -sin(t);
    const Real theta = atan2(y, x);
    const Real modulus = sqrt((1 - rr) * (1 - rr) + 4 * rr * half * half);
    return cos(a + t - theta * (n + 1)) / pow(modulus, n + 1);
  };
  // The integrand is 2pi-periodic; integrating over [-pi, pi] keeps its peak
  // at t = 0, where t carries full relative precision.
  // e^{it} = (r - e^{is}) / (1 - r e^{is}) spreads the scan evenly over the
  // oscillations of the integrand.
  const int count = 64 * (n + 2);
  std::vector<double> scan{-pi, pi};
  for (int k = 0; k < count; ++k) {
    const std::complex<double> e = std::polar(1.0, 2.0 * pi * k / count);
    const double t = std::arg((r - e) / (1.0 - r * e));
    if (t > -pi && t < pi) scan.push_back(t);
  }
  std::sort(scan.begin(), scan.end());
  scan.erase(std::unique(scan.begin(), scan.end()), scan.end());
  return integrate_abs_pow_scanned<Real>(w, scan, params.q(), tol);
}

void require_finite_q(const Params& params, const char* what) {
  if (params.q_infinite()) {
    throw std::domain_error(std::string(what) + " requires a finite conjugate exponent q (p > 1)");
  }
}

}  // namespace

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double phi_eval(const Params& params, double beta, double v) {
  if (!(v >= 0.0 && v <= pi)) throw std::domain_error("phi_eval: v must lie in [0, pi]");
  const int n = params.n();
  const double s = std::sin(v);
  const double c = std::cos(v * (n + 1) + beta - pi / 2 * (n - 1));
  return std::pow(std::abs(s), params.sine_exponent()) * c;
}

std::vector<double> kink_points(const Params& params, double beta) {
  require_finite_q(params, "kink_points");
  std::vector<double> out;
  const int n = params.n();
  for (int j : kink_indices(n, beta)) out.push_back((pi * n / 2.0 + j * pi - beta) / (n + 1));
  return out;
}

QuadResult fq_beta(const Params& params, double beta, const QuadOptions& opts) {
  require_finite_q(params, "fq_beta");
  if (!std::isfinite(beta)) throw std::domain_error("fq_beta: beta must be finite");
  if (opts.arith == Arithmetic::Extended) return fq_beta_impl<ExtFloat>(params, beta, opts.tol);
  return fq_beta_impl<double>(params, beta, opts.tol);
}

QuadResult i_alpha(const Params& params, double alpha, double r, const QuadOptions& opts) {
  require_finite_q(params, "i_alpha");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("i_alpha: r must lie in [0, 1)");
  if (opts.arith == Arithmetic::Extended) return i_alpha_impl<ExtFloat>(params, alpha, r, opts.tol);
  if (r > 0.999) throw std::domain_error("i_alpha: r > 0.999 is ill-conditioned in double arithmetic; use extended");
  return i_alpha_impl<double>(params, alpha, r, opts.tol);
}

double h_factor(const Params& params, double r, const QuadOptions& opts, int alpha_grid) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("h_factor: r must lie in [0, 1)");
  const int n = params.n();
  if (params.q_infinite()) return factorial(n) / (pi * std::pow(1.0 - r, n + 1));
  if (alpha_grid < 3) throw std::invalid_argument("h_factor: alpha grid needs at least 3 points");

  auto integral = [&](double alpha) { return i_alpha(params, alpha, r, opts).value; };
  const double step = pi / alpha_grid;
  int best = 0;
  double best_value = -1.0;
  for (int k = 0; k < alpha_grid; ++k) {
    const double v = integral(k * step);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  const auto refined = golden_maximize(integral, (best - 1) * step, (best + 1) * step, 1e-9);
  const double sup = std::max(best_value, refined.fx);
  return factorial(n) / pi * std::pow(sup, 1.0 / params.q());
}

double f_alpha(const Params& params, double alpha, std::complex<double> z, double s) {
  require_finite_q(params, "f_alpha");
  const int n = params.n();
  const double q = params.q();
  const std::complex<double> d = z - std::polar(1.0, s);
  const double re = std::real(std::polar(1.0, alpha + s) * std::pow(d, n - 1));
  return std::pow(std::abs(re), q) * std::pow(std::abs(d), 2.0 * q - 2.0);
}

QuadResult f_alpha_mean(const Params& params, double alpha, std::complex<double> z, double tol) {
  require_finite_q(params, "f_alpha_mean");
  if (!(std::abs(z) <= 1.0)) throw std::domain_error("f_alpha_mean: |z| must not exceed 1");
  const int n = params.n();
  const double weight_power = 2.0 - 2.0 / params.q();
  // |w|^q reproduces f_alpha while keeping the sign of the real part.
  auto w = [&](double s) {
    const std::complex<double> d = z - std::polar(1.0, s);
    const double re = std::real(std::polar(1.0, alpha + s) * std::pow(d, n - 1));
    return re * std::pow(std::abs(d), weight_power);
  };
  // Start the period at arg z: for |z| = 1 the weight vanishes there with a
  // fractional power, which tanh-sinh only tolerates at a panel end.
  const double start = std::arg(z);
  const int count = 128 * (n + 1);
  std::vector<double> scan(count + 1);
  for (int k = 0; k <= count; ++k) scan[k] = start + 2.0 * pi * k / count;
  return integrate_abs_pow_scanned<double>(w, scan, params.q(), tol);
}

}  // namespace sharp
