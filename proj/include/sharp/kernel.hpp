#pragma once

#include "sharp/params.hpp"
#include "sharp/quadrature.hpp"

#include <complex>
#include <vector>

namespace sharp {

struct QuadOptions {
  /// Relative tolerance for every quadrature.
  double tol = 1e-12;
  Arithmetic arith = Arithmetic::Double;
};

/// Kernel profile sin^{(n+1)-2/q}(v) * cos[v(n+1) + beta - (pi/2)(n-1)].
///
/// For q = inf the sine exponent is n+1. Throws std::domain_error for v outside
/// [0, pi].
double phi_eval(const Params& params, double beta, double v);

/// Zeros of the cosine factor strictly inside (0, pi), ascending.
///
/// These are the only interior points where |phi|^q is not smooth. Requires a
/// finite q.
std::vector<double> kink_points(const Params& params, double beta);

/// F_q(beta) = int_0^pi |phi_beta(v)|^q dv.
///
/// Integrates panel by panel between kinks with tanh-sinh, which also absorbs
/// the fractional endpoint power of sin. Each panel is further split at the
/// maximum of |phi| (log|phi| is concave on a panel) so that the sharp peak
/// at large q sits at a panel end. Any finite beta is accepted.
QuadResult fq_beta(const Params& params, double beta, const QuadOptions& opts = {});

/// I_alpha(r) = int_0^{2pi} |Re(e^{i(alpha+t)} / (r - e^{it})^{n+1})|^q dt.
///
/// Sign changes are located on a scan grid that is uniform in the Moebius
/// variable s (t crowds near 0 as r -> 1) and polished by TOMS 748. Double
/// arithmetic refuses r > 0.999.
QuadResult i_alpha(const Params& params, double alpha, double r, const QuadOptions& opts = {});

/// H_{n,p}(r) = (n!/pi) sup_alpha I_alpha(r)^{1/q}.
///
/// alpha ranges over [0, pi) since I_alpha has period pi. For p = 1 the sup of
/// the kernel gives n! / (pi (1-r)^{n+1}) directly.
double h_factor(const Params& params, double r, const QuadOptions& opts = {}, int alpha_grid = 64);

/// f_alpha(z, e^{is}) = |Re[e^{i(alpha+s)} (z - e^{is})^{n-1}]|^q |z - e^{is}|^{2q-2}.
double f_alpha(const Params& params, double alpha, std::complex<double> z, double s);

/// int_0^{2pi} f_alpha(z, e^{is}) ds for |z| <= 1.
QuadResult f_alpha_mean(const Params& params, double alpha, std::complex<double> z, double tol = 1e-11);

/// Exact n! as a double (n small).
double factorial(int n);

}  // namespace sharp
