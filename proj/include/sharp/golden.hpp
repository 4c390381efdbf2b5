#pragma once

#include <cmath>
#include <utility>

namespace sharp {

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
///
/// Stops when the bracket is narrower than `xtol`. The returned point is the
/// best one evaluated, so fx never falls below a probe already seen.
template <class F>
GoldenResult golden_maximize(const F& f, double lo, double hi, double xtol, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  GoldenResult r;
  r.evaluations = 2;
  for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    ++r.evaluations;
  }
  r.lo = lo;
  r.hi = hi;
  if (fc >= fd) {
    r.x = c;
    r.fx = fc;
  } else {
    r.x = d;
    r.fx = fd;
  }
  return r;
}

}  // namespace sharp
