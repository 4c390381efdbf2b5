#include "sharp/beta_optimizer.hpp"

#include "sharp/golden.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sharp {

namespace {

using std::numbers::pi;

Monotonicity classify(const std::vector<BetaSample>& grid, double noise, double spread_threshold,
                      std::optional<std::pair<double, double>>& witness) {
  double lo = grid.front().value, hi = grid.front().value;
  for (const auto& s : grid) {
    lo = std::min(lo, s.value);
    hi = std::max(hi, s.value);
  }
  if (hi - lo <= spread_threshold) return Monotonicity::Flat;

  bool up = true, down = true;
  std::optional<std::pair<double, double>> first_drop, first_rise;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double step = grid[i + 1].value - grid[i].value;
    if (step < -noise) {
      up = false;
      if (!first_drop) first_drop = std::pair{grid[i].beta, grid[i + 1].beta};
    }
    if (step > noise) {
      down = false;
      if (!first_rise) first_rise = std::pair{grid[i].beta, grid[i + 1].beta};
    }
  }
  if (up) return Monotonicity::Increasing;
  if (down) return Monotonicity::Decreasing;
  // Report the step against the direction of the overall trend.
  witness = grid.back().value >= grid.front().value ? first_drop : first_rise;
  return Monotonicity::NonMonotone;
}

}  // namespace

std::string_view monotonicity_name(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "INCREASING";
    case Monotonicity::Decreasing: return "DECREASING";
    case Monotonicity::Flat: return "FLAT";
    case Monotonicity::NonMonotone: return "NON_MONOTONE";
  }
  return "UNKNOWN";
}

BetaProfile profile(const Params& params, int gridsize, const QuadOptions& opts) {
  if (gridsize < 3) throw std::invalid_argument("profile: gridsize must be >= 3");
  const double half_pi = pi / 2;
  auto F = [&](double beta) { return fq_beta(params, beta, opts).value; };

  BetaProfile out{.params = params, .grid = {}};
  out.grid.reserve(gridsize);
  std::size_t best = 0;
  for (int i = 0; i < gridsize; ++i) {
    const double beta = i == gridsize - 1 ? half_pi : half_pi * i / (gridsize - 1);
    out.grid.push_back({beta, F(beta)});
    if (out.grid.back().value > out.grid[best].value) best = out.grid.size() - 1;
  }
  out.value_at_zero = out.grid.front().value;
  out.value_at_half_pi = out.grid.back().value;
  out.interior_grid_max = out.grid[1].value;
  for (std::size_t i = 1; i + 1 < out.grid.size(); ++i) out.interior_grid_max = std::max(out.interior_grid_max, out.grid[i].value);

  double lo = out.grid.front().value, hi = lo;
  for (const auto& s : out.grid) {
    lo = std::min(lo, s.value);
    hi = std::max(hi, s.value);
  }
  out.max_value = hi;
  if (hi - lo <= kFlatnessThreshold * std::abs(hi)) {
    out.flat = true;
    out.beta_star = 0.0;
    out.argmax_lo = out.argmax_hi = 0.0;
    return out;
  }

  const double a = out.grid[best > 0 ? best - 1 : 0].beta;
  const double b = out.grid[std::min(best + 1, out.grid.size() - 1)].beta;
  const auto refined = golden_maximize(F, a, b, kBetaTolerance);
  out.argmax_lo = refined.lo;
  out.argmax_hi = refined.hi;
  out.beta_star = refined.x;
  double star_value = refined.fx;
  if (out.grid[best].value >= star_value) {
    out.beta_star = out.grid[best].beta;
    star_value = out.grid[best].value;
  }

  const double noise = 10.0 * opts.tol * std::abs(hi);
  for (const auto& [endpoint, value] : {std::pair{0.0, out.value_at_zero}, std::pair{half_pi, out.value_at_half_pi}}) {
    if (a <= endpoint && endpoint <= b && value >= star_value - noise) {
      out.beta_star = endpoint;
      out.argmax_lo = out.argmax_hi = endpoint;
    }
  }
  out.max_value = std::max(hi, refined.fx);
  return out;
}

Stationarity stationarity_check(const Params& params, double h, const QuadOptions& opts) {
  if (!(h > 0.0 && h <= 1e-3)) throw std::invalid_argument("stationarity_check: h must lie in (0, 1e-3]");
  auto F = [&](double beta) { return fq_beta(params, beta, opts).value; };
  const double half_pi = pi / 2;
  return {(F(h) - F(-h)) / (2 * h), (F(half_pi + h) - F(half_pi - h)) / (2 * h)};
}

std::vector<Monotonicity> conjectured_direction(const Params& params) {
  if (params.q() > 2.0) return {Monotonicity::Decreasing};
  const double level = (params.n() + 1) * params.q() / 2.0;
  const long whole = static_cast<long>(std::floor(level));
  auto parity = [](long k) { return k % 2 == 0 ? Monotonicity::Increasing : Monotonicity::Decreasing; };
  if (static_cast<double>(whole) == level) return {parity(whole), parity(whole - 1)};
  return {parity(whole)};
}

std::vector<MonotonicityReport> scan_conjecture(std::span<const int> ns, std::span<const double> qs, int resolution,
                                                const QuadOptions& opts) {
  if (resolution < 16) throw std::invalid_argument("scan_conjecture: resolution must be >= 16");
  std::vector<MonotonicityReport> out;
  for (int n : ns) {
    for (double q : qs) {
      const Params params = Params::from_q(n, q);
      const BetaProfile prof = profile(params, resolution, opts);
      MonotonicityReport rep{.params = params, .resolution = resolution, .witness = {}, .predicted = {}};
      const double scale = std::abs(prof.max_value);
      rep.classification = classify(prof.grid, 10.0 * opts.tol * scale, kFlatnessThreshold * scale, rep.witness);
      rep.predicted = conjectured_direction(params);
      rep.beta_star = prof.beta_star;
      rep.max_value = prof.max_value;
      rep.value_at_zero = prof.value_at_zero;
      rep.value_at_half_pi = prof.value_at_half_pi;
      const bool weak = q <= 2.0;
      for (Monotonicity want : rep.predicted) {
        rep.agrees = rep.agrees || rep.classification == want || (weak && rep.classification == Monotonicity::Flat);
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace sharp
