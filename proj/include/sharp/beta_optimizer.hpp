#pragma once

#include "sharp/kernel.hpp"
#include "sharp/params.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace sharp {

inline constexpr int kDefaultProfileGrid = 257;
inline constexpr double kFlatnessThreshold = 1e-9;
inline constexpr double kBetaTolerance = 1e-10;

struct BetaSample {
  double beta = 0.0;
  double value = 0.0;
};

/// Sampled beta -> F_q(beta) on [0, pi/2] with the refined maximiser.
struct BetaProfile {
  Params params;
  std::vector<BetaSample> grid;
  double argmax_lo = 0.0;
  double argmax_hi = 0.0;
  double beta_star = 0.0;
  double max_value = 0.0;
  bool flat = false;
  // Kept side by side so near-ties between the endpoints stay visible.
  double value_at_zero = 0.0;
  double value_at_half_pi = 0.0;
  double interior_grid_max = 0.0;
};

/// Evaluates F_q on `gridsize` uniform points of [0, pi/2] and refines the best
/// bracket by golden-section search.
///
/// Profiles whose spread is within kFlatnessThreshold (relative) are flat and
/// report beta_star = 0. A refined maximiser whose bracket touches 0 or pi/2
/// snaps to that endpoint when the endpoint value ties it within quadrature
/// noise: both endpoints are stationary, so values alone cannot locate the
/// maximum more finely than about sqrt(noise).
BetaProfile profile(const Params& params, int gridsize = kDefaultProfileGrid, const QuadOptions& opts = {});

struct Stationarity {
  double at_zero = 0.0;
  double at_half_pi = 0.0;
};

/// Central differences (F(b+h) - F(b-h)) / 2h at b = 0 and b = pi/2, with
/// F evaluated directly on both sides.
Stationarity stationarity_check(const Params& params, double h, const QuadOptions& opts = {});

enum class Monotonicity { Increasing, Decreasing, Flat, NonMonotone };

std::string_view monotonicity_name(Monotonicity m);

struct MonotonicityReport {
  Params params;
  Monotonicity classification = Monotonicity::Flat;
  int resolution = 0;
  /// Adjacent grid betas whose step contradicts the dominant direction.
  std::optional<std::pair<double, double>> witness;
  /// Conjectured direction; two entries when (n+1)q/2 is an exact integer.
  std::vector<Monotonicity> predicted;
  bool agrees = false;
  double beta_star = 0.0;
  double max_value = 0.0;
  double value_at_zero = 0.0;
  double value_at_half_pi = 0.0;
};

/// Conjectured behaviour: decreasing for q > 2; for q <= 2 nondecreasing when
/// floor((n+1)q/2) is even and nonincreasing when odd.
std::vector<Monotonicity> conjectured_direction(const Params& params);

/// Classifies the profile of every (n, q) pair. Steps within
/// 10 * tol * max|F| count as noise. Disagreements are reported, not thrown.
std::vector<MonotonicityReport> scan_conjecture(std::span<const int> ns, std::span<const double> qs, int resolution,
                                                const QuadOptions& opts = {});

}  // namespace sharp
