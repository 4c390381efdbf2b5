#pragma once

#include "sharp/constants.hpp"
#include "sharp/params.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sharp {

enum class TestKind {
  Poly,
  /// Taylor truncation of (2i/pi) log((1+z)/(1-z)).
  StripTrunc,
  /// Same coefficients with Fejer weights 1 - k/(d+1); |Re f| <= 1 on the circle.
  StripFejer,
};

std::string_view test_kind_name(TestKind kind);

struct TestFunction {
  TestKind kind = TestKind::Poly;
  /// Taylor coefficients c_0 .. c_d.
  std::vector<std::complex<double>> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> operator()(std::complex<double> z) const;
};

/// Deterministic random polynomial: degree uniform in [min_degree, max_degree],
/// coefficients complex Gaussian with scale 1/(k+1).
TestFunction sample_function(std::uint64_t seed, int max_degree, int min_degree = 1);

/// Strip map of degree d. kind must be StripTrunc or StripFejer.
TestFunction strip_function(int degree, TestKind kind);

/// ArcLength: (int_0^{2pi} |u|^p dt)^{1/p}, the scaling under which C_{p,n} is
/// sharp. Probability: the same integral against dt/2pi.
enum class NormConvention { ArcLength, Probability };

std::string_view norm_convention_name(NormConvention c);

inline constexpr int kDefaultNormGrid = 1 << 14;
inline constexpr int kFineNormGrid = 1 << 16;

struct NormResult {
  double value = 0.0;
  double err = 0.0;
  int gridsize = 0;
};

/// h^p norm of Re f from boundary values on `gridsize` equispaced points.
/// Finite p: periodic trapezoid, error from comparison with the half grid.
/// p = inf: grid maximum refined by golden section; err is the refinement gain.
NormResult hp_norm(const TestFunction& f, double p, int gridsize = kDefaultNormGrid,
                   NormConvention convention = NormConvention::ArcLength);

/// Exact n-th derivative of the polynomial at z.
std::complex<double> derivative_at(const TestFunction& f, int n, std::complex<double> z);

struct TrialConfig {
  std::vector<int> ns{1, 2, 3, 4, 5};
  std::vector<double> ps{1.0, 1.5, 2.0, 3.0, kInf};
  int trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int max_degree = 8;
  double max_radius = 0.95;
  NormConvention convention = NormConvention::ArcLength;
  bool throw_on_violation = false;
};

struct TrialReport {
  int index = 0;
  std::uint64_t seed = 0;
  Params params = Params::from_p(1, kInf);
  std::complex<double> z{};
  int degree = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double norm_value = 0.0;
  double norm_err = 0.0;
  int norm_grid = 0;
  bool violation = false;
};

class ViolationError : public std::runtime_error {
 public:
  explicit ViolationError(const TrialReport& report);
  const TrialReport& report() const { return report_; }

 private:
  TrialReport report_;
};

struct TrialSummary {
  TrialConfig config;
  std::vector<TrialReport> trials;
  double min_slack = 0.0;
  /// Smallest slack / rhs over trials with rhs > 0.
  double min_relative_slack = 0.0;
  std::vector<int> violations;
  /// Index of the trial with the largest lhs / rhs.
  int sharpest = -1;
};

/// Seed of trial i, derived from the master seed by splitmix64.
std::uint64_t trial_seed(std::uint64_t master, int index);

/// Checks |f^(n)(z)| <= C_{p,n} (1-|z|^2)^{-1/p-n} ||Re f||_p on sampled f and z.
/// A trial violates when slack < -tol * rhs. Norms whose error estimate
/// exceeds 1e-6 relative are recomputed on the fine grid.
TrialSummary run_trials(const TrialConfig& config, const ConstantOptions& opts = {});

struct SharpnessSample {
  int degree = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// lhs / rhs at z = 0 for the strip family of each degree.
std::vector<SharpnessSample> sharpness_probe(int n, double p, const std::vector<int>& degrees,
                                             TestKind kind = TestKind::StripFejer,
                                             NormConvention convention = NormConvention::ArcLength,
                                             const ConstantOptions& opts = {});

}  // namespace sharp
