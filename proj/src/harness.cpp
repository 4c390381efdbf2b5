#include "sharp/harness.hpp"

#include "sharp/bigfloat.hpp"
#include "sharp/golden.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace sharp {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;

double re_boundary(const TestFunction& f, double t) { return f(std::polar(1.0, t)).real(); }

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string_view test_kind_name(TestKind kind) {
  switch (kind) {
    case TestKind::Poly: return "POLY";
    case TestKind::StripTrunc: return "STRIP_TRUNC";
    case TestKind::StripFejer: return "STRIP_FEJER";
  }
  return "UNKNOWN";
}

std::string_view norm_convention_name(NormConvention c) {
  return c == NormConvention::ArcLength ? "arc_length" : "probability";
}

cplx TestFunction::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TestFunction sample_function(std::uint64_t seed, int max_degree, int min_degree) {
  if (max_degree < 1) throw std::invalid_argument("sample_function: max_degree must be >= 1");
  if (min_degree < 1 || min_degree > max_degree) throw std::invalid_argument("sample_function: need 1 <= min_degree <= max_degree");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_degree(min_degree, max_degree);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = pick_degree(rng);
  TestFunction f{TestKind::Poly, {}};
  f.coeffs.reserve(d + 1);
  for (int k = 0; k <= d; ++k) {
    const double re = gauss(rng), im = gauss(rng);
    f.coeffs.emplace_back(re / (k + 1), im / (k + 1));
  }
  return f;
}

TestFunction strip_function(int degree, TestKind kind) {
  if (degree < 1) throw std::invalid_argument("strip_function: degree must be >= 1");
  if (kind == TestKind::Poly) throw std::invalid_argument("strip_function: kind must be a strip kind");
  TestFunction f{kind, std::vector<cplx>(degree + 1, 0.0)};
  for (int k = 1; k <= degree; k += 2) {
    const double weight = kind == TestKind::StripFejer ? 1.0 - double(k) / (degree + 1) : 1.0;
    f.coeffs[k] = cplx(0.0, 4.0 / (pi * k) * weight);
  }
  return f;
}

NormResult hp_norm(const TestFunction& f, double p, int gridsize, NormConvention convention) {
  if (!power_of_two(gridsize) || gridsize < 1024) throw std::invalid_argument("hp_norm: gridsize must be a power of 2 >= 1024");
  if (!(p >= 1.0)) throw std::invalid_argument("hp_norm: p must be >= 1");
  const double h = 2 * pi / gridsize;
  std::vector<double> u(gridsize);
  for (int i = 0; i < gridsize; ++i) u[i] = std::abs(re_boundary(f, i * h));

  if (std::isinf(p)) {
    const auto best = std::max_element(u.begin(), u.end()) - u.begin();
    auto abs_u = [&](double t) { return std::abs(re_boundary(f, t)); };
    const double t0 = best * h;
    const auto refined = golden_maximize(abs_u, t0 - h, t0 + h, 1e-13);
    const double value = std::max(u[best], refined.fx);
    return {value, value - u[best], gridsize};
  }

  double full = 0.0, half = 0.0;
  for (int i = 0; i < gridsize; ++i) {
    const double w = std::pow(u[i], p);
    full += w;
    if (i % 2 == 0) half += w;
  }
  const double measure = convention == NormConvention::ArcLength ? 2 * pi : 1.0;
  full *= measure / gridsize;
  half *= measure / (gridsize / 2);
  const double value = std::pow(full, 1.0 / p);
  const double err = full > 0.0 ? value * std::abs(full - half) / (p * full) : 0.0;
  return {value, err, gridsize};
}

cplx derivative_at(const TestFunction& f, int n, cplx z) {
  if (n < 0) throw std::invalid_argument("derivative_at: n must be >= 0");
  cplx acc = 0.0;
  for (int k = f.degree(); k >= n; --k) {
    double falling = 1.0;
    for (int j = 0; j < n; ++j) falling *= k - j;
    acc = acc * z + f.coeffs[k] * falling;
  }
  return acc;
}

ViolationError::ViolationError(const TrialReport& report)
    : std::runtime_error("inequality violated at trial " + std::to_string(report.index) + ": lhs " +
                         to_decimal(report.lhs) + " > rhs " + to_decimal(report.rhs)),
      report_(report) {}

std::uint64_t trial_seed(std::uint64_t master, int index) {
  std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TrialSummary run_trials(const TrialConfig& config, const ConstantOptions& opts) {
  if (config.trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
  if (config.ns.empty() || config.ps.empty()) throw std::invalid_argument("run_trials: empty n or p list");
  if (!(config.max_radius >= 0.0 && config.max_radius < 1.0)) throw std::invalid_argument("run_trials: max_radius must lie in [0, 1)");

  TrialSummary out{.config = config, .trials = {}, .violations = {}};
  std::map<std::pair<int, double>, ConstantRecord> constants;
  double best_ratio = -1.0;
  out.min_slack = INFINITY;
  out.min_relative_slack = INFINITY;

  for (int i = 0; i < config.trials; ++i) {
    const std::uint64_t seed = trial_seed(config.seed, i);
    std::mt19937_64 rng(seed);
    const int n = config.ns[std::uniform_int_distribution<std::size_t>(0, config.ns.size() - 1)(rng)];
    const double p = config.ps[std::uniform_int_distribution<std::size_t>(0, config.ps.size() - 1)(rng)];
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double radius = config.max_radius * std::sqrt(unit(rng));
    const double angle = 2 * pi * unit(rng);
    const TestFunction f = sample_function(rng(), std::max(config.max_degree, n), n);

    auto it = constants.find({n, p});
    if (it == constants.end()) it = constants.emplace(std::pair{n, p}, c_pn(Params::from_p(n, p), opts)).first;
    const ConstantRecord& rec = it->second;

    TrialReport rep{.index = i, .seed = seed, .params = rec.params, .z = std::polar(radius, angle), .degree = f.degree()};
    NormResult norm = hp_norm(f, p, kDefaultNormGrid, config.convention);
    if (norm.err > 1e-6 * norm.value) norm = hp_norm(f, p, kFineNormGrid, config.convention);
    rep.norm_value = norm.value;
    rep.norm_err = norm.err;
    rep.norm_grid = norm.gridsize;
    rep.lhs = std::abs(derivative_at(f, n, rep.z));
    rep.rhs = bound_rhs(rec, {rep.z, norm.value});
    rep.slack = rep.rhs - rep.lhs;
    rep.violation = rep.slack < -config.tol * rep.rhs;

    out.min_slack = std::min(out.min_slack, rep.slack);
    if (rep.rhs > 0.0) {
      out.min_relative_slack = std::min(out.min_relative_slack, rep.slack / rep.rhs);
      if (rep.lhs / rep.rhs > best_ratio) {
        best_ratio = rep.lhs / rep.rhs;
        out.sharpest = i;
      }
    }
    if (rep.violation) {
      out.violations.push_back(i);
      if (config.throw_on_violation) throw ViolationError(rep);
    }
    out.trials.push_back(rep);
  }
  return out;
}

std::vector<SharpnessSample> sharpness_probe(int n, double p, const std::vector<int>& degrees, TestKind kind,
                                             NormConvention convention, const ConstantOptions& opts) {
  const ConstantRecord rec = c_pn(Params::from_p(n, p), opts);
  std::vector<SharpnessSample> out;
  for (int d : degrees) {
    const TestFunction f = strip_function(d, kind);
    const double lhs = std::abs(derivative_at(f, n, 0.0));
    const double rhs = bound_rhs(rec, {0.0, hp_norm(f, p, kDefaultNormGrid, convention).value});
    out.push_back({d, lhs, rhs, rhs > 0.0 ? lhs / rhs : 0.0});
  }
  return out;
}

}  // namespace sharp
