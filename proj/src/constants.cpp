#include "sharp/constants.hpp"

#include <cfloat>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace sharp {

namespace {

using CacheKey = std::tuple<int, std::uint64_t, unsigned, int, std::uint64_t, int>;

std::uint64_t bits_of(double x) {
  std::uint64_t b;
  std::memcpy(&b, &x, sizeof b);
  return b;
}

std::mutex cache_mutex;
std::map<CacheKey, ConstantRecord> cache;

double assemble(const Params& params, double max_f) {
  const int n = params.n();
  return factorial(n) / std::numbers::pi * std::pow(2.0, n + 1 - params.inv_q()) * std::pow(max_f, params.inv_q());
}

ConstantRecord compute(const Params& params, const ConstantOptions& opts) {
  const int n = params.n();
  ConstantRecord rec{.params = params, .max_f = {}, .pipeline_value = {}, .closed_form = {}, .formula = {},
                     .cross_check_delta = {}};

  if (params.q_infinite()) {
    const auto cf = c_q_infty(n, opts.precision);
    rec.method = Method::Limit;
    rec.c_value = cf.to_double();
    rec.closed_form = to_sci(cf.value, opts.precision.digits);
    rec.formula = cf.formula;
    return rec;
  }

  QuadOptions quad = opts.quad;
  if (params.q() > kExtendedQThreshold) quad.arith = Arithmetic::Extended;
  const BetaProfile prof = profile(params, opts.gridsize, quad);
  rec.beta_star = prof.beta_star;
  rec.flat = prof.flat;
  rec.max_f = prof.max_value;
  rec.pipeline_value = assemble(params, prof.max_value);
  rec.c_value = *rec.pipeline_value;

  std::optional<ClosedFormValue> cf;
  BigFloat scale;
  {
    PrecisionScope scope(opts.precision);
    const BigFloat pi = big_pi();
    if (params.q() == 1.0) {
      if (n % 2 == 1) {
        cf = c_q1_odd(n, opts.precision);
        scale = 1;
      } else {
        cf = fq1_even_sum(n, prof.beta_star, opts.precision);
        scale = to_big(factorial_exact(n) << n) / pi;
      }
    } else if (params.q() == 2.0) {
      cf = fq2_value(n, opts.precision);
      cf->value = sqrt(cf->value);
      scale = to_big(factorial_exact(n)) / pi * pow(BigFloat(2), BigFloat(n) + BigFloat("0.5"));
    }
    if (cf) {
      const BigFloat value = cf->value * scale;
      rec.closed_form = to_sci(value, opts.precision.digits);
      rec.formula = cf->formula;
      rec.c_value = static_cast<double>(value);
      rec.method = Method::ClosedForm;
      rec.cross_check_delta = std::abs(*rec.pipeline_value - rec.c_value) / rec.c_value;
    }
  }
  return rec;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Pipeline: return "PIPELINE";
    case Method::ClosedForm: return "CLOSED_FORM";
    case Method::Limit: return "LIMIT";
  }
  return "UNKNOWN";
}

ConstantRecord c_pn(const Params& params, const ConstantOptions& opts) {
  const CacheKey key{params.n(), bits_of(params.p()), opts.precision.digits, opts.gridsize, bits_of(opts.quad.tol),
                     static_cast<int>(opts.quad.arith)};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ConstantRecord rec = compute(params, opts);
  std::lock_guard lock(cache_mutex);
  cache.emplace(key, rec);
  return rec;
}

double bound_rhs(const ConstantRecord& record, const BoundQuery& query) {
  const double r = std::abs(query.z);
  if (!(r < 1.0)) throw std::domain_error("bound_rhs: |z| must be < 1");
  if (!(query.norm >= 0.0)) throw std::domain_error("bound_rhs: norm must be >= 0");
  if (query.norm == 0.0) return 0.0;
  const double exponent = record.params.inv_p() + record.params.n();
  const double log_value = std::log(record.c_value) - exponent * std::log1p(-r * r) + std::log(query.norm);
  if (log_value > std::log(DBL_MAX)) return INFINITY;
  return record.c_value * std::pow(1.0 - r * r, -exponent) * query.norm;
}

double domain_bound(int n, double d_z, const ConstantOptions& opts) {
  if (!(d_z > 0.0)) throw std::domain_error("domain_bound: d_z must be > 0");
  const double c = c_pn(Params::from_p(n, kInf), opts).c_value;
  if (std::isinf(d_z)) return 0.0;
  return c / std::pow(d_z, n);
}

BlochBound bloch_order_n(int n, double oscillation, const ConstantOptions& opts) {
  if (!(oscillation >= 0.0)) throw std::domain_error("bloch_order_n: oscillation must be >= 0");
  const double c = c_pn(Params::from_p(n, kInf), opts).c_value;
  return {n, oscillation, c * oscillation / 2.0, c * oscillation, n % 2 == 1};
}

double theorem_even_literal(int n, const ConstantOptions& opts) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("theorem_even_literal: n must be even");
  return c_pn(Params::from_p(n, kInf), opts).c_value / std::pow(2.0, n);
}

}  // namespace sharp
