#pragma once

#include "sharp/beta_optimizer.hpp"
#include "sharp/bigfloat.hpp"
#include "sharp/closed_forms.hpp"
#include "sharp/kernel.hpp"
#include "sharp/params.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace sharp {

enum class Method { Pipeline, ClosedForm, Limit };

std::string_view method_name(Method m);

struct ConstantRecord {
  Params params;
  double c_value = 0.0;
  Method method = Method::Pipeline;
  double beta_star = 0.0;
  /// max_beta F_q(beta), canonical normalisation. Unset on the q = inf path.
  std::optional<double> max_f;
  bool flat = false;
  /// Value assembled from quadrature and the optimiser.
  std::optional<double> pipeline_value;
  /// Closed-form value at the requested precision, as a decimal string.
  std::optional<std::string> closed_form;
  std::optional<FormulaId> formula;
  /// |pipeline - closed form| / closed form.
  std::optional<double> cross_check_delta;
};

struct ConstantOptions {
  QuadOptions quad{};
  int gridsize = kDefaultProfileGrid;
  PrecisionCtx precision{};
};

/// Quadrature in double precision loses about q * eps to rounding in |phi|^q,
/// so larger q always runs in Extended arithmetic.
inline constexpr double kExtendedQThreshold = 1e3;

/// C_{p,n} = (n!/pi) 2^{n+1-1/q} (max_beta F_q)^{1/q}.
///
/// The pipeline value is always computed for finite q. For q = 1 and q = 2
/// the closed form is reported alongside and becomes c_value; p = 1 uses
/// n! 2^{n+1} / pi directly. Results are cached per (n, p, options).
ConstantRecord c_pn(const Params& params, const ConstantOptions& opts = {});

struct BoundQuery {
  std::complex<double> z{0.0, 0.0};
  double norm = 1.0;
};

/// C_{p,n} (1 - r^2)^{-1/p-n} * norm. +inf when the value overflows a double.
double bound_rhs(const ConstantRecord& record, const BoundQuery& query);

/// C_{inf,n} / d_z^n: bound on |f^(n)(z)| when |Re f| <= 1 on a domain at
/// distance d_z from z.
double domain_bound(int n, double d_z, const ConstantOptions& opts = {});

struct BlochBound {
  int n = 0;
  double oscillation = 0.0;
  /// Centering at the midrange gives |Re f - mid| <= osc/2, so C_{inf,n} * osc / 2.
  double value = 0.0;
  /// C_{inf,n} * osc, the reading in which osc bounds |Re f| itself.
  double oscillation_form = 0.0;
  /// Odd n carries a proved closed form; even n uses the assembled constant.
  bool odd = true;
};

BlochBound bloch_order_n(int n, double oscillation = 2.0, const ConstantOptions& opts = {});

/// Even n, q = 1 constant read as (n!/pi) max (2/n) sum sin^{n+1}: smaller
/// than c_pn by 2^n. Diagnostic only.
double theorem_even_literal(int n, const ConstantOptions& opts = {});

}  // namespace sharp
