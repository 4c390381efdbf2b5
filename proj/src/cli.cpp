#include "sharp/cli.hpp"

#include "sharp/appendix_b.hpp"
#include "sharp/json_io.hpp"
#include "sharp/quadrature.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sharp {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 1;
  std::string p_text = "inf";
  std::string q_text;
  std::string n_list;
  std::string p_list;
  std::string q_list;
  std::string beta;
  double r = 0.0;
  std::optional<unsigned> digits;
  int grid = kDefaultProfileGrid;
  double tol = 1e-12;
  double verify_tol = 1e-9;
  int trials = 1000;
  std::uint64_t seed = 0;
  int max_degree = 8;
  std::string format = "json";
  std::string out_path;
  int s = 99;
  int levels = 3;
  std::string x;
  std::string shift_beta = "pi/3";
  std::string rates = "19,49,99,201,301";
  std::string norm = "arc";
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  if (parts.empty()) throw UsageError("empty list: '" + text + "'");
  return parts;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> exponent_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text)) out.push_back(parse_exponent(s));
  return out;
}

unsigned default_digits(const Options& o, unsigned fallback) {
  if (o.digits) return *o.digits;
  if (const char* env = std::getenv(kDigitsEnv)) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 10) return static_cast<unsigned>(v);
  }
  return fallback;
}

Params make_params(const Options& o) {
  if (!o.q_text.empty()) return Params::from_q(o.n, parse_exponent(o.q_text));
  return Params::from_p(o.n, parse_exponent(o.p_text));
}

ConstantOptions constant_options(const Options& o) {
  ConstantOptions c;
  c.quad.tol = o.tol;
  c.gridsize = o.grid;
  c.precision.digits = default_digits(o, 50);
  return c;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) row += (i ? "," : "") + cells[i];
  return row + "\n";
}

std::string opt_text(const std::optional<double>& v) { return v ? to_decimal(*v) : ""; }

struct Output {
  ordered_json json;
  std::string csv;
  int code = kExitOk;
};

Output cmd_constant(const Options& o) {
  const ConstantRecord rec = c_pn(make_params(o), constant_options(o));
  Output out{{{"command", "constant"}, {"result", to_json(rec)}}, {}};
  if (o.r > 0.0) out.json["bound_rhs_unit_norm"] = to_decimal(bound_rhs(rec, {o.r, 1.0}));
  out.csv = csv_row({"n", "p", "q", "c_value", "method", "beta_star", "pipeline_value", "closed_form", "cross_check_delta"}) +
            csv_row({std::to_string(rec.params.n()), format_exponent(rec.params.p()), format_exponent(rec.params.q()),
                     to_decimal(rec.c_value), std::string(method_name(rec.method)), to_decimal(rec.beta_star),
                     opt_text(rec.pipeline_value), rec.closed_form.value_or(""), opt_text(rec.cross_check_delta)});
  return out;
}

Output cmd_profile(const Options& o) {
  const Params params = make_params(o);
  if (params.q_infinite()) throw UsageError("profile needs finite q (p > 1)");
  QuadOptions quad{o.tol, params.q() > kExtendedQThreshold ? Arithmetic::Extended : Arithmetic::Double};
  if (!o.beta.empty()) {
    PrecisionScope scope(PrecisionCtx{default_digits(o, 50)});
    const double beta = static_cast<double>(parse_angle(o.beta));
    const QuadResult res = fq_beta(params, beta, quad);
    Output out{{{"command", "profile"},
                {"params", params_json(params)},
                {"beta", to_decimal(beta)},
                {"F", to_decimal(res.value)},
                {"err_estimate", to_decimal(res.err_estimate)},
                {"panels", res.panels}},
               {}};
    out.csv = csv_row({"beta", "F", "err_estimate"}) +
              csv_row({to_decimal(beta), to_decimal(res.value), to_decimal(res.err_estimate)});
    return out;
  }
  const BetaProfile prof = profile(params, o.grid, quad);
  Output out{{{"command", "profile"}, {"result", to_json(prof)}}, csv_row({"beta", "F"})};
  for (const auto& s : prof.grid) out.csv += csv_row({to_decimal(s.beta), to_decimal(s.value)});
  return out;
}

Output cmd_hfactor(const Options& o) {
  const Params params = make_params(o);
  if (!(o.r >= 0.0 && o.r < 1.0)) throw UsageError("--r must lie in [0, 1)");
  const ConstantOptions copts = constant_options(o);
  const double h = h_factor(params, o.r, copts.quad);
  const double weighted = h * std::pow(1.0 - o.r * o.r, params.inv_p() + params.n());
  const double c = c_pn(params, copts).c_value;
  const bool dominated = weighted <= c * (1.0 + 1e-9);
  Output out{{{"command", "hfactor"},
              {"params", params_json(params)},
              {"r", to_decimal(o.r)},
              {"h", to_decimal(h)},
              {"weighted", to_decimal(weighted)},
              {"c_value", to_decimal(c)},
              {"dominated", dominated}},
             csv_row({"n", "p", "q", "r", "h", "weighted", "c_value", "dominated"}) +
                 csv_row({std::to_string(params.n()), format_exponent(params.p()), format_exponent(params.q()),
                          to_decimal(o.r), to_decimal(h), to_decimal(weighted), to_decimal(c), dominated ? "true" : "false"})};
  out.code = dominated ? kExitOk : kExitViolation;
  return out;
}

Output cmd_scan(const Options& o) {
  const auto ns = int_list(o.n_list.empty() ? "1,2,3,4,5,6" : o.n_list);
  const auto qs = exponent_list(o.q_list.empty() ? "1,1.25,1.5,2,3,4" : o.q_list);
  for (double q : qs) {
    if (std::isinf(q)) throw UsageError("scan needs finite q");
  }
  const auto reports = scan_conjecture(ns, qs, o.grid, QuadOptions{o.tol, Arithmetic::Double});
  Output out{{{"command", "scan"}, {"reports", ordered_json::array()}},
             csv_row({"n", "q", "classification", "predicted", "agrees", "beta_star", "F_at_0", "F_at_half_pi"})};
  int disagreements = 0;
  for (const auto& r : reports) {
    out.json["reports"].push_back(to_json(r));
    std::string predicted;
    for (auto d : r.predicted) predicted += (predicted.empty() ? "" : "|") + std::string(monotonicity_name(d));
    out.csv += csv_row({std::to_string(r.params.n()), format_exponent(r.params.q()),
                        std::string(monotonicity_name(r.classification)), predicted, r.agrees ? "true" : "false",
                        to_decimal(r.beta_star), to_decimal(r.value_at_zero), to_decimal(r.value_at_half_pi)});
    disagreements += r.agrees ? 0 : 1;
  }
  out.json["disagreements"] = disagreements;
  return out;
}

Output cmd_appendixb(const Options& o) {
  const unsigned digits = default_digits(o, std::max(50u, appb::recommended_digits(o.s, o.levels)));
  const PrecisionCtx ctx{digits};
  const std::string x = o.x.empty() ? appb::maximum_point(o.s) : o.x;
  const auto cascade = appb::residual_cascade(o.s, x, o.levels, ctx);
  const unsigned sig = std::min(25u, digits - 10);

  ordered_json g = ordered_json::array();
  for (int l = 1; l <= o.levels + 1; ++l) g.push_back(to_sci(appb::gl(o.s, l, ctx), sig));
  const auto convention = appb::resolve_fourier_convention(o.s, x, ctx);
  ordered_json rates = ordered_json::array();
  for (const auto& r : appb::asymptotic_probe(int_list(o.rates), ctx)) {
    rates.push_back({{"s", r.s}, {"rate", to_decimal(r.rate)}, {"relative_gap", to_decimal(r.relative_gap)}});
  }
  std::string beta_of_x;
  {
    PrecisionScope scope(ctx);
    beta_of_x = to_sci(BigFloat(parse_angle(x) + big_pi() / 2), sig);
  }
  Output out{{{"command", "appendixb"},
              {"s", o.s},
              {"m", (o.s - 1) / 2},
              {"digits", digits},
              {"x", x},
              {"beta", beta_of_x},
              {"f", to_sci(appb::g_shifted(o.s, x, ctx), sig)},
              {"g0", to_sci(appb::g0(o.s, ctx), sig)},
              {"g", g},
              {"cascade", to_json(cascade, sig)},
              {"fourier_error", to_sci(convention.shifted_error, 3)},
              {"fourier_error_unshifted", to_sci(convention.unshifted_error, 3)},
              {"fourier_convention", convention.convention == appb::FourierConvention::Shifted     ? "g(x)=f(x+pi/2)"
                                     : convention.convention == appb::FourierConvention::Unshifted ? "f(x)"
                                                                                                   : "none"},
              {"shift_identity_beta", o.shift_beta},
              {"shift_identity_error", to_sci(appb::shift_identity_check(o.s, o.shift_beta, ctx), 3)},
              {"rates", rates}},
             csv_row({"level", "residual", "next_term"})};
  for (std::size_t i = 0; i < cascade.residuals.size(); ++i) {
    out.csv += csv_row({std::to_string(i), to_sci(cascade.residuals[i], sig), to_sci(cascade.next_terms[i], sig)});
  }
  return out;
}

Output cmd_verify(const Options& o) {
  TrialConfig cfg;
  if (!o.n_list.empty()) cfg.ns = int_list(o.n_list);
  if (!o.p_list.empty()) cfg.ps = exponent_list(o.p_list);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.tol = o.verify_tol;
  cfg.max_degree = o.max_degree;
  cfg.convention = o.norm == "probability" ? NormConvention::Probability : NormConvention::ArcLength;
  ConstantOptions copts = constant_options(o);
  copts.quad.tol = 1e-12;
  const TrialSummary summary = run_trials(cfg, copts);

  ordered_json sharpness = ordered_json::array();
  for (TestKind kind : {TestKind::StripFejer, TestKind::StripTrunc}) {
    for (const auto& s : sharpness_probe(1, kInf, {10, 100, 400}, kind, cfg.convention, copts)) {
      ordered_json j = to_json(s);
      j["kind"] = std::string(test_kind_name(kind));
      sharpness.push_back(j);
    }
  }
  Output out{{{"command", "verify"}, {"report", to_json(summary)}, {"sharpness", sharpness}},
             csv_row({"index", "seed", "n", "p", "z_re", "z_im", "degree", "lhs", "rhs", "slack", "norm", "norm_err", "violation"})};
  for (const auto& t : summary.trials) {
    out.csv += csv_row({std::to_string(t.index), std::to_string(t.seed), std::to_string(t.params.n()),
                        format_exponent(t.params.p()), to_decimal(t.z.real()), to_decimal(t.z.imag()),
                        std::to_string(t.degree), to_decimal(t.lhs), to_decimal(t.rhs), to_decimal(t.slack),
                        to_decimal(t.norm_value), to_decimal(t.norm_err), t.violation ? "true" : "false"});
  }
  out.code = summary.violations.empty() ? kExitOk : kExitViolation;
  return out;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out_path, "Write results to PATH instead of standard output");
  sub->add_option("--digits", o.digits, "Working precision in decimal digits")->check(CLI::Range(10u, 100000u));
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Derivative order")->required()->check(CLI::Range(1, 170));
  auto* p = sub->add_option("--p", o.p_text, "Exponent p in [1, inf]");
  auto* q = sub->add_option("--q", o.q_text, "Conjugate exponent q in [1, inf]");
  p->excludes(q);
  q->excludes(p);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sharp constants for derivatives of analytic functions with Re f in h^p", "sharpc"};
  app.require_subcommand(1, 1);

  auto* constant = app.add_subcommand("constant", "Sharp constant C_{p,n}");
  add_params(constant, o);
  add_common(constant, o);
  constant->add_option("--grid", o.grid, "Beta grid size")->check(CLI::Range(3, 1 << 20));
  constant->add_option("--tol", o.tol, "Relative quadrature tolerance")->check(CLI::Range(1e-15, 1e-3));
  constant->add_option("--r", o.r, "Also report the bound at |z| = r for unit norm")->check(CLI::Range(0.0, 0.999999));

  auto* prof = app.add_subcommand("profile", "F_q(beta) over [0, pi/2], or at one --beta");
  add_params(prof, o);
  add_common(prof, o);
  prof->add_option("--beta", o.beta, "Single angle, e.g. 0.3 or pi/4");
  prof->add_option("--grid", o.grid, "Beta grid size")->check(CLI::Range(3, 1 << 20));
  prof->add_option("--tol", o.tol, "Relative quadrature tolerance")->check(CLI::Range(1e-15, 1e-3));

  auto* hf = app.add_subcommand("hfactor", "Sharp pointwise factor H_{n,p}(r)");
  add_params(hf, o);
  add_common(hf, o);
  hf->add_option("--r", o.r, "Radius |z|")->required()->check(CLI::Range(0.0, 0.999));
  hf->add_option("--grid", o.grid, "Beta grid size for C_{p,n}")->check(CLI::Range(3, 1 << 20));
  hf->add_option("--tol", o.tol, "Relative quadrature tolerance")->check(CLI::Range(1e-15, 1e-3));

  auto* scan = app.add_subcommand("scan", "Monotonicity of F_q(beta) over (n, q) pairs");
  add_common(scan, o);
  scan->add_option("--n", o.n_list, "Comma separated n values");
  scan->add_option("--q", o.q_list, "Comma separated q values");
  scan->add_option("--resolution,--grid", o.grid, "Beta grid size")->check(CLI::Range(16, 1 << 20));
  scan->add_option("--tol", o.tol, "Relative quadrature tolerance")->check(CLI::Range(1e-15, 1e-3));

  auto* appb = app.add_subcommand("appendixb", "High precision sine-power sums and residual cascade");
  add_common(appb, o);
  appb->add_option("--s", o.s, "Odd s = n + 1")->check(CLI::Range(3, 20001));
  appb->add_option("--levels", o.levels, "Residual levels")->check(CLI::Range(1, 1000));
  appb->add_option("--x", o.x, "Offset x with beta = x + pi/2 (default: maximum point)");
  appb->add_option("--beta", o.shift_beta, "Angle for the shift identity check");
  appb->add_option("--rates", o.rates, "Comma separated odd s for the asymptotic rate");

  auto* verify = app.add_subcommand("verify", "Randomized check of the inequality");
  add_common(verify, o);
  verify->add_option("--n", o.n_list, "Comma separated n values");
  verify->add_option("--p", o.p_list, "Comma separated p values");
  verify->add_option("--trials", o.trials, "Number of trials")->check(CLI::Range(1, 10000000));
  verify->add_option("--seed", o.seed, "Master seed");
  verify->add_option("--max-degree", o.max_degree, "Maximum polynomial degree")->check(CLI::Range(1, 1000));
  verify->add_option("--tol", o.verify_tol, "Relative violation tolerance")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--norm", o.norm, "Boundary measure")->check(CLI::IsMember({"arc", "probability"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output result;
  try {
    if (*constant) result = cmd_constant(o);
    else if (*prof) result = cmd_profile(o);
    else if (*hf) result = cmd_hfactor(o);
    else if (*scan) result = cmd_scan(o);
    else if (*appb) result = cmd_appendixb(o);
    else result = cmd_verify(o);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }

  const std::string text = o.format == "csv" ? result.csv : result.json.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot open " << o.out_path << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return result.code;
}

}  // namespace sharp
