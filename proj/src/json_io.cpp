#include "sharp/json_io.hpp"

#include "sharp/bigfloat.hpp"

namespace sharp {

using nlohmann::ordered_json;

namespace {

ordered_json complex_json(std::complex<double> z) {
  return ordered_json{{"re", to_decimal(z.real())}, {"im", to_decimal(z.imag())}};
}

ordered_json direction_list(const std::vector<Monotonicity>& dirs) {
  ordered_json out = ordered_json::array();
  for (auto d : dirs) out.push_back(std::string(monotonicity_name(d)));
  return out;
}

}  // namespace

ordered_json params_json(const Params& params) {
  return ordered_json{{"n", params.n()}, {"p", format_exponent(params.p())}, {"q", format_exponent(params.q())}};
}

ordered_json to_json(const ConstantRecord& rec) {
  ordered_json j{{"params", params_json(rec.params)},
                 {"c_value", to_decimal(rec.c_value)},
                 {"method", std::string(method_name(rec.method))},
                 {"beta_star", to_decimal(rec.beta_star)},
                 {"flat", rec.flat}};
  j["max_f"] = rec.max_f ? ordered_json(to_decimal(*rec.max_f)) : ordered_json(nullptr);
  j["pipeline_value"] = rec.pipeline_value ? ordered_json(to_decimal(*rec.pipeline_value)) : ordered_json(nullptr);
  j["closed_form"] = rec.closed_form ? ordered_json(*rec.closed_form) : ordered_json(nullptr);
  j["formula"] = rec.formula ? ordered_json(std::string(formula_name(*rec.formula))) : ordered_json(nullptr);
  j["cross_check_delta"] = rec.cross_check_delta ? ordered_json(to_decimal(*rec.cross_check_delta)) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const BetaProfile& prof) {
  ordered_json grid = ordered_json::array();
  for (const auto& s : prof.grid) grid.push_back({{"beta", to_decimal(s.beta)}, {"F", to_decimal(s.value)}});
  return ordered_json{{"params", params_json(prof.params)},
                      {"beta_star", to_decimal(prof.beta_star)},
                      {"argmax_bracket", {to_decimal(prof.argmax_lo), to_decimal(prof.argmax_hi)}},
                      {"max_value", to_decimal(prof.max_value)},
                      {"flat", prof.flat},
                      {"F_at_0", to_decimal(prof.value_at_zero)},
                      {"F_at_half_pi", to_decimal(prof.value_at_half_pi)},
                      {"interior_grid_max", to_decimal(prof.interior_grid_max)},
                      {"grid", grid}};
}

ordered_json to_json(const MonotonicityReport& rep) {
  ordered_json j{{"params", params_json(rep.params)},
                 {"classification", std::string(monotonicity_name(rep.classification))},
                 {"resolution", rep.resolution},
                 {"predicted", direction_list(rep.predicted)},
                 {"agrees", rep.agrees},
                 {"beta_star", to_decimal(rep.beta_star)},
                 {"max_value", to_decimal(rep.max_value)},
                 {"F_at_0", to_decimal(rep.value_at_zero)},
                 {"F_at_half_pi", to_decimal(rep.value_at_half_pi)}};
  j["witness"] = rep.witness ? ordered_json{to_decimal(rep.witness->first), to_decimal(rep.witness->second)}
                             : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const appb::CascadeResult& res, unsigned significant) {
  ordered_json levels = ordered_json::array();
  for (std::size_t i = 0; i < res.residuals.size(); ++i) {
    levels.push_back({{"level", i}, {"residual", to_sci(res.residuals[i], significant)},
                      {"next_term", to_sci(res.next_terms[i], significant)}});
  }
  return ordered_json{{"s", res.s}, {"x", res.x}, {"digits", res.digits},
                      {"digits_consumed", to_decimal(res.digits_consumed)}, {"levels", levels}};
}

ordered_json to_json(const TrialReport& rep) {
  return ordered_json{{"index", rep.index},
                      {"seed", std::to_string(rep.seed)},
                      {"params", params_json(rep.params)},
                      {"z", complex_json(rep.z)},
                      {"degree", rep.degree},
                      {"lhs", to_decimal(rep.lhs)},
                      {"rhs", to_decimal(rep.rhs)},
                      {"slack", to_decimal(rep.slack)},
                      {"norm_value", to_decimal(rep.norm_value)},
                      {"norm_err", to_decimal(rep.norm_err)},
                      {"norm_grid", rep.norm_grid},
                      {"violation", rep.violation}};
}

ordered_json to_json(const TrialSummary& summary) {
  const TrialConfig& c = summary.config;
  ordered_json ps = ordered_json::array();
  for (double p : c.ps) ps.push_back(format_exponent(p));
  ordered_json config{{"ns", c.ns},
                      {"ps", ps},
                      {"trials", c.trials},
                      {"seed", std::to_string(c.seed)},
                      {"tol", to_decimal(c.tol)},
                      {"max_degree", c.max_degree},
                      {"max_radius", to_decimal(c.max_radius)},
                      {"norm_convention", std::string(norm_convention_name(c.convention))}};
  ordered_json trials = ordered_json::array();
  ordered_json violations = ordered_json::array();
  for (const auto& t : summary.trials) trials.push_back(to_json(t));
  for (int i : summary.violations) violations.push_back(to_json(summary.trials[i]));
  return ordered_json{{"config", config},
                      {"trials", trials},
                      {"min_slack", to_decimal(summary.min_slack)},
                      {"min_relative_slack", to_decimal(summary.min_relative_slack)},
                      {"violations", violations},
                      {"sharpest", summary.sharpest >= 0 ? to_json(summary.trials[summary.sharpest]) : ordered_json(nullptr)}};
}

ordered_json to_json(const SharpnessSample& sample) {
  return ordered_json{{"degree", sample.degree}, {"lhs", to_decimal(sample.lhs)}, {"rhs", to_decimal(sample.rhs)},
                      {"ratio", to_decimal(sample.ratio)}};
}

}  // namespace sharp
