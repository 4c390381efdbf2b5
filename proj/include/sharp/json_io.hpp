#pragma once

#include "sharp/appendix_b.hpp"
#include "sharp/beta_optimizer.hpp"
#include "sharp/constants.hpp"
#include "sharp/harness.hpp"

#include <json.hpp>

namespace sharp {

// Reals are written as decimal strings so no value passes through a binary
// JSON number on the way out.

nlohmann::ordered_json params_json(const Params& params);
nlohmann::ordered_json to_json(const ConstantRecord& rec);
nlohmann::ordered_json to_json(const BetaProfile& prof);
nlohmann::ordered_json to_json(const MonotonicityReport& rep);
nlohmann::ordered_json to_json(const appb::CascadeResult& res, unsigned significant);
nlohmann::ordered_json to_json(const TrialReport& rep);
nlohmann::ordered_json to_json(const TrialSummary& summary);
nlohmann::ordered_json to_json(const SharpnessSample& sample);

}  // namespace sharp
