#pragma once

#include <nlohmann/json.hpp>

#include "smdm/distribution.hpp"
#include "smdm/weights.hpp"

namespace smdm {

nlohmann::json to_json(const Distribution& dist);

/// Accepts {"support":[...],"probs":[...]}, {"support":[...],"mb_v":v} or
/// {"support":[...],"mb_entropy":H}; exactly one of the three selectors.
Distribution distribution_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const WeightFunction& wf);
WeightFunction weight_function_from_json(const nlohmann::json& doc);

}  // namespace smdm
