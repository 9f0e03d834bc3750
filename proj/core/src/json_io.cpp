#include "smdm/json_io.hpp"

#include <stdexcept>

namespace smdm {

using nlohmann::json;

json to_json(const Distribution& dist) {
    return json{{"support", dist.support()}, {"probs", dist.probs()}};
}

Distribution distribution_from_json(const json& doc) {
    if (!doc.contains("support")) throw std::invalid_argument("distribution json: missing \"support\"");
    const auto support = doc.at("support").get<std::vector<double>>();
    const int selectors = doc.contains("probs") + doc.contains("mb_v") + doc.contains("mb_entropy");
    if (selectors != 1)
        throw std::invalid_argument("distribution json: exactly one of \"probs\", \"mb_v\", \"mb_entropy\" required");
    if (doc.contains("probs")) return Distribution(support, doc.at("probs").get<std::vector<double>>());
    if (doc.contains("mb_v")) return maxwell_boltzmann(support, doc.at("mb_v").get<double>());
    return mb_fit_entropy(support, doc.at("mb_entropy").get<double>()).dist;
}

json to_json(const WeightFunction& wf) {
    return json{{"support", wf.alphabet().values()}, {"weights", wf.weights()}};
}

WeightFunction weight_function_from_json(const json& doc) {
    if (!doc.contains("support") || !doc.contains("weights"))
        throw std::invalid_argument("weight function json: need \"support\" and \"weights\"");
    Alphabet alphabet(doc.at("support").get<std::vector<double>>());
    std::vector<long long> omega = doc.at("weights").get<std::vector<long long>>();
    return weights_from_omega(alphabet, omega);
}

}  // namespace smdm
