#pragma once

#include <nlohmann/json.hpp>
#include <span>

#include "radscale/community.hpp"
#include "radscale/domination.hpp"
#include "radscale/lexicon.hpp"
#include "radscale/modularity.hpp"
#include "radscale/pareto.hpp"
#include "radscale/pipeline.hpp"

namespace radscale {

using Json = nlohmann::ordered_json;

// {"Q", "groups": [{"label", "Qi", "di"}]}; di is null when undefined.
Json toJson(const ModularityReport& report, const Partition& partition);

// {"rho", "size", "covered", "n", "authorities": [labels in pick order]}.
Json toJson(const DominationResult& result, std::span<const std::string> labels);

// {"criteria": [{"name", "direction"}], "points": [{"label", "values", "onFrontier"}]}.
Json frontierJson(std::span<const ParetoPoint> points, std::span<const CriterionSpec> criteria);

Json toJson(std::span<const PassRecord> passes);
Json toJson(const FoundationScores& scores);
Json toJson(const StructuralReport& report);
Json toJson(const SpeechReport& report);

// Inverse of frontierJson's input half: {"criteria": [...], "points": [{"label", "values"}]}.
void parseParetoInput(const Json& doc, std::vector<ParetoPoint>& points, std::vector<CriterionSpec>& criteria);

}  // namespace radscale
