#include "radscale/report_json.hpp"

#include <algorithm>

#include "radscale/error.hpp"

namespace radscale {

namespace {

Json optionalReal(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json toJson(const ModularityReport& report, const Partition& partition) {
  Json doc;
  doc["Q"] = report.modularity;
  doc["groups"] = Json::array();
  for (const auto& g : report.perGroup) {
    doc["groups"].push_back({{"label", partition.groupLabel(g.group)}, {"Qi", g.contribution}, {"di", optionalReal(g.dModularity)}});
  }
  return doc;
}

Json toJson(const DominationResult& result, std::span<const std::string> labels) {
  Json doc;
  doc["rho"] = result.rho;
  doc["size"] = result.size();
  doc["covered"] = result.coveredCount;
  doc["n"] = result.graphSize;
  doc["authorities"] = Json::array();
  for (const auto v : result.authorities) doc["authorities"].push_back(labels[v]);
  return doc;
}

Json frontierJson(std::span<const ParetoPoint> points, std::span<const CriterionSpec> criteria) {
  const auto frontier = paretoFrontier(points, criteria);
  Json doc;
  doc["criteria"] = Json::array();
  for (const auto& c : criteria) doc["criteria"].push_back({{"name", c.name}, {"direction", std::string(toString(c.direction))}});
  // Points are listed by label; ties on label keep input order.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a].label < points[b].label; });
  doc["points"] = Json::array();
  for (const auto i : order) {
    doc["points"].push_back({{"label", points[i].label},
                             {"values", points[i].values},
                             {"onFrontier", std::binary_search(frontier.begin(), frontier.end(), i)}});
  }
  return doc;
}

Json toJson(std::span<const PassRecord> passes) {
  Json doc = Json::array();
  for (const auto& p : passes) doc.push_back({{"pass", p.pass}, {"Q", p.modularity}, {"communities", p.communities}});
  return doc;
}

Json toJson(const FoundationScores& scores) {
  Json doc;
  doc["community"] = scores.communityLabel;
  doc["tokens"] = scores.tokenCount;
  Json freq;
  for (const auto f : kFoundations) freq[std::string(toString(f))] = scores.of(f);
  doc["frequencies"] = freq;
  return doc;
}

Json toJson(const StructuralReport& report) {
  Json doc;
  doc["window"] = report.windowLabel;
  doc["start"] = formatTimestamp(report.start);
  doc["end"] = formatTimestamp(report.end);
  doc["parameters"] = {{"rho", report.rhos},
                       {"primaryRho", report.primaryRho},
                       {"minCommunitySize", report.minCommunitySize ? Json(*report.minCommunitySize) : Json("auto")},
                       {"threshold", report.threshold},
                       {"seed", report.seed}};
  doc["activeUsers"] = report.activeUsers;
  doc["unseenUsers"] = report.unseenUsers;
  doc["edges"] = report.edges;
  doc["Q"] = report.modularity;
  doc["residualSize"] = report.residualSize;
  doc["communities"] = Json::array();
  for (const auto& c : report.communities) {
    Json pds = Json::array();
    for (const auto& [rho, size] : c.pdsSizes) pds.push_back({{"rho", rho}, {"size", size}});
    doc["communities"].push_back({{"label", c.label},
                                  {"size", c.size},
                                  {"Qi", c.contribution},
                                  {"dModularity", optionalReal(c.dModularity)},
                                  {"pds", pds},
                                  {"authorities", c.authorities},
                                  {"onFrontier", c.onFrontier}});
  }
  doc["frontier"] = report.frontier;
  doc["degenerate"] = report.degenerate;
  doc["warnings"] = report.warnings;
  return doc;
}

Json toJson(const SpeechReport& report) {
  Json doc;
  doc["window"] = report.windowLabel;
  doc["communities"] = Json::array();
  for (const auto& c : report.communities) {
    Json entry = toJson(c.scores);
    entry["onFrontier"] = c.onFrontier;
    doc["communities"].push_back(std::move(entry));
  }
  doc["frontier"] = report.frontier;
  doc["warnings"] = report.warnings;
  return doc;
}

void parseParetoInput(const Json& doc, std::vector<ParetoPoint>& points, std::vector<CriterionSpec>& criteria) {
  try {
    for (const auto& c : doc.at("criteria")) {
      criteria.push_back({c.at("name").get<std::string>(), parseDirection(c.at("direction").get<std::string>())});
    }
    for (const auto& p : doc.at("points")) {
      points.push_back({p.at("label").get<std::string>(), p.at("values").get<std::vector<double>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaMismatch, std::string("Pareto input: ") + e.what());
  }
}

}  // namespace radscale
