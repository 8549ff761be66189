#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radscale/graph.hpp"

namespace radscale {

// Absent means AUTO: the resolution-limit bound ceil(sqrt(2m)).
using MinCommunitySize = std::optional<std::size_t>;

struct DetectionConfig {
  std::uint64_t seed = 0;
  int maxPasses = 20;
  double minGainEpsilon = 1e-7;
  // Independent seeded runs; the one with the highest final modularity wins.
  int restarts = 32;
  MinCommunitySize minCommunitySize = std::nullopt;
};

struct PassRecord {
  int pass = 0;               // 0 is the singleton starting point
  double modularity = 0.0;
  std::size_t communities = 0;
};

struct DetectionResult {
  Partition partition;
  std::vector<PassRecord> passes;   // of the winning restart
  std::uint64_t seed = 0;
  int restart = 0;
};

// Louvain local moving + aggregation. Each pass's modularity is at least the
// previous one's; gains are evaluated in exact integer arithmetic.
DetectionResult detectCommunities(const Graph& graph, const DetectionConfig& config = {});

// ceil(sqrt(2m)); communities below this size can be artefacts of merging.
std::size_t minimumDetectableSize(std::size_t edgeCount);
inline std::size_t minimumDetectableSize(const Graph& graph) { return minimumDetectableSize(graph.edgeCount()); }

inline const std::string kResidualGroupLabel = "other";

struct SizeFilterResult {
  // Kept groups first, in original order; the residual group, if any, last.
  Partition partition;
  std::vector<GroupId> keptGroups;   // original ids of the kept groups
  std::size_t threshold = 0;
  bool hasResidual = false;
  std::size_t residualSize = 0;
};

// Merges every group smaller than the threshold into one residual group.
SizeFilterResult filterBySize(const Partition& partition, const Graph& graph, MinCommunitySize minSize);

}  // namespace radscale
