#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "radscale/events.hpp"
#include "radscale/graph.hpp"

namespace radscale {

struct LabeledGraph {
  Graph graph;
  Partition partition;
};

// Three groups of four: a black clique b1..b4 and red (r1..r4) and blue
// (u1..u4) 4-cycles, joined by b1-r1, b2-u1, r2-u2, r3-u3, r4-u4 (m = 19).
LabeledGraph figure1Graph();

// Hubs h1..h3 on a path, each with its own four leaves (h1: l1..l4, ...).
Graph figure2Graph();

struct PlantedPartitionParams {
  std::size_t groupCount = 2;
  std::size_t groupSize = 10;
  double pIn = 0.5;
  double pOut = 0.05;
  std::uint64_t seed = 0;
};

// Independent edges: pIn within groups, pOut across. Vertex labels are
// "g<group>v<index>"; group labels "g<group>".
LabeledGraph plantedPartition(const PlantedPartitionParams& params);

// Erdos-Renyi style graph with edge probability p and labels "v<index>".
Graph randomGraph(std::size_t n, double p, std::uint64_t seed);

// Event stream of equal-sized planted communities over consecutive two-week
// windows. Community 0 ("radical") grows more cohesive, more isolated and
// more concentrated around a few hubs from one window to the next; the
// others keep constant statistics.
struct StreamParams {
  std::size_t communities = 5;
  std::size_t communitySize = 40;
  std::size_t hubs = 2;
  double backgroundPIn = 0.08;
  double backgroundPOut = 0.004;
  // One entry per window, for the radical community.
  std::vector<double> radicalPIn = {0.08, 0.12, 0.16, 0.2};
  std::vector<double> radicalPOut = {0.004, 0.002, 0.001, 0.0005};
  std::vector<double> hubReach = {0.2, 0.45, 0.65, 0.85};
  // Original posts per user per window (0 disables text).
  std::size_t postsPerUser = 0;
  std::vector<double> radicalAuthorityDensity = {0.1, 0.2, 0.3, 0.4};
  double backgroundMoralDensity = 0.1;
  std::uint64_t seed = 0;
};

struct SyntheticStream {
  EventLog events;
  std::vector<WindowSpec> windows;
  std::map<std::string, std::string> membership;   // user -> planted community
  std::string radicalCommunity;
};

SyntheticStream radicalizationStream(const StreamParams& params = {});

// A tiny .dic whose categories use the standard MFD names and cover the
// moral words radicalizationStream writes.
std::string syntheticDictionary();

}  // namespace radscale
