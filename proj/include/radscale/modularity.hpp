#pragma once

#include <optional>
#include <vector>

#include "radscale/graph.hpp"

namespace radscale {

// Per-group edge aggregates: in-group edge count e_i and degree sum D_i.
struct GroupAggregates {
  std::vector<std::size_t> internalEdges;
  std::vector<std::size_t> degreeSums;
  std::size_t edgeCount = 0;
};

GroupAggregates aggregateGroups(const Graph& graph, const Partition& partition);

struct GroupModularity {
  GroupId group = 0;
  double contribution = 0.0;            // Q_i = e_i/m - (D_i/2m)^2
  std::optional<double> dModularity;    // Q_i / Q, undefined when Q == 0
};

struct ModularityReport {
  double modularity = 0.0;
  std::vector<GroupModularity> perGroup;
};

// |Q| below this makes the relative contribution Q_i / Q undefined.
inline constexpr double kZeroModularity = 1e-12;

// Modularity, evaluated group-wise in O(n + m). Throws EmptyGraph when m == 0.
double modularity(const Graph& graph, const Partition& partition);

double groupContribution(const Graph& graph, const Partition& partition, GroupId group);

// Share of the network modularity owed to one group. Throws ZeroModularity
// when |Q| < kZeroModularity. May be negative.
double dModularity(const Graph& graph, const Partition& partition, GroupId group);

ModularityReport dModularityAll(const Graph& graph, const Partition& partition);

}  // namespace radscale
