#include "radscale/modularity.hpp"

#include <cmath>
#include <string>

#include "radscale/error.hpp"

namespace radscale {

namespace {

void checkInputs(const Graph& graph, const Partition& partition) {
  if (partition.vertexCount() != graph.vertexCount()) {
    throw Error(ErrorKind::InvalidParameter, "partition covers " + std::to_string(partition.vertexCount()) +
                                                 " vertices, graph has " + std::to_string(graph.vertexCount()));
  }
  if (graph.edgeCount() == 0) throw Error(ErrorKind::EmptyGraph, "modularity needs at least one edge");
}

double contributionOf(const GroupAggregates& agg, std::size_t g) {
  const double m = static_cast<double>(agg.edgeCount);
  const double share = static_cast<double>(agg.degreeSums[g]) / (2.0 * m);
  return static_cast<double>(agg.internalEdges[g]) / m - share * share;
}

double sumContributions(const GroupAggregates& agg) {
  double q = 0.0;
  for (std::size_t g = 0; g < agg.degreeSums.size(); ++g) q += contributionOf(agg, g);
  return q;
}

}  // namespace

GroupAggregates aggregateGroups(const Graph& graph, const Partition& partition) {
  GroupAggregates agg;
  agg.internalEdges.assign(partition.groupCount(), 0);
  agg.degreeSums.assign(partition.groupCount(), 0);
  agg.edgeCount = graph.edgeCount();
  for (VertexId u = 0; u < graph.vertexCount(); ++u) {
    const GroupId gu = partition.groupOf(u);
    agg.degreeSums[gu] += graph.degree(u);
    for (const VertexId v : graph.neighbors(u)) {
      if (u < v && partition.groupOf(v) == gu) ++agg.internalEdges[gu];
    }
  }
  return agg;
}

double modularity(const Graph& graph, const Partition& partition) {
  checkInputs(graph, partition);
  return sumContributions(aggregateGroups(graph, partition));
}

double groupContribution(const Graph& graph, const Partition& partition, GroupId group) {
  checkInputs(graph, partition);
  if (group >= partition.groupCount()) {
    throw Error(ErrorKind::IndexOutOfRange, "group " + std::to_string(group));
  }
  return contributionOf(aggregateGroups(graph, partition), group);
}

double dModularity(const Graph& graph, const Partition& partition, GroupId group) {
  checkInputs(graph, partition);
  if (group >= partition.groupCount()) {
    throw Error(ErrorKind::IndexOutOfRange, "group " + std::to_string(group));
  }
  const auto agg = aggregateGroups(graph, partition);
  const double q = sumContributions(agg);
  if (std::abs(q) < kZeroModularity) throw Error(ErrorKind::ZeroModularity, "network modularity is zero");
  return contributionOf(agg, group) / q;
}

ModularityReport dModularityAll(const Graph& graph, const Partition& partition) {
  checkInputs(graph, partition);
  const auto agg = aggregateGroups(graph, partition);
  ModularityReport report;
  report.perGroup.reserve(partition.groupCount());
  for (GroupId g = 0; g < partition.groupCount(); ++g) {
    const double qi = contributionOf(agg, g);
    report.modularity += qi;
    report.perGroup.push_back({g, qi, std::nullopt});
  }
  if (std::abs(report.modularity) >= kZeroModularity) {
    for (auto& entry : report.perGroup) entry.dModularity = entry.contribution / report.modularity;
  }
  return report;
}

}  // namespace radscale
