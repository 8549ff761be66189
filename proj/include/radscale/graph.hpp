#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace radscale {

using VertexId = std::uint32_t;
using GroupId = std::uint32_t;

using LabelPair = std::pair<std::string, std::string>;

// Simple undirected unweighted graph. Vertices are dense 0..n-1 indices that
// carry unique external labels; adjacency lists are sorted and symmetric.
// Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds from index pairs over `labels`. Self-loops are dropped and
  // duplicate pairs (either orientation) collapse to one edge.
  Graph(std::vector<std::string> labels, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertexCount() const noexcept { return labels_.size(); }
  std::size_t edgeCount() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::size_t maxDegree() const noexcept;
  bool hasEdge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Index of `label`, or -1 when absent.
  std::int64_t find(const std::string& label) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edges_ = 0;
};

// Directed simple graph used only by the directed domination mode, where a
// vertex reaches itself and its out-neighbours.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> labels, std::span<const std::pair<VertexId, VertexId>> arcs);

  std::size_t vertexCount() const noexcept { return labels_.size(); }
  std::size_t arcCount() const noexcept { return arcs_; }
  std::span<const VertexId> outNeighbors(VertexId v) const { return out_[v]; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::int64_t find(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> out_;
  std::size_t arcs_ = 0;
};

// Assignment of every vertex to exactly one of k non-empty groups.
class Partition {
 public:
  Partition() = default;
  // Group ids must be dense: every id in 0..k-1 used at least once, where k
  // is max id + 1. Labels default to the decimal group index.
  explicit Partition(std::vector<GroupId> groupOf, std::vector<std::string> groupLabels = {});

  std::size_t vertexCount() const noexcept { return groupOf_.size(); }
  std::size_t groupCount() const noexcept { return labels_.size(); }
  GroupId groupOf(VertexId v) const { return groupOf_[v]; }
  const std::vector<GroupId>& assignment() const noexcept { return groupOf_; }
  const std::string& groupLabel(GroupId g) const { return labels_[g]; }
  const std::vector<std::string>& groupLabels() const noexcept { return labels_; }

  std::vector<std::vector<VertexId>> members() const;
  std::vector<std::size_t> groupSizes() const;

  // Renumbers arbitrary group ids densely in order of first appearance.
  static Partition fromRaw(std::span<const std::size_t> rawGroupOf);

 private:
  std::vector<GroupId> groupOf_;
  std::vector<std::string> labels_;
};

// Label pairs -> graph, interning labels in first-seen order. Self-loop pairs
// do not introduce vertices on their own.
Graph buildGraph(std::span<const LabelPair> edges);

Digraph buildDigraph(std::span<const LabelPair> arcs);

// Subgraph on `vertices` (kept in the given order, duplicates rejected) with
// every edge whose endpoints are both inside.
Graph inducedSubgraph(const Graph& graph, std::span<const VertexId> vertices);
Digraph inducedSubgraph(const Digraph& graph, std::span<const VertexId> vertices);

// Restriction of `partition` to `vertices`, in that order, with groups that
// become empty dropped and the rest renumbered in ascending original id.
Partition restrictPartition(const Partition& partition, std::span<const VertexId> vertices);

}  // namespace radscale
