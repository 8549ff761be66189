#include "radscale/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "radscale/error.hpp"

namespace radscale {

namespace {

std::unordered_map<std::string, VertexId> indexLabels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, VertexId> index;
  index.reserve(labels.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!index.emplace(labels[v], v).second) {
      throw Error(ErrorKind::InvalidParameter, "duplicate vertex label '" + labels[v] + "'");
    }
  }
  return index;
}

void sortUnique(std::vector<VertexId>& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

std::vector<VertexId> denseRemap(std::size_t n, std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> remap(n, kAbsent);
  for (VertexId i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    if (v >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " >= " + std::to_string(n));
    }
    if (remap[v] != kAbsent) {
      throw Error(ErrorKind::InvalidParameter, "vertex " + std::to_string(v) + " listed twice");
    }
    remap[v] = i;
  }
  return remap;
}

template <typename Interner>
std::vector<std::pair<VertexId, VertexId>> internPairs(std::span<const LabelPair> pairs, Interner& intern) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, std::span<const std::pair<VertexId, VertexId>> edges)
    : labels_(std::move(labels)), index_(indexLabels(labels_)), adjacency_(labels_.size()) {
  const auto n = labels_.size();
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
    if (u == v) continue;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t degreeSum = 0;
  for (auto& list : adjacency_) {
    sortUnique(list);
    degreeSum += list.size();
  }
  edges_ = degreeSum / 2;
}

std::size_t Graph::maxDegree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::hasEdge(VertexId u, VertexId v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::int64_t Graph::find(const std::string& label) const {
  const auto it = index_.find(label);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (const VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Digraph::Digraph(std::vector<std::string> labels, std::span<const std::pair<VertexId, VertexId>> arcs)
    : labels_(std::move(labels)), index_(indexLabels(labels_)), out_(labels_.size()) {
  const auto n = labels_.size();
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) throw Error(ErrorKind::IndexOutOfRange, "arc endpoint out of range");
    if (u != v) out_[u].push_back(v);
  }
  for (auto& list : out_) {
    sortUnique(list);
    arcs_ += list.size();
  }
}

std::int64_t Digraph::find(const std::string& label) const {
  const auto it = index_.find(label);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Partition::Partition(std::vector<GroupId> groupOf, std::vector<std::string> groupLabels)
    : groupOf_(std::move(groupOf)), labels_(std::move(groupLabels)) {
  GroupId k = 0;
  for (const GroupId g : groupOf_) k = std::max<GroupId>(k, g + 1);
  std::vector<bool> used(k, false);
  for (const GroupId g : groupOf_) used[g] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw Error(ErrorKind::InvalidParameter, "partition has an empty group");
  }
  if (labels_.empty()) {
    labels_.reserve(k);
    for (GroupId g = 0; g < k; ++g) labels_.push_back(std::to_string(g));
  } else if (labels_.size() != k) {
    throw Error(ErrorKind::InvalidParameter, "group label count does not match group count");
  }
}

std::vector<std::vector<VertexId>> Partition::members() const {
  std::vector<std::vector<VertexId>> out(groupCount());
  for (VertexId v = 0; v < groupOf_.size(); ++v) out[groupOf_[v]].push_back(v);
  return out;
}

std::vector<std::size_t> Partition::groupSizes() const {
  std::vector<std::size_t> sizes(groupCount(), 0);
  for (const GroupId g : groupOf_) ++sizes[g];
  return sizes;
}

Partition Partition::fromRaw(std::span<const std::size_t> rawGroupOf) {
  std::unordered_map<std::size_t, GroupId> dense;
  std::vector<GroupId> groupOf;
  groupOf.reserve(rawGroupOf.size());
  for (const auto raw : rawGroupOf) {
    const auto [it, inserted] = dense.emplace(raw, static_cast<GroupId>(dense.size()));
    groupOf.push_back(it->second);
  }
  return Partition(std::move(groupOf));
}

Graph buildGraph(std::span<const LabelPair> edges) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](const std::string& label) {
    const auto [it, inserted] = index.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  const auto pairs = internPairs(edges, intern);
  return Graph(std::move(labels), pairs);
}

Digraph buildDigraph(std::span<const LabelPair> arcs) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](const std::string& label) {
    const auto [it, inserted] = index.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  const auto pairs = internPairs(arcs, intern);
  return Digraph(std::move(labels), pairs);
}

Graph inducedSubgraph(const Graph& graph, std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = ~VertexId{0};
  const auto remap = denseRemap(graph.vertexCount(), vertices);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    labels.push_back(graph.label(vertices[i]));
    for (const VertexId w : graph.neighbors(vertices[i])) {
      const VertexId j = remap[w];
      if (j != kAbsent && i < j) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(labels), edges);
}

Digraph inducedSubgraph(const Digraph& graph, std::span<const VertexId> vertices) {
  constexpr VertexId kAbsent = ~VertexId{0};
  const auto remap = denseRemap(graph.vertexCount(), vertices);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    labels.push_back(graph.label(vertices[i]));
    for (const VertexId w : graph.outNeighbors(vertices[i])) {
      const VertexId j = remap[w];
      if (j != kAbsent) arcs.emplace_back(i, j);
    }
  }
  return Digraph(std::move(labels), arcs);
}

Partition restrictPartition(const Partition& partition, std::span<const VertexId> vertices) {
  constexpr GroupId kUnused = ~GroupId{0};
  std::vector<bool> used(partition.groupCount(), false);
  for (const VertexId v : vertices) {
    if (v >= partition.vertexCount()) throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
    used[partition.groupOf(v)] = true;
  }
  std::vector<GroupId> renumber(partition.groupCount(), kUnused);
  std::vector<std::string> labels;
  for (GroupId g = 0; g < partition.groupCount(); ++g) {
    if (!used[g]) continue;
    renumber[g] = static_cast<GroupId>(labels.size());
    labels.push_back(partition.groupLabel(g));
  }
  std::vector<GroupId> groupOf;
  groupOf.reserve(vertices.size());
  for (const VertexId v : vertices) groupOf.push_back(renumber[partition.groupOf(v)]);
  return Partition(std::move(groupOf), std::move(labels));
}

}  // namespace radscale
