#include "radscale/graph_io.hpp"

#include <istream>
#include <ostream>
#include <unordered_map>

#include "radscale/error.hpp"

namespace radscale {

namespace {

// Calls fn(lineNo, fields) for every record line.
template <typename Fn>
void forEachRecord(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    fn(lineNo, splitFields(line));
  }
}

}  // namespace

std::vector<std::string> splitFields(std::string_view line) {
  const char sep = line.find('\t') != std::string_view::npos ? '\t' : ' ';
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::vector<LabelPair> loadLabelPairs(std::istream& in) {
  std::vector<LabelPair> pairs;
  forEachRecord(in, [&](std::size_t lineNo, std::vector<std::string> fields) {
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw LineError(ErrorKind::MalformedLine, lineNo, "expected 2 fields, got " + std::to_string(fields.size()));
    }
    pairs.emplace_back(std::move(fields[0]), std::move(fields[1]));
  });
  return pairs;
}

Graph loadEdgeList(std::istream& in) { return buildGraph(loadLabelPairs(in)); }

Partition loadPartition(std::istream& in, const Graph& graph) {
  constexpr GroupId kUnassigned = ~GroupId{0};
  std::vector<GroupId> groupOf(graph.vertexCount(), kUnassigned);
  std::vector<std::string> groupLabels;
  std::unordered_map<std::string, GroupId> groupIndex;

  forEachRecord(in, [&](std::size_t lineNo, std::vector<std::string> fields) {
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw LineError(ErrorKind::MalformedLine, lineNo, "expected 2 fields, got " + std::to_string(fields.size()));
    }
    const auto v = graph.find(fields[0]);
    if (v < 0) throw LineError(ErrorKind::UnknownVertex, lineNo, fields[0]);
    if (groupOf[v] != kUnassigned) throw LineError(ErrorKind::DuplicateAssignment, lineNo, fields[0]);
    const auto [it, inserted] = groupIndex.emplace(fields[1], static_cast<GroupId>(groupLabels.size()));
    if (inserted) groupLabels.push_back(fields[1]);
    groupOf[v] = it->second;
  });

  for (VertexId v = 0; v < groupOf.size(); ++v) {
    if (groupOf[v] == kUnassigned) throw Error(ErrorKind::MissingVertex, graph.label(v));
  }
  return Partition(std::move(groupOf), std::move(groupLabels));
}

void writeEdgeList(std::ostream& out, const Graph& graph) {
  for (const auto& [u, v] : graph.edges()) out << graph.label(u) << '\t' << graph.label(v) << '\n';
}

void writePartition(std::ostream& out, const Graph& graph, const Partition& partition) {
  for (VertexId v = 0; v < graph.vertexCount(); ++v) {
    out << graph.label(v) << '\t' << partition.groupLabel(partition.groupOf(v)) << '\n';
  }
}

}  // namespace radscale
