#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "radscale/graph.hpp"

namespace radscale {

// Splits one record line into fields: on TAB when the line contains one,
// otherwise on single spaces.
std::vector<std::string> splitFields(std::string_view line);

// Raw "src<TAB>dst" pairs in file order, self-loops and duplicates included.
std::vector<LabelPair> loadLabelPairs(std::istream& in);

// "src<TAB>dst" per line; '#' comments and blank lines skipped.
// Throws LineError(MalformedLine) for lines without exactly two fields.
Graph loadEdgeList(std::istream& in);

// "vertexLabel<TAB>groupLabel" per line. Group indices follow first-seen
// order of group labels. Every graph vertex must be assigned exactly once.
Partition loadPartition(std::istream& in, const Graph& graph);

void writeEdgeList(std::ostream& out, const Graph& graph);
void writePartition(std::ostream& out, const Graph& graph, const Partition& partition);

}  // namespace radscale
