#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "radscale/community.hpp"
#include "radscale/events.hpp"
#include "radscale/graph.hpp"
#include "radscale/lexicon.hpp"

namespace radscale {

using KindSet = std::set<EventKind>;
// user label -> community label
using Membership = std::map<std::string, std::string>;

struct IngestOptions {
  std::optional<KindSet> kinds;             // keep only these kinds
  std::vector<std::string> keywords;        // keep records whose text contains one (case-insensitive)
};

struct IngestResult {
  EventLog events;
  std::size_t skipped = 0;    // unparseable or incomplete records
  std::size_t filtered = 0;   // valid records removed by the kind/keyword filters
};

// JSONL records {source, target, author, text, timestamp, kind}. A record is
// valid with a parseable timestamp and either source+target or author+text.
// Throws NoValidRecords when nothing valid was read.
IngestResult ingestEvents(std::istream& in, const IngestOptions& options = {});

void writeEvents(std::ostream& out, const EventLog& events);

// Records with start <= t < end, in original order.
EventLog sliceWindow(const EventLog& events, const WindowSpec& window);

// Undirected simple interaction graph over the users of matching events.
// Throws NoMatchingEvents when no edge survives.
Graph buildInteractionGraph(const EventLog& events, const KindSet& kinds);

// Influence arcs for the directed domination mode: target -> source, so an
// account reaches those who retweet or reply to it.
Digraph buildInfluenceDigraph(const EventLog& events, const KindSet& kinds);

// "label:start:end"; start and end are RFC 3339 timestamps or dates.
WindowSpec parseWindowSpec(std::string_view text);

// "user<TAB>community" lines, netcore partition syntax.
Membership loadMembership(std::istream& in);

struct AnalysisConfig {
  std::vector<double> rhos = {0.5, 0.75, 1.0};
  double primaryRho = 0.75;
  MinCommunitySize minCommunitySize = std::nullopt;
  KindSet kinds = {EventKind::Retweet};
  bool directedDomination = false;
  bool includeShares = false;
  DetectionConfig detection;
};

// Normalises rhos (sorted, unique, primary included) and checks ranges.
void validate(AnalysisConfig& config);

struct DetectionOutcome {
  Membership membership;
  std::vector<PassRecord> passes;
  std::size_t users = 0;
  std::size_t edges = 0;
};

// Detects communities once on the events inside `range`.
DetectionOutcome detectMembership(const EventLog& events, const WindowSpec& range, const AnalysisConfig& config);

struct CommunityStructure {
  std::string label;
  std::size_t size = 0;
  double contribution = 0.0;
  std::optional<double> dModularity;
  std::vector<std::pair<double, std::size_t>> pdsSizes;   // (rho, |S*|) ascending rho
  std::vector<std::string> authorities;                   // at the primary rho
  bool onFrontier = false;

  std::size_t pdsSizeAt(double rho) const;
};

struct StructuralReport {
  std::string windowLabel;
  Timestamp start{};
  Timestamp end{};
  std::size_t activeUsers = 0;       // users in the window graph
  std::size_t unseenUsers = 0;       // active but absent from the membership
  std::size_t edges = 0;             // edges among seen users
  double modularity = 0.0;
  std::size_t threshold = 0;
  std::size_t residualSize = 0;
  std::vector<CommunityStructure> communities;   // sorted by label
  std::vector<std::string> frontier;             // sorted
  bool degenerate = false;
  std::vector<std::string> warnings;
  // parameters
  std::vector<double> rhos;
  double primaryRho = 0.0;
  MinCommunitySize minCommunitySize;
  std::uint64_t seed = 0;
};

std::vector<StructuralReport> runStructuralAnalysis(const EventLog& events, std::span<const WindowSpec> windows,
                                                    const Membership& membership, AnalysisConfig config);

// Detects on `detectionRange` first, then analyses every window.
std::vector<StructuralReport> runStructuralAnalysis(const EventLog& events, std::span<const WindowSpec> windows,
                                                    const WindowSpec& detectionRange, AnalysisConfig config);

struct SpeechCommunity {
  FoundationScores scores;
  bool onFrontier = false;
};

struct SpeechReport {
  std::string windowLabel;
  std::vector<SpeechCommunity> communities;   // sorted by label
  std::vector<std::string> frontier;
  std::vector<std::string> warnings;
};

// Original posts only unless config.includeShares; communities with an
// empty corpus in a window are dropped with a warning.
std::vector<SpeechReport> runSpeechAnalysis(const EventLog& events, std::span<const WindowSpec> windows,
                                            const Membership& membership, const Lexicon& lexicon,
                                            const FoundationMap& map, const AnalysisConfig& config);

// Scatter data: window,community,size,dModularity,pdsSize,onFrontier.
void writeStructuralCsv(std::ostream& out, std::span<const StructuralReport> reports);
// Parallel-coordinates data: window,community,tokens,<four axes>,onFrontier.
void writeSpeechCsv(std::ostream& out, std::span<const SpeechReport> reports);

// Whole-run configuration, as read from the JSON config file.
struct PipelineConfig {
  std::filesystem::path events;
  std::optional<std::filesystem::path> partition;
  std::vector<WindowSpec> windows;
  std::optional<WindowSpec> detectionRange;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> foundationMap;
  std::filesystem::path output = "radscale-out";
  std::vector<std::string> keywords;
  AnalysisConfig analysis;
};

// Relative paths resolve against `baseDir`.
PipelineConfig parsePipelineConfig(std::istream& in, const std::filesystem::path& baseDir = {});

struct PipelineResult {
  std::optional<DetectionOutcome> detection;
  Membership membership;
  std::vector<StructuralReport> structural;
  std::vector<SpeechReport> speech;
  std::size_t skippedRecords = 0;
};

PipelineResult runPipeline(const PipelineConfig& config);

// structural.json, speech.json (when scored), detection.json, partition.tsv,
// structural.csv, speech.csv under config.output.
void writePipelineOutputs(const PipelineConfig& config, const PipelineResult& result);

std::string formatReal(double value);

}  // namespace radscale
