#include "radscale/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "radscale/domination.hpp"
#include "radscale/error.hpp"
#include "radscale/graph_io.hpp"
#include "radscale/modularity.hpp"
#include "radscale/pareto.hpp"
#include "radscale/report_json.hpp"

namespace radscale {

namespace {

const nlohmann::json* stringField(const nlohmann::json& record, const char* name, bool& bad) {
  const auto it = record.find(name);
  if (it == record.end() || it->is_null()) return nullptr;
  if (!it->is_string()) {
    bad = true;
    return nullptr;
  }
  return &*it;
}

std::optional<Event> parseRecord(const std::string& line) {
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    return std::nullopt;
  }
  if (!record.is_object()) return std::nullopt;

  bool bad = false;
  const auto* timestamp = stringField(record, "timestamp", bad);
  const auto* source = stringField(record, "source", bad);
  const auto* target = stringField(record, "target", bad);
  const auto* author = stringField(record, "author", bad);
  const auto* text = stringField(record, "text", bad);
  const auto* kind = stringField(record, "kind", bad);
  if (bad || timestamp == nullptr) return std::nullopt;

  Event e;
  const auto t = parseTimestamp(timestamp->get_ref<const std::string&>());
  if (!t) return std::nullopt;
  e.timestamp = *t;
  if (source) e.source = source->get<std::string>();
  if (target) e.target = target->get<std::string>();
  if (author) e.author = author->get<std::string>();
  if (text) e.text = text->get<std::string>();
  if (kind) e.kind = parseEventKind(kind->get_ref<const std::string&>());

  const bool interaction = !e.source.empty() && !e.target.empty();
  const bool document = !e.speaker().empty() && e.text.has_value();
  if (!interaction && !document) return std::nullopt;
  if (!interaction) e.target.clear();
  return e;
}

std::vector<std::string> lowered(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(toLowerUtf8(w));
  return out;
}

std::vector<LabelPair> interactionPairs(const EventLog& events, const KindSet& kinds) {
  std::vector<LabelPair> pairs;
  for (const auto& e : events) {
    if (e.isInteraction() && kinds.contains(e.kind)) pairs.emplace_back(e.source, e.target);
  }
  return pairs;
}

std::vector<CriterionSpec> structuralCriteria(double primaryRho) {
  return {{"dModularity", Direction::HigherIsMoreRadical},
          {"pdsSize@" + formatReal(primaryRho), Direction::LowerIsMoreRadical}};
}

std::vector<CriterionSpec> speechCriteria() {
  std::vector<CriterionSpec> criteria;
  for (const auto f : kFoundations) criteria.push_back({std::string(toString(f)), Direction::HigherIsMoreRadical});
  return criteria;
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

StructuralReport analyseWindow(const EventLog& events, const WindowSpec& window, const Membership& membership,
                               const AnalysisConfig& config) {
  StructuralReport report;
  report.windowLabel = window.label;
  report.start = window.start;
  report.end = window.end;
  report.rhos = config.rhos;
  report.primaryRho = config.primaryRho;
  report.minCommunitySize = config.minCommunitySize;
  report.seed = config.detection.seed;

  const auto windowEvents = sliceWindow(events, window);
  const Graph full = buildGraph(interactionPairs(windowEvents, config.kinds));
  report.activeUsers = full.vertexCount();

  std::vector<VertexId> seen;
  for (VertexId v = 0; v < full.vertexCount(); ++v) {
    if (membership.contains(full.label(v))) seen.push_back(v);
  }
  report.unseenUsers = full.vertexCount() - seen.size();
  const Graph graph = inducedSubgraph(full, seen);
  report.edges = graph.edgeCount();
  if (graph.edgeCount() == 0) {
    report.degenerate = true;
    report.warnings.push_back("no interactions among known users in window");
    return report;
  }

  // Group ids follow sorted community labels.
  std::map<std::string, GroupId> groupIds;
  for (VertexId v = 0; v < graph.vertexCount(); ++v) groupIds.emplace(membership.at(graph.label(v)), 0);
  std::vector<std::string> groupLabels;
  for (auto& [label, id] : groupIds) {
    id = static_cast<GroupId>(groupLabels.size());
    groupLabels.push_back(label);
  }
  std::vector<GroupId> groupOf;
  for (VertexId v = 0; v < graph.vertexCount(); ++v) groupOf.push_back(groupIds.at(membership.at(graph.label(v))));
  const Partition projected(std::move(groupOf), std::move(groupLabels));

  const auto filtered = filterBySize(projected, graph, config.minCommunitySize);
  report.threshold = filtered.threshold;
  report.residualSize = filtered.residualSize;
  const auto modularityReport = dModularityAll(graph, filtered.partition);
  report.modularity = modularityReport.modularity;

  std::optional<Digraph> influence;
  if (config.directedDomination) {
    std::vector<LabelPair> arcs;
    for (const auto& e : windowEvents) {
      if (e.isInteraction() && config.kinds.contains(e.kind)) arcs.emplace_back(e.target, e.source);
    }
    influence = buildDigraph(arcs);
  }

  const auto members = filtered.partition.members();
  for (GroupId g = 0; g < filtered.keptGroups.size(); ++g) {
    CommunityStructure community;
    community.label = filtered.partition.groupLabel(g);
    community.size = members[g].size();
    community.contribution = modularityReport.perGroup[g].contribution;
    community.dModularity = modularityReport.perGroup[g].dModularity;

    std::vector<std::string> memberLabels;
    for (const VertexId v : members[g]) memberLabels.push_back(graph.label(v));
    for (const double rho : config.rhos) {
      DominationResult result;
      std::vector<std::string> pickLabels;
      if (influence) {
        std::vector<VertexId> ids;
        for (const auto& label : memberLabels) ids.push_back(static_cast<VertexId>(influence->find(label)));
        const Digraph sub = inducedSubgraph(*influence, ids);
        result = greedyPartialDominatingSet(sub, rho);
        for (const VertexId a : result.authorities) pickLabels.push_back(sub.label(a));
      } else {
        const Graph sub = inducedSubgraph(graph, members[g]);
        result = greedyPartialDominatingSet(sub, rho);
        for (const VertexId a : result.authorities) pickLabels.push_back(sub.label(a));
      }
      community.pdsSizes.emplace_back(rho, result.size());
      if (rho == config.primaryRho) community.authorities = std::move(pickLabels);
    }
    report.communities.push_back(std::move(community));
  }
  std::sort(report.communities.begin(), report.communities.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });

  std::vector<ParetoPoint> points;
  for (const auto& c : report.communities) {
    if (!c.dModularity) {
      report.warnings.push_back("community '" + c.label + "' has undefined d-modularity; excluded from frontier");
      continue;
    }
    points.push_back({c.label, {*c.dModularity, static_cast<double>(c.pdsSizeAt(config.primaryRho))}});
  }
  if (!points.empty()) {
    const auto criteria = structuralCriteria(config.primaryRho);
    report.frontier = paretoFrontierLabels(points, criteria);
    for (auto& c : report.communities) {
      c.onFrontier = std::binary_search(report.frontier.begin(), report.frontier.end(), c.label);
    }
  }
  if (report.communities.size() < 2) {
    report.degenerate = true;
    report.warnings.push_back("fewer than two communities survive the size filter");
  }
  return report;
}

}  // namespace

std::string formatReal(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

IngestResult ingestEvents(std::istream& in, const IngestOptions& options) {
  IngestResult result;
  const auto keywords = lowered(options.keywords);
  std::string line;
  std::size_t valid = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto event = parseRecord(line);
    if (!event) {
      ++result.skipped;
      continue;
    }
    ++valid;
    if (options.kinds && !options.kinds->contains(event->kind)) {
      ++result.filtered;
      continue;
    }
    if (!keywords.empty()) {
      const auto text = event->text ? toLowerUtf8(*event->text) : std::string{};
      const bool hit = std::any_of(keywords.begin(), keywords.end(),
                                   [&](const std::string& k) { return text.find(k) != std::string::npos; });
      if (!hit) {
        ++result.filtered;
        continue;
      }
    }
    result.events.push_back(std::move(*event));
  }
  if (valid == 0) throw Error(ErrorKind::NoValidRecords, std::to_string(result.skipped) + " records skipped");
  return result;
}

void writeEvents(std::ostream& out, const EventLog& events) {
  for (const auto& e : events) {
    Json record;
    if (!e.source.empty()) record["source"] = e.source;
    if (!e.target.empty()) record["target"] = e.target;
    if (!e.author.empty()) record["author"] = e.author;
    if (e.text) record["text"] = *e.text;
    record["timestamp"] = formatTimestamp(e.timestamp);
    record["kind"] = std::string(toString(e.kind));
    out << record.dump() << '\n';
  }
}

EventLog sliceWindow(const EventLog& events, const WindowSpec& window) {
  EventLog out;
  std::copy_if(events.begin(), events.end(), std::back_inserter(out),
               [&](const Event& e) { return window.contains(e.timestamp); });
  return out;
}

Graph buildInteractionGraph(const EventLog& events, const KindSet& kinds) {
  Graph graph = buildGraph(interactionPairs(events, kinds));
  if (graph.edgeCount() == 0) throw Error(ErrorKind::NoMatchingEvents, "no interaction edges of the selected kinds");
  return graph;
}

Digraph buildInfluenceDigraph(const EventLog& events, const KindSet& kinds) {
  std::vector<LabelPair> arcs;
  for (const auto& [source, target] : interactionPairs(events, kinds)) arcs.emplace_back(target, source);
  Digraph graph = buildDigraph(arcs);
  if (graph.arcCount() == 0) throw Error(ErrorKind::NoMatchingEvents, "no interaction arcs of the selected kinds");
  return graph;
}

WindowSpec parseWindowSpec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(ErrorKind::InvalidParameter, "window must be 'label:start:end': " + std::string(text));
  }
  const auto rest = text.substr(colon + 1);
  // Timestamps contain ':' themselves; accept the first split where both halves parse.
  for (auto pos = rest.find(':'); pos != std::string_view::npos; pos = rest.find(':', pos + 1)) {
    const auto start = parseTimestamp(rest.substr(0, pos));
    const auto end = parseTimestamp(rest.substr(pos + 1));
    if (start && end) {
      if (!(*start < *end)) throw Error(ErrorKind::InvalidParameter, "window start must precede end");
      return {std::string(text.substr(0, colon)), *start, *end};
    }
  }
  throw Error(ErrorKind::InvalidTimestamp, "cannot parse window bounds in '" + std::string(text) + "'");
}

Membership loadMembership(std::istream& in) {
  Membership membership;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = splitFields(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw LineError(ErrorKind::MalformedLine, lineNo, "expected 'user<TAB>community'");
    }
    if (!membership.emplace(fields[0], fields[1]).second) {
      throw LineError(ErrorKind::DuplicateAssignment, lineNo, fields[0]);
    }
  }
  return membership;
}

void validate(AnalysisConfig& config) {
  for (const double rho : config.rhos) dominationTarget(rho, 1);
  dominationTarget(config.primaryRho, 1);
  config.rhos.push_back(config.primaryRho);
  std::sort(config.rhos.begin(), config.rhos.end());
  config.rhos.erase(std::unique(config.rhos.begin(), config.rhos.end()), config.rhos.end());
  if (config.kinds.empty()) throw Error(ErrorKind::InvalidParameter, "at least one interaction kind is required");
}

std::size_t CommunityStructure::pdsSizeAt(double rho) const {
  for (const auto& [r, size] : pdsSizes) {
    if (r == rho) return size;
  }
  throw std::logic_error("no dominating-set size recorded for rho " + formatReal(rho));
}

DetectionOutcome detectMembership(const EventLog& events, const WindowSpec& range, const AnalysisConfig& config) {
  const Graph graph = buildInteractionGraph(sliceWindow(events, range), config.kinds);
  const auto detection = detectCommunities(graph, config.detection);
  DetectionOutcome outcome;
  outcome.passes = detection.passes;
  outcome.users = graph.vertexCount();
  outcome.edges = graph.edgeCount();
  for (VertexId v = 0; v < graph.vertexCount(); ++v) {
    outcome.membership.emplace(graph.label(v),
                               detection.partition.groupLabel(detection.partition.groupOf(v)));
  }
  return outcome;
}

std::vector<StructuralReport> runStructuralAnalysis(const EventLog& events, std::span<const WindowSpec> windows,
                                                    const Membership& membership, AnalysisConfig config) {
  validate(config);
  std::vector<StructuralReport> reports;
  reports.reserve(windows.size());
  for (const auto& window : windows) reports.push_back(analyseWindow(events, window, membership, config));
  return reports;
}

std::vector<StructuralReport> runStructuralAnalysis(const EventLog& events, std::span<const WindowSpec> windows,
                                                    const WindowSpec& detectionRange, AnalysisConfig config) {
  validate(config);
  const auto detection = detectMembership(events, detectionRange, config);
  return runStructuralAnalysis(events, windows, detection.membership, std::move(config));
}

std::vector<SpeechReport> runSpeechAnalysis(const EventLog& events, std::span<const WindowSpec> windows,
                                            const Membership& membership, const Lexicon& lexicon,
                                            const FoundationMap& map, const AnalysisConfig& config) {
  const CorpusScorer scorer(lexicon, map);
  std::set<std::string> communities;
  for (const auto& [user, community] : membership) communities.insert(community);

  std::vector<SpeechReport> reports;
  for (const auto& window : windows) {
    SpeechReport report;
    report.windowLabel = window.label;
    std::map<std::string, std::vector<std::string>> docs;
    for (const auto& label : communities) docs[label];
    for (const auto& e : events) {
      if (!window.contains(e.timestamp) || !e.text) continue;
      if (e.kind == EventKind::Retweet && !config.includeShares) continue;
      const auto it = membership.find(e.speaker());
      if (it != membership.end()) docs[it->second].push_back(*e.text);
    }
    for (const auto& [label, corpus] : docs) {
      try {
        report.communities.push_back({scorer.score(corpus, label), false});
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::EmptyCorpus) throw;
        report.warnings.push_back("community '" + label + "' has an empty corpus; dropped");
      }
    }
    if (!report.communities.empty()) {
      std::vector<ParetoPoint> points;
      for (const auto& c : report.communities) {
        points.push_back({c.scores.communityLabel, {c.scores.frequency.begin(), c.scores.frequency.end()}});
      }
      report.frontier = paretoFrontierLabels(points, speechCriteria());
      for (auto& c : report.communities) {
        c.onFrontier = std::binary_search(report.frontier.begin(), report.frontier.end(), c.scores.communityLabel);
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

void writeStructuralCsv(std::ostream& out, std::span<const StructuralReport> reports) {
  out << "window,community,size,dModularity,pdsSize,onFrontier\n";
  for (const auto& r : reports) {
    for (const auto& c : r.communities) {
      out << csvField(r.windowLabel) << ',' << csvField(c.label) << ',' << c.size << ','
          << (c.dModularity ? formatReal(*c.dModularity) : std::string{}) << ',' << c.pdsSizeAt(r.primaryRho) << ','
          << (c.onFrontier ? "true" : "false") << '\n';
    }
  }
}

void writeSpeechCsv(std::ostream& out, std::span<const SpeechReport> reports) {
  out << "window,community,tokens";
  for (const auto f : kFoundations) out << ',' << toString(f);
  out << ",onFrontier\n";
  for (const auto& r : reports) {
    for (const auto& c : r.communities) {
      out << csvField(r.windowLabel) << ',' << csvField(c.scores.communityLabel) << ',' << c.scores.tokenCount;
      for (const double v : c.scores.frequency) out << ',' << formatReal(v);
      out << ',' << (c.onFrontier ? "true" : "false") << '\n';
    }
  }
}

PipelineConfig parsePipelineConfig(std::istream& in, const std::filesystem::path& baseDir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidParameter, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidParameter, "config must be a JSON object");

  auto path = [&](const nlohmann::json& v) {
    std::filesystem::path p = v.get<std::string>();
    return p.is_absolute() || baseDir.empty() ? p : baseDir / p;
  };
  auto window = [&](const nlohmann::json& v, const std::string& fallbackLabel) {
    const auto start = parseTimestamp(v.at("start").get<std::string>());
    const auto end = parseTimestamp(v.at("end").get<std::string>());
    if (!start || !end) throw Error(ErrorKind::InvalidTimestamp, "bad window bounds in config");
    if (!(*start < *end)) throw Error(ErrorKind::InvalidParameter, "window start must precede end");
    return WindowSpec{v.value("label", fallbackLabel), *start, *end};
  };

  PipelineConfig config;
  try {
    config.events = path(doc.at("events"));
    if (doc.contains("partition")) config.partition = path(doc["partition"]);
    if (doc.contains("lexicon")) config.lexicon = path(doc["lexicon"]);
    if (doc.contains("foundationMap")) config.foundationMap = path(doc["foundationMap"]);
    if (doc.contains("output")) config.output = path(doc["output"]);
    for (const auto& w : doc.value("windows", nlohmann::json::array())) {
      config.windows.push_back(window(w, "W" + std::to_string(config.windows.size() + 1)));
    }
    if (doc.contains("detectionRange")) config.detectionRange = window(doc["detectionRange"], "detection");
    if (doc.contains("keywords")) config.keywords = doc["keywords"].get<std::vector<std::string>>();

    auto& a = config.analysis;
    if (doc.contains("rho")) a.rhos = doc["rho"].get<std::vector<double>>();
    a.primaryRho = doc.value("primaryRho", a.primaryRho);
    if (doc.contains("minCommunitySize")) {
      const auto& v = doc["minCommunitySize"];
      if (v.is_string()) {
        if (v.get<std::string>() != "auto") throw Error(ErrorKind::InvalidParameter, "minCommunitySize must be an integer or \"auto\"");
        a.minCommunitySize = std::nullopt;
      } else {
        a.minCommunitySize = v.get<std::size_t>();
      }
    }
    a.detection.seed = doc.value("seed", a.detection.seed);
    a.detection.maxPasses = doc.value("maxPasses", a.detection.maxPasses);
    a.detection.restarts = doc.value("restarts", a.detection.restarts);
    a.detection.minGainEpsilon = doc.value("minGainEpsilon", a.detection.minGainEpsilon);
    a.directedDomination = doc.value("directedDomination", a.directedDomination);
    a.includeShares = doc.value("includeShares", a.includeShares);
    if (doc.contains("kinds")) {
      a.kinds.clear();
      for (const auto& k : doc["kinds"]) a.kinds.insert(parseEventKind(k.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidParameter, std::string("config: ") + e.what());
  }
  std::set<std::string> labels;
  for (const auto& w : config.windows) {
    if (!labels.insert(w.label).second) throw Error(ErrorKind::InvalidParameter, "duplicate window label " + w.label);
  }
  return config;
}

PipelineResult runPipeline(const PipelineConfig& config) {
  AnalysisConfig analysis = config.analysis;
  validate(analysis);
  if (config.windows.empty()) throw Error(ErrorKind::InvalidParameter, "no analysis windows configured");

  std::ifstream eventsIn(config.events);
  if (!eventsIn) throw Error(ErrorKind::Io, "cannot open events file " + config.events.string());
  IngestOptions options;
  options.keywords = config.keywords;
  auto ingested = ingestEvents(eventsIn, options);

  PipelineResult result;
  result.skippedRecords = ingested.skipped;
  if (config.partition) {
    std::ifstream partitionIn(*config.partition);
    if (!partitionIn) throw Error(ErrorKind::Io, "cannot open partition file " + config.partition->string());
    result.membership = loadMembership(partitionIn);
  } else {
    WindowSpec range;
    if (config.detectionRange) {
      range = *config.detectionRange;
    } else {
      range.label = "all";
      range.start = Timestamp::min();
      range.end = Timestamp::max();
    }
    result.detection = detectMembership(ingested.events, range, analysis);
    result.membership = result.detection->membership;
  }

  result.structural = runStructuralAnalysis(ingested.events, config.windows, result.membership, analysis);

  if (config.lexicon) {
    std::ifstream dicIn(*config.lexicon);
    if (!dicIn) throw Error(ErrorKind::Io, "cannot open dictionary " + config.lexicon->string());
    const Lexicon lexicon = parseMfdDic(dicIn);
    FoundationMap map = defaultFoundationMap();
    if (config.foundationMap) {
      std::ifstream mapIn(*config.foundationMap);
      if (!mapIn) throw Error(ErrorKind::Io, "cannot open foundation map " + config.foundationMap->string());
      map = parseFoundationMap(mapIn);
    }
    validateFoundationMap(map, lexicon);
    // Speech is scored over the communities that survived each window's size filter.
    for (std::size_t w = 0; w < config.windows.size(); ++w) {
      std::set<std::string> kept;
      for (const auto& c : result.structural[w].communities) kept.insert(c.label);
      Membership windowMembers;
      for (const auto& [user, community] : result.membership) {
        if (kept.contains(community)) windowMembers.emplace(user, community);
      }
      auto reports = runSpeechAnalysis(ingested.events, std::span(&config.windows[w], 1), windowMembers, lexicon,
                                       map, analysis);
      result.speech.push_back(std::move(reports.front()));
    }
  }
  return result;
}

void writePipelineOutputs(const PipelineConfig& config, const PipelineResult& result) {
  std::filesystem::create_directories(config.output);
  auto open = [&](const char* name) {
    std::ofstream out(config.output / name, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + (config.output / name).string());
    return out;
  };

  Json structural = Json::array();
  for (const auto& r : result.structural) structural.push_back(toJson(r));
  open("structural.json") << structural.dump(2) << '\n';
  {
    auto csv = open("structural.csv");
    writeStructuralCsv(csv, result.structural);
  }
  if (!result.speech.empty()) {
    Json speech = Json::array();
    for (const auto& r : result.speech) speech.push_back(toJson(r));
    open("speech.json") << speech.dump(2) << '\n';
    auto csv = open("speech.csv");
    writeSpeechCsv(csv, result.speech);
  }
  if (result.detection) {
    Json detection;
    detection["seed"] = config.analysis.detection.seed;
    detection["restarts"] = config.analysis.detection.restarts;
    detection["users"] = result.detection->users;
    detection["edges"] = result.detection->edges;
    detection["passes"] = toJson(result.detection->passes);
    open("detection.json") << detection.dump(2) << '\n';
  }
  auto partition = open("partition.tsv");
  for (const auto& [user, community] : result.membership) partition << user << '\t' << community << '\n';
}

}  // namespace radscale
