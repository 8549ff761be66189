// radscale: radicalization indicators for communities in interaction networks.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal invariant violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "radscale/community.hpp"
#include "radscale/domination.hpp"
#include "radscale/error.hpp"
#include "radscale/graph_io.hpp"
#include "radscale/lexicon.hpp"
#include "radscale/modularity.hpp"
#include "radscale/pareto.hpp"
#include "radscale/pipeline.hpp"
#include "radscale/report_json.hpp"
#include "radscale/synth.hpp"

namespace {

using namespace radscale;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kInvariantError = 3;

std::ifstream openIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return in;
}

std::ofstream openOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  return out;
}

// "auto" or a non-negative integer.
MinCommunitySize parseMinSize(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used == text.size()) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--min-community-size", "expected an integer or 'auto'");
}

KindSet parseKinds(const std::vector<std::string>& names) {
  KindSet kinds;
  for (const auto& n : names) {
    const auto kind = parseEventKind(n);
    if (kind == EventKind::Other && n != "other") throw CLI::ValidationError("--kind", "unknown kind '" + n + "'");
    kinds.insert(kind);
  }
  return kinds;
}

void emit(const Json& doc, const std::string& outPath) {
  if (outPath.empty() || outPath == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    openOut(outPath) << doc.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radicalization indicators for communities in interaction networks"};
  app.require_subcommand(1);
  std::string outPath;

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Validate a JSONL event log and summarise it");
  std::string eventsPath;
  std::vector<std::string> kindNames;
  std::vector<std::string> keywords;
  std::vector<std::string> windowTexts;
  std::string edgesOut;
  ingest->add_option("--events", eventsPath, "JSONL event log")->required();
  ingest->add_option("--kind", kindNames, "Keep only these kinds (repeatable)");
  ingest->add_option("--keyword", keywords, "Keep records whose text contains a keyword (repeatable)");
  ingest->add_option("--window", windowTexts, "label:start:end; summarise per window (repeatable)");
  ingest->add_option("--edges-out", edgesOut, "Write the retweet interaction edge list here");
  ingest->add_option("-o,--out", outPath, "Summary JSON path (default stdout)");

  // detect
  auto* detect = app.add_subcommand("detect", "Louvain community detection on an edge list");
  std::string edgesPath;
  std::string partitionOut;
  std::string logOut;
  std::string minSizeText = "0";
  DetectionConfig detection;
  detect->add_option("--edges", edgesPath, "Edge list")->required();
  detect->add_option("--seed", detection.seed, "Vertex-order shuffle seed");
  detect->add_option("--max-passes", detection.maxPasses, "Maximum aggregation passes")->check(CLI::PositiveNumber);
  detect->add_option("--restarts", detection.restarts, "Seeded runs; the highest modularity wins")->check(CLI::PositiveNumber);
  detect->add_option("--min-gain", detection.minGainEpsilon, "Stop when a pass gains less modularity")->check(CLI::PositiveNumber);
  detect->add_option("--min-community-size", minSizeText, "Merge smaller communities into 'other' (integer or auto)");
  detect->add_option("--partition-out", partitionOut, "Partition file to write")->required();
  detect->add_option("--log", logOut, "Per-pass modularity log (JSON)");

  // dmod
  auto* dmod = app.add_subcommand("dmod", "Modularity, group contributions and d-modularity");
  std::string partitionPath;
  dmod->add_option("--edges", edgesPath, "Edge list")->required();
  dmod->add_option("--partition", partitionPath, "Partition file")->required();
  dmod->add_option("-o,--out", outPath, "Report path (default stdout)");

  // dominate
  auto* dominate = app.add_subcommand("dominate", "Greedy partial dominating sets");
  std::vector<double> rhos;
  bool directed = false;
  bool exact = false;
  dominate->add_option("--edges", edgesPath, "Edge list")->required();
  dominate->add_option("--partition", partitionPath, "Run per community on its induced subgraph");
  dominate->add_option("--rho", rhos, "Coverage fraction (repeatable; default 0.5 0.75 1)");
  dominate->add_flag("--directed", directed, "Treat edge lines as arcs; a vertex reaches its out-neighbours");
  dominate->add_flag("--exact", exact, "Also compute the exact minimum (n <= 25)");
  dominate->add_option("-o,--out", outPath, "Report path (default stdout)");

  // lexicon-score
  auto* lexiconScore = app.add_subcommand("lexicon-score", "Moral-foundation word frequencies per community");
  std::string dicPath;
  std::string mapPath;
  std::string docsPath;
  lexiconScore->add_option("--dic", dicPath, "LIWC-style dictionary")->required();
  lexiconScore->add_option("--map", mapPath, "Foundation map JSON (default: MFD category names)");
  lexiconScore->add_option("--docs", docsPath, "JSONL {community, text}")->required();
  lexiconScore->add_option("-o,--out", outPath, "Report path (default stdout)");

  // pareto
  auto* pareto = app.add_subcommand("pareto", "Pareto frontier of the most radical points");
  std::string pointsPath;
  pareto->add_option("--input", pointsPath, "JSON {criteria, points}")->required();
  pareto->add_option("-o,--out", outPath, "Report path (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "Full pipeline from a JSON config");
  std::string configPath;
  std::optional<std::uint64_t> seedOverride;
  std::optional<std::string> minSizeOverride;
  std::optional<std::string> outDirOverride;
  bool includeShares = false;
  run->add_option("--config", configPath, "Pipeline config JSON")->required();
  run->add_option("--seed", seedOverride, "Override the detection seed");
  run->add_option("--rho", rhos, "Override the rho sweep (repeatable)");
  run->add_option("--min-community-size", minSizeOverride, "Override the size filter (integer or auto)");
  run->add_option("--window", windowTexts, "Override windows, label:start:end (repeatable)");
  run->add_option("--out", outDirOverride, "Override the output directory");
  run->add_flag("--include-shares", includeShares, "Count retweeted text toward the sharer's speech");
  run->add_flag("--directed", directed, "Directed domination (accounts reach those who retweet them)");

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Dump built-in graphs and streams");
  std::string fixtureName;
  std::string prefix;
  PlantedPartitionParams planted;
  fixtures->add_option("name", fixtureName, "figure1 | figure2 | planted | stream")
      ->required()
      ->check(CLI::IsMember({"figure1", "figure2", "planted", "stream"}));
  fixtures->add_option("--prefix", prefix, "Output path prefix")->required();
  fixtures->add_option("--seed", planted.seed, "Generator seed");
  fixtures->add_option("--groups", planted.groupCount, "planted: group count");
  fixtures->add_option("--group-size", planted.groupSize, "planted: group size");
  fixtures->add_option("--p-in", planted.pIn, "planted: in-group edge probability");
  fixtures->add_option("--p-out", planted.pOut, "planted: cross-group edge probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*ingest) {
      auto in = openIn(eventsPath);
      IngestOptions options;
      if (!kindNames.empty()) options.kinds = parseKinds(kindNames);
      options.keywords = keywords;
      const auto result = ingestEvents(in, options);
      Json summary;
      summary["valid"] = result.events.size() + result.filtered;
      summary["kept"] = result.events.size();
      summary["skipped"] = result.skipped;
      summary["filtered"] = result.filtered;
      std::map<std::string, std::size_t> byKind;
      for (const auto& e : result.events) ++byKind[std::string(toString(e.kind))];
      summary["byKind"] = byKind;
      summary["windows"] = Json::array();
      for (const auto& text : windowTexts) {
        const auto window = parseWindowSpec(text);
        const auto slice = sliceWindow(result.events, window);
        const Graph g = buildGraph([&] {
          std::vector<LabelPair> pairs;
          for (const auto& e : slice) {
            if (e.isInteraction() && e.kind == EventKind::Retweet) pairs.emplace_back(e.source, e.target);
          }
          return pairs;
        }());
        summary["windows"].push_back({{"label", window.label},
                                      {"start", formatTimestamp(window.start)},
                                      {"end", formatTimestamp(window.end)},
                                      {"events", slice.size()},
                                      {"users", g.vertexCount()},
                                      {"edges", g.edgeCount()}});
      }
      if (!edgesOut.empty()) {
        auto out = openOut(edgesOut);
        writeEdgeList(out, buildInteractionGraph(result.events, {EventKind::Retweet}));
      }
      emit(summary, outPath);
    } else if (*detect) {
      const auto minSize = parseMinSize(minSizeText);
      auto in = openIn(edgesPath);
      const Graph graph = loadEdgeList(in);
      const auto result = detectCommunities(graph, detection);
      const auto filtered = filterBySize(result.partition, graph, minSize);
      auto out = openOut(partitionOut);
      writePartition(out, graph, filtered.partition);
      if (!logOut.empty()) {
        Json log;
        log["seed"] = result.seed;
        log["passes"] = toJson(result.passes);
        log["threshold"] = filtered.threshold;
        log["residualSize"] = filtered.residualSize;
        emit(log, logOut);
      }
    } else if (*dmod) {
      auto edgesIn = openIn(edgesPath);
      const Graph graph = loadEdgeList(edgesIn);
      auto partitionIn = openIn(partitionPath);
      const Partition partition = loadPartition(partitionIn, graph);
      emit(toJson(dModularityAll(graph, partition), partition), outPath);
    } else if (*dominate) {
      if (rhos.empty()) rhos = {0.5, 0.75, 1.0};
      auto edgesIn = openIn(edgesPath);
      const auto pairs = loadLabelPairs(edgesIn);
      const Graph graph = buildGraph(pairs);
      const Digraph digraph = buildDigraph(pairs);

      auto analyse = [&](std::span<const std::string> members) {
        Json results = Json::array();
        std::vector<VertexId> ids;
        for (const auto& m : members) ids.push_back(static_cast<VertexId>(directed ? digraph.find(m) : graph.find(m)));
        for (const double rho : rhos) {
          Json entry;
          if (directed) {
            const Digraph sub = inducedSubgraph(digraph, ids);
            entry = toJson(greedyPartialDominatingSet(sub, rho), sub.labels());
            if (exact) entry["exactSize"] = bruteForceMinPds(sub, rho).size();
          } else {
            const Graph sub = inducedSubgraph(graph, ids);
            entry = toJson(greedyPartialDominatingSet(sub, rho), sub.labels());
            if (exact) entry["exactSize"] = bruteForceMinPds(sub, rho).size();
          }
          results.push_back(std::move(entry));
        }
        return results;
      };

      if (partitionPath.empty()) {
        emit(analyse(graph.labels()), outPath);
      } else {
        auto partitionIn = openIn(partitionPath);
        const Partition partition = loadPartition(partitionIn, graph);
        Json doc = Json::array();
        for (const auto& group : partition.members()) {
          std::vector<std::string> labels;
          for (const VertexId v : group) labels.push_back(graph.label(v));
          doc.push_back({{"community", partition.groupLabel(partition.groupOf(group.front()))}, {"results", analyse(labels)}});
        }
        emit(doc, outPath);
      }
    } else if (*lexiconScore) {
      auto dicIn = openIn(dicPath);
      const Lexicon lexicon = parseMfdDic(dicIn);
      FoundationMap map = defaultFoundationMap();
      if (!mapPath.empty()) {
        auto mapIn = openIn(mapPath);
        map = parseFoundationMap(mapIn);
      }
      validateFoundationMap(map, lexicon);
      auto docsIn = openIn(docsPath);
      std::map<std::string, std::vector<std::string>> docs;
      std::string line;
      std::size_t lineNo = 0;
      while (std::getline(docsIn, line)) {
        ++lineNo;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          const auto record = nlohmann::json::parse(line);
          docs[record.at("community").get<std::string>()].push_back(record.at("text").get<std::string>());
        } catch (const nlohmann::json::exception& e) {
          throw LineError(ErrorKind::MalformedLine, lineNo, e.what());
        }
      }
      Json doc = Json::array();
      for (const auto& scores : scoreByCommunity(lexicon, map, docs)) doc.push_back(toJson(scores));
      emit(doc, outPath);
    } else if (*pareto) {
      auto in = openIn(pointsPath);
      Json input;
      try {
        input = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::SchemaMismatch, e.what());
      }
      std::vector<ParetoPoint> points;
      std::vector<CriterionSpec> criteria;
      parseParetoInput(input, points, criteria);
      emit(frontierJson(points, criteria), outPath);
    } else if (*run) {
      auto in = openIn(configPath);
      auto config = parsePipelineConfig(in, std::filesystem::path(configPath).parent_path());
      if (seedOverride) config.analysis.detection.seed = *seedOverride;
      if (!rhos.empty()) config.analysis.rhos = rhos;
      if (minSizeOverride) config.analysis.minCommunitySize = parseMinSize(*minSizeOverride);
      if (!windowTexts.empty()) {
        config.windows.clear();
        for (const auto& text : windowTexts) config.windows.push_back(parseWindowSpec(text));
      }
      if (outDirOverride) config.output = *outDirOverride;
      if (includeShares) config.analysis.includeShares = true;
      if (directed) config.analysis.directedDomination = true;
      const auto result = runPipeline(config);
      writePipelineOutputs(config, result);
      for (const auto& r : result.structural) {
        std::cerr << r.windowLabel << ": " << r.communities.size() << " communities, frontier {";
        for (std::size_t i = 0; i < r.frontier.size(); ++i) std::cerr << (i ? ", " : "") << r.frontier[i];
        std::cerr << "}" << (r.degenerate ? " (degenerate)" : "") << '\n';
        for (const auto& w : r.warnings) std::cerr << "  warning: " << w << '\n';
      }
    } else if (*fixtures) {
      auto dump = [&](const Graph& graph, const Partition* partition) {
        auto edges = openOut(prefix + ".edges");
        writeEdgeList(edges, graph);
        if (partition) {
          auto out = openOut(prefix + ".partition");
          writePartition(out, graph, *partition);
        }
      };
      if (fixtureName == "figure1") {
        const auto fig = figure1Graph();
        dump(fig.graph, &fig.partition);
      } else if (fixtureName == "figure2") {
        dump(figure2Graph(), nullptr);
      } else if (fixtureName == "planted") {
        const auto g = plantedPartition(planted);
        dump(g.graph, &g.partition);
      } else {
        StreamParams params;
        params.seed = planted.seed;
        params.postsPerUser = 2;
        const auto stream = radicalizationStream(params);
        auto events = openOut(prefix + ".jsonl");
        writeEvents(events, stream.events);
        openOut(prefix + ".dic") << syntheticDictionary();
        auto membership = openOut(prefix + ".partition");
        for (const auto& [user, community] : stream.membership) membership << user << '\t' << community << '\n';
        Json config;
        config["events"] = std::filesystem::path(prefix + ".jsonl").filename().string();
        config["lexicon"] = std::filesystem::path(prefix + ".dic").filename().string();
        config["windows"] = Json::array();
        for (const auto& w : stream.windows) {
          config["windows"].push_back({{"label", w.label}, {"start", formatTimestamp(w.start)}, {"end", formatTimestamp(w.end)}});
        }
        config["detectionRange"] = {{"start", formatTimestamp(stream.windows.front().start)},
                                    {"end", formatTimestamp(stream.windows[stream.windows.size() - 2].end)}};
        config["rho"] = {0.5, 0.75, 1.0};
        config["minCommunitySize"] = "auto";
        config["seed"] = planted.seed;
        config["output"] = std::filesystem::path(prefix + "-out").filename().string();
        openOut(prefix + ".config.json") << config.dump(2) << '\n';
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariantError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
