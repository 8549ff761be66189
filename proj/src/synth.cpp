#include "radscale/synth.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "radscale/error.hpp"

namespace radscale {

namespace {

// Portable uniform [0, 1) from raw engine bits.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniformIndex(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

void checkProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidParameter, std::string(name) + " must lie in [0, 1]");
}

Graph fromIndexPairs(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  return Graph(std::move(labels), edges);
}

constexpr std::array<const char*, 8> kNeutralWords = {"today", "people", "city", "news", "vote", "game", "music", "street"};
constexpr std::array<std::array<const char*, 2>, 4> kMoralWords = {{
    {"justice", "fairness"},     // Fairness
    {"loyal", "nation"},         // IngroupLoyalty
    {"order", "obey"},           // Authority
    {"pure", "sacred"},          // Purity
}};
constexpr std::size_t kAuthorityAxis = 2;
constexpr std::size_t kWordsPerPost = 10;

}  // namespace

LabeledGraph figure1Graph() {
  std::vector<std::string> labels = {"b1", "b2", "b3", "b4", "r1", "r2", "r3", "r4", "u1", "u2", "u3", "u4"};
  const std::vector<std::pair<VertexId, VertexId>> edges = {
      // black clique
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
      // red cycle r1-r2-r3-r4
      {4, 5}, {5, 6}, {6, 7}, {7, 4},
      // blue cycle u1-u2-u3-u4
      {8, 9}, {9, 10}, {10, 11}, {11, 8},
      // cross edges
      {0, 4}, {1, 8}, {5, 9}, {6, 10}, {7, 11},
  };
  LabeledGraph out{fromIndexPairs(std::move(labels), edges),
                   Partition({0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2}, {"black", "red", "blue"})};
  return out;
}

Graph figure2Graph() {
  std::vector<std::string> labels = {"h1", "h2", "h3"};
  for (int i = 1; i <= 12; ++i) labels.push_back("l" + std::to_string(i));
  std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}};
  for (VertexId hub = 0; hub < 3; ++hub) {
    for (VertexId leaf = 0; leaf < 4; ++leaf) edges.emplace_back(hub, 3 + 4 * hub + leaf);
  }
  return fromIndexPairs(std::move(labels), edges);
}

LabeledGraph plantedPartition(const PlantedPartitionParams& params) {
  if (params.groupCount == 0 || params.groupSize == 0) {
    throw Error(ErrorKind::InvalidParameter, "planted partition needs groupCount >= 1 and groupSize >= 1");
  }
  checkProbability(params.pIn, "pIn");
  checkProbability(params.pOut, "pOut");

  const std::size_t n = params.groupCount * params.groupSize;
  std::vector<std::string> labels;
  std::vector<GroupId> groupOf;
  std::vector<std::string> groupLabels;
  labels.reserve(n);
  for (std::size_t g = 0; g < params.groupCount; ++g) {
    groupLabels.push_back("g" + std::to_string(g));
    for (std::size_t i = 0; i < params.groupSize; ++i) {
      labels.push_back("g" + std::to_string(g) + "v" + std::to_string(i));
      groupOf.push_back(static_cast<GroupId>(g));
    }
  }

  std::mt19937_64 rng(params.seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double p = groupOf[u] == groupOf[v] ? params.pIn : params.pOut;
      if (uniform01(rng) < p) edges.emplace_back(u, v);
    }
  }
  return {fromIndexPairs(std::move(labels), edges), Partition(std::move(groupOf), std::move(groupLabels))};
}

Graph randomGraph(std::size_t n, double p, std::uint64_t seed) {
  checkProbability(p, "p");
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) edges.emplace_back(u, v);
    }
  }
  return fromIndexPairs(std::move(labels), edges);
}

SyntheticStream radicalizationStream(const StreamParams& params) {
  const std::size_t windowCount = params.radicalPIn.size();
  if (windowCount == 0 || params.radicalPOut.size() != windowCount || params.hubReach.size() != windowCount ||
      params.radicalAuthorityDensity.size() != windowCount) {
    throw Error(ErrorKind::InvalidParameter, "per-window stream parameters must have equal, non-zero length");
  }
  if (params.communities == 0 || params.communitySize == 0 || params.hubs >= params.communitySize) {
    throw Error(ErrorKind::InvalidParameter, "stream needs communities >= 1 and hubs < communitySize");
  }

  using namespace std::chrono;
  SyntheticStream stream;
  const Timestamp origin = time_point_cast<milliseconds>(sys_days{year{2022} / 9 / 19});
  const milliseconds span = duration_cast<milliseconds>(days{14});
  for (std::size_t w = 0; w < windowCount; ++w) {
    stream.windows.push_back({"D" + std::to_string(w + 1), origin + span * static_cast<int>(w),
                              origin + span * static_cast<int>(w + 1)});
  }

  const std::size_t n = params.communities * params.communitySize;
  std::vector<std::string> users;
  std::vector<std::size_t> communityOf;
  for (std::size_t c = 0; c < params.communities; ++c) {
    for (std::size_t i = 0; i < params.communitySize; ++i) {
      users.push_back("c" + std::to_string(c) + "u" + std::to_string(i));
      communityOf.push_back(c);
      stream.membership[users.back()] = "c" + std::to_string(c);
    }
  }
  stream.radicalCommunity = "c0";

  std::mt19937_64 rng(params.seed);
  auto randomTime = [&](const WindowSpec& window) {
    const auto width = static_cast<std::size_t>((window.end - window.start).count());
    return window.start + milliseconds{static_cast<std::int64_t>(uniformIndex(rng, width))};
  };
  auto retweet = [&](std::size_t from, std::size_t to, const WindowSpec& window) {
    Event e;
    e.source = users[from];
    e.target = users[to];
    e.kind = EventKind::Retweet;
    e.timestamp = randomTime(window);
    stream.events.push_back(std::move(e));
  };

  for (std::size_t w = 0; w < windowCount; ++w) {
    const auto& window = stream.windows[w];
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        double p = 0.0;
        if (communityOf[u] == communityOf[v]) {
          p = communityOf[u] == 0 ? params.radicalPIn[w] : params.backgroundPIn;
        } else {
          p = (communityOf[u] == 0 || communityOf[v] == 0) ? params.radicalPOut[w] : params.backgroundPOut;
        }
        if (uniform01(rng) < p) {
          if (rng() & 1) {
            retweet(u, v, window);
          } else {
            retweet(v, u, window);
          }
        }
      }
    }
    // Radical members retweet the hubs (the first `hubs` users of community 0).
    for (std::size_t hub = 0; hub < params.hubs; ++hub) {
      for (std::size_t member = params.hubs; member < params.communitySize; ++member) {
        if (uniform01(rng) < params.hubReach[w]) retweet(member, hub, window);
      }
    }

    for (std::size_t u = 0; u < n && params.postsPerUser > 0; ++u) {
      for (std::size_t post = 0; post < params.postsPerUser; ++post) {
        std::string text;
        for (std::size_t word = 0; word < kWordsPerPost; ++word) {
          const double r = uniform01(rng);
          const char* token = nullptr;
          double threshold = 0.0;
          for (std::size_t axis = 0; axis < kMoralWords.size() && token == nullptr; ++axis) {
            double density = params.backgroundMoralDensity / static_cast<double>(kMoralWords.size());
            if (communityOf[u] == 0 && axis == kAuthorityAxis) density = params.radicalAuthorityDensity[w];
            threshold += density;
            if (r < threshold) token = kMoralWords[axis][uniformIndex(rng, kMoralWords[axis].size())];
          }
          if (token == nullptr) token = kNeutralWords[uniformIndex(rng, kNeutralWords.size())];
          if (!text.empty()) text += ' ';
          text += token;
        }
        Event e;
        e.author = users[u];
        e.text = std::move(text);
        e.kind = EventKind::Other;
        e.timestamp = randomTime(window);
        stream.events.push_back(std::move(e));
      }
    }
  }
  std::stable_sort(stream.events.begin(), stream.events.end(),
                   [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
  return stream;
}

std::string syntheticDictionary() {
  return "%\n"
         "1\tFairnessVirtue\n"
         "2\tFairnessVice\n"
         "3\tIngroupVirtue\n"
         "4\tIngroupVice\n"
         "5\tAuthorityVirtue\n"
         "6\tAuthorityVice\n"
         "7\tPurityVirtue\n"
         "8\tPurityVice\n"
         "%\n"
         "justice\t1\n"
         "fair*\t1\n"
         "unfair*\t2\n"
         "loyal*\t3\n"
         "nation*\t3\n"
         "traitor*\t4\n"
         "order\t5\n"
         "obey*\t5\n"
         "rebel*\t6\n"
         "pure*\t7\n"
         "sacred\t7\n"
         "filth*\t8\n";
}

}  // namespace radscale
