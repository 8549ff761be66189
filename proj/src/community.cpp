#include "radscale/community.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "radscale/error.hpp"
#include "radscale/modularity.hpp"

namespace radscale {

namespace {

// Aggregated multigraph: integer edge multiplicities between super-nodes and
// the number of original edges folded inside each node.
struct Level {
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> adj;
  std::vector<std::int64_t> strength;   // sum of original degrees
  std::vector<std::int64_t> internal;   // original edges inside the node
};

Level baseLevel(const Graph& graph) {
  Level level;
  const auto n = graph.vertexCount();
  level.adj.resize(n);
  level.strength.resize(n);
  level.internal.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    level.strength[v] = static_cast<std::int64_t>(graph.degree(v));
    for (const VertexId w : graph.neighbors(v)) level.adj[v].emplace_back(w, 1);
  }
  return level;
}

void shuffle(std::vector<std::uint32_t>& order, std::mt19937_64& rng) {
  // Fisher-Yates on raw engine output so the order is identical on every
  // standard library (std::shuffle's algorithm is unspecified).
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

// One local-moving phase. Returns community per node (not dense) and
// whether anything moved.
bool localMoves(const Level& level, std::int64_t twoM, std::mt19937_64& rng, std::vector<std::uint32_t>& community) {
  const auto n = level.adj.size();
  community.resize(n);
  std::iota(community.begin(), community.end(), 0u);
  std::vector<std::int64_t> total(level.strength);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  shuffle(order, rng);

  std::vector<std::int64_t> linkTo(n, 0);
  std::vector<bool> isTouched(n, false);
  std::vector<std::uint32_t> touched;
  bool movedAny = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto node : order) {
      const auto own = community[node];
      const std::int64_t k = level.strength[node];
      touched.clear();
      touched.push_back(own);
      isTouched[own] = true;
      for (const auto& [nbr, w] : level.adj[node]) {
        const auto c = community[nbr];
        if (!isTouched[c]) {
          isTouched[c] = true;
          touched.push_back(c);
        }
        linkTo[c] += w;
      }
      total[own] -= k;
      // Gain of joining c, scaled by 2m^2/m: 2m * k_{i,c} - tot_c * k_i.
      auto gain = [&](std::uint32_t c) { return twoM * linkTo[c] - total[c] * k; };
      std::uint32_t best = own;
      std::int64_t bestGain = gain(own);
      for (const auto c : touched) {
        const auto g = gain(c);
        if (g > bestGain) {
          best = c;
          bestGain = g;
        }
      }
      total[best] += k;
      if (best != own) {
        community[node] = best;
        moved = true;
        movedAny = true;
      }
      for (const auto c : touched) {
        linkTo[c] = 0;
        isTouched[c] = false;
      }
    }
  }
  return movedAny;
}

Level aggregate(const Level& level, const std::vector<std::uint32_t>& dense, std::size_t count) {
  Level next;
  next.adj.resize(count);
  next.strength.assign(count, 0);
  next.internal.assign(count, 0);
  for (std::uint32_t v = 0; v < level.adj.size(); ++v) {
    const auto c = dense[v];
    next.strength[c] += level.strength[v];
    next.internal[c] += level.internal[v];
    for (const auto& [w, mult] : level.adj[v]) {
      const auto d = dense[w];
      if (d == c) {
        if (v < w) next.internal[c] += mult;
      } else {
        next.adj[c].emplace_back(d, mult);
      }
    }
  }
  for (auto& list : next.adj) {
    std::sort(list.begin(), list.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (out > 0 && list[out - 1].first == list[i].first) {
        list[out - 1].second += list[i].second;
      } else {
        list[out++] = list[i];
      }
    }
    list.resize(out);
  }
  return next;
}

DetectionResult singleRun(const Graph& graph, const DetectionConfig& config, std::uint64_t seed) {
  const auto n = graph.vertexCount();
  const auto twoM = static_cast<std::int64_t>(2 * graph.edgeCount());
  std::mt19937_64 rng(seed);

  DetectionResult result;

  std::vector<std::size_t> vertexCommunity(n);
  std::iota(vertexCommunity.begin(), vertexCommunity.end(), std::size_t{0});
  Partition current = Partition::fromRaw(vertexCommunity);
  double q = modularity(graph, current);
  result.passes.push_back({0, q, current.groupCount()});

  Level level = baseLevel(graph);
  for (int pass = 1; pass <= config.maxPasses; ++pass) {
    std::vector<std::uint32_t> community;
    if (!localMoves(level, twoM, rng, community)) break;

    std::vector<std::uint32_t> dense(community.size());
    std::vector<std::int64_t> denseOf(community.size(), -1);
    std::uint32_t count = 0;
    for (std::size_t v = 0; v < community.size(); ++v) {
      if (denseOf[community[v]] < 0) denseOf[community[v]] = count++;
      dense[v] = static_cast<std::uint32_t>(denseOf[community[v]]);
    }
    for (auto& c : vertexCommunity) c = dense[c];

    const Partition next = Partition::fromRaw(vertexCommunity);
    const double nextQ = modularity(graph, next);
    result.passes.push_back({pass, nextQ, next.groupCount()});
    const double improvement = nextQ - q;
    current = next;
    q = nextQ;
    if (improvement < config.minGainEpsilon) break;
    level = aggregate(level, dense, count);
  }
  result.partition = std::move(current);
  return result;
}

}  // namespace

DetectionResult detectCommunities(const Graph& graph, const DetectionConfig& config) {
  if (config.maxPasses < 1) throw Error(ErrorKind::InvalidParameter, "maxPasses must be >= 1");
  if (config.restarts < 1) throw Error(ErrorKind::InvalidParameter, "restarts must be >= 1");
  if (!(config.minGainEpsilon > 0.0)) throw Error(ErrorKind::InvalidParameter, "minGainEpsilon must be > 0");
  if (graph.edgeCount() == 0) throw Error(ErrorKind::EmptyGraph, "community detection needs at least one edge");

  // Restart 0 uses the configured seed; later restarts draw theirs from it.
  std::mt19937_64 seeds(config.seed);
  DetectionResult best;
  for (int r = 0; r < config.restarts; ++r) {
    const std::uint64_t seed = r == 0 ? config.seed : seeds();
    auto run = singleRun(graph, config, seed);
    if (r == 0 || run.passes.back().modularity > best.passes.back().modularity) {
      best = std::move(run);
      best.restart = r;
    }
  }
  best.seed = config.seed;
  return best;
}

std::size_t minimumDetectableSize(std::size_t edgeCount) {
  const std::uint64_t x = 2 * static_cast<std::uint64_t>(edgeCount);
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (root * root > x) --root;
  while ((root + 1) * (root + 1) <= x) ++root;
  return static_cast<std::size_t>(root * root == x ? root : root + 1);
}

SizeFilterResult filterBySize(const Partition& partition, const Graph& graph, MinCommunitySize minSize) {
  if (partition.vertexCount() != graph.vertexCount()) {
    throw Error(ErrorKind::InvalidParameter, "partition and graph sizes differ");
  }
  SizeFilterResult result;
  result.threshold = minSize.value_or(minimumDetectableSize(graph));
  const auto sizes = partition.groupSizes();

  constexpr GroupId kResidual = ~GroupId{0};
  std::vector<GroupId> renumber(partition.groupCount(), kResidual);
  std::vector<std::string> labels;
  for (GroupId g = 0; g < partition.groupCount(); ++g) {
    if (sizes[g] >= result.threshold) {
      renumber[g] = static_cast<GroupId>(result.keptGroups.size());
      result.keptGroups.push_back(g);
      labels.push_back(partition.groupLabel(g));
    } else {
      result.residualSize += sizes[g];
    }
  }
  result.hasResidual = result.residualSize > 0;
  const auto residualId = static_cast<GroupId>(result.keptGroups.size());
  if (result.hasResidual) labels.push_back(kResidualGroupLabel);

  std::vector<GroupId> groupOf;
  groupOf.reserve(partition.vertexCount());
  for (const GroupId g : partition.assignment()) {
    groupOf.push_back(renumber[g] == kResidual ? residualId : renumber[g]);
  }
  result.partition = Partition(std::move(groupOf), std::move(labels));
  return result;
}

}  // namespace radscale
