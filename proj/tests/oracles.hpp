#pragma once

// Independent reference computations used only by tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "radscale/graph.hpp"
#include "radscale/pareto.hpp"

namespace radscale::oracle {

// Direct double sum over all ordered vertex pairs:
// Q = 1/2m * sum_{u,v} (a_uv - d_u d_v / 2m) [g_u == g_v].
inline double pairSumModularity(const Graph& g, const Partition& p) {
  const auto n = g.vertexCount();
  const double twoM = 2.0 * static_cast<double>(g.edgeCount());
  double sum = 0.0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (p.groupOf(u) != p.groupOf(v)) continue;
      const double a = g.hasEdge(u, v) ? 1.0 : 0.0;
      sum += a - static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)) / twoM;
    }
  }
  return sum / twoM;
}

struct ExhaustiveOptimum {
  double modularity = -1.0;
  std::vector<std::uint32_t> assignment;
  std::uint64_t partitionsVisited = 0;
};

// Maximum modularity over every set partition (restricted growth strings),
// with in-group edge counts and degree sums updated incrementally.
inline ExhaustiveOptimum exhaustiveMaxModularity(const Graph& g) {
  const auto n = g.vertexCount();
  const auto m = static_cast<double>(g.edgeCount());
  ExhaustiveOptimum best;
  std::vector<std::uint32_t> assign(n, 0);
  std::vector<std::int64_t> internal(n + 1, 0);
  std::vector<std::int64_t> degreeSum(n + 1, 0);

  std::function<void(std::size_t, std::uint32_t)> recurse = [&](std::size_t v, std::uint32_t groups) {
    if (v == n) {
      ++best.partitionsVisited;
      double q = 0.0;
      for (std::uint32_t c = 0; c < groups; ++c) {
        const double share = static_cast<double>(degreeSum[c]) / (2.0 * m);
        q += static_cast<double>(internal[c]) / m - share * share;
      }
      if (q > best.modularity + 1e-12) {
        best.modularity = q;
        best.assignment = assign;
      }
      return;
    }
    for (std::uint32_t c = 0; c <= groups && c < n; ++c) {
      std::int64_t links = 0;
      for (const VertexId w : g.neighbors(static_cast<VertexId>(v))) {
        if (w < v && assign[w] == c) ++links;
      }
      assign[v] = c;
      internal[c] += links;
      degreeSum[c] += static_cast<std::int64_t>(g.degree(static_cast<VertexId>(v)));
      recurse(v + 1, c == groups ? groups + 1 : groups);
      internal[c] -= links;
      degreeSum[c] -= static_cast<std::int64_t>(g.degree(static_cast<VertexId>(v)));
    }
  };
  recurse(0, 0);
  return best;
}

// The frontier by definition: points no other point dominates.
inline std::vector<std::size_t> allPairsFrontier(const std::vector<ParetoPoint>& points,
                                                 const std::vector<CriterionSpec>& criteria) {
  auto better = [&](const ParetoPoint& b, const ParetoPoint& a) {
    bool strict = false;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      const bool higher = criteria[c].direction == Direction::HigherIsMoreRadical;
      const double bv = b.values[c];
      const double av = a.values[c];
      if (higher ? bv < av : bv > av) return false;
      if (bv != av) strict = true;
    }
    return strict;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (i != j && better(points[j], points[i])) dominated = true;
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

inline Graph randomTestGraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(std::move(labels), edges);
}

// Uniform random assignment into at most k groups, relabelled densely.
inline Partition randomTestPartition(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> raw(n);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (auto& r : raw) r = pick(rng);
  return Partition::fromRaw(raw);
}

inline Graph twoDisjointCliques(std::size_t size) {
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < size; ++i) labels.push_back((c == 0 ? "a" : "b") + std::to_string(i));
    for (VertexId u = 0; u < size; ++u) {
      for (VertexId v = u + 1; v < size; ++v) {
        edges.emplace_back(static_cast<VertexId>(c * size + u), static_cast<VertexId>(c * size + v));
      }
    }
  }
  return Graph(std::move(labels), edges);
}

}  // namespace radscale::oracle
