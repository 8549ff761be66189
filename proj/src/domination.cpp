#include "radscale/domination.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>

#include "radscale/error.hpp"

namespace radscale {

namespace {

struct Candidate {
  std::size_t gain;
  VertexId vertex;
};

// Max-heap order: larger gain first, then smaller index.
struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.vertex > b.vertex;
  }
};

// Reach(v) yields the open out-neighbourhood; v itself is always reached.
template <typename Reach>
std::vector<std::vector<VertexId>> reachedBy(std::size_t n, Reach&& reach) {
  // reachers[w] = vertices whose closed neighbourhood contains w.
  std::vector<std::vector<VertexId>> reachers(n);
  for (VertexId v = 0; v < n; ++v) {
    reachers[v].push_back(v);
    for (const VertexId w : reach(v)) reachers[w].push_back(v);
  }
  return reachers;
}

template <typename Reach>
DominationResult greedy(std::size_t n, double rho, Reach&& reach) {
  DominationResult result;
  result.rho = rho;
  result.graphSize = n;
  result.targetCount = dominationTarget(rho, n);
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "domination needs at least one vertex");

  const auto reachers = reachedBy(n, reach);
  std::vector<std::size_t> gain(n);
  for (VertexId v = 0; v < n; ++v) gain[v] = reach(v).size() + 1;
  std::vector<bool> covered(n, false);

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> heap;
  for (VertexId v = 0; v < n; ++v) heap.push({gain[v], v});

  auto cover = [&](VertexId w) {
    if (covered[w]) return;
    covered[w] = true;
    ++result.coveredCount;
    for (const VertexId r : reachers[w]) --gain[r];
  };

  // Gains only decrease, so a stale heap entry is refreshed and re-pushed.
  while (result.coveredCount < result.targetCount) {
    const Candidate top = heap.top();
    heap.pop();
    if (top.gain != gain[top.vertex]) {
      heap.push({gain[top.vertex], top.vertex});
      continue;
    }
    result.authorities.push_back(top.vertex);
    cover(top.vertex);
    for (const VertexId w : reach(top.vertex)) cover(w);
  }
  return result;
}

template <typename Reach>
std::size_t coverageOf(std::size_t n, std::span<const VertexId> vertices, Reach&& reach) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  auto mark = [&](VertexId w) {
    if (!seen[w]) {
      seen[w] = true;
      ++count;
    }
  };
  for (const VertexId v : vertices) {
    if (v >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
    mark(v);
    for (const VertexId w : reach(v)) mark(w);
  }
  return count;
}

template <typename Reach>
DominationResult bruteForce(std::size_t n, double rho, Reach&& reach) {
  DominationResult result;
  result.rho = rho;
  result.graphSize = n;
  result.targetCount = dominationTarget(rho, n);
  if (n > kBruteForceLimit) throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n));
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "domination needs at least one vertex");

  std::vector<std::uint32_t> closed(n);
  for (VertexId v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    for (const VertexId w : reach(v)) closed[v] |= std::uint32_t{1} << w;
  }

  // Lexicographic k-combinations; first hit at the smallest k wins.
  std::vector<VertexId> pick;
  for (std::size_t k = 1; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<VertexId>(i);
    while (true) {
      std::uint32_t mask = 0;
      for (const VertexId v : pick) mask |= closed[v];
      const auto covered = static_cast<std::size_t>(std::popcount(mask));
      if (covered >= result.targetCount) {
        result.authorities = pick;
        result.coveredCount = covered;
        return result;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("full vertex set failed to reach the domination target");
}

}  // namespace

std::size_t dominationTarget(double rho, std::size_t n) {
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorKind::InvalidRho, std::to_string(rho));
  const double exact = rho * static_cast<double>(n);
  const double target = std::ceil(exact - 1e-9 * std::max(1.0, exact));
  return std::min(n, static_cast<std::size_t>(target));
}

DominationResult greedyPartialDominatingSet(const Graph& graph, double rho) {
  return greedy(graph.vertexCount(), rho, [&](VertexId v) { return graph.neighbors(v); });
}

DominationResult greedyPartialDominatingSet(const Digraph& graph, double rho) {
  return greedy(graph.vertexCount(), rho, [&](VertexId v) { return graph.outNeighbors(v); });
}

std::size_t coverage(const Graph& graph, std::span<const VertexId> vertices) {
  return coverageOf(graph.vertexCount(), vertices, [&](VertexId v) { return graph.neighbors(v); });
}

std::size_t coverage(const Digraph& graph, std::span<const VertexId> vertices) {
  return coverageOf(graph.vertexCount(), vertices, [&](VertexId v) { return graph.outNeighbors(v); });
}

DominationResult bruteForceMinPds(const Graph& graph, double rho) {
  return bruteForce(graph.vertexCount(), rho, [&](VertexId v) { return graph.neighbors(v); });
}

DominationResult bruteForceMinPds(const Digraph& graph, double rho) {
  return bruteForce(graph.vertexCount(), rho, [&](VertexId v) { return graph.outNeighbors(v); });
}

}  // namespace radscale
