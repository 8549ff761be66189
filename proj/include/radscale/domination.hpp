#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "radscale/graph.hpp"

namespace radscale {

// Partial dominating set: the authorities, in greedy pick order, whose closed
// neighbourhoods cover at least targetCount = ceil(rho * graphSize) vertices.
struct DominationResult {
  std::vector<VertexId> authorities;
  double rho = 1.0;
  std::size_t targetCount = 0;
  std::size_t coveredCount = 0;
  std::size_t graphSize = 0;

  std::size_t size() const noexcept { return authorities.size(); }
};

// ceil(rho * n), tolerant of rounding noise in the product (0.7 * 10 -> 7).
// Throws InvalidRho unless 0 < rho <= 1.
std::size_t dominationTarget(double rho, std::size_t n);

// Greedy heuristic: repeatedly take the vertex whose closed neighbourhood
// holds the most uncovered vertices (ties to the smallest index) until the
// target is reached. Directed overload: a vertex reaches its out-neighbours.
DominationResult greedyPartialDominatingSet(const Graph& graph, double rho);
DominationResult greedyPartialDominatingSet(const Digraph& graph, double rho);

// Size of the union of closed neighbourhoods of `vertices`.
std::size_t coverage(const Graph& graph, std::span<const VertexId> vertices);
std::size_t coverage(const Digraph& graph, std::span<const VertexId> vertices);

inline constexpr std::size_t kBruteForceLimit = 25;

// Exact minimum partial dominating set by enumeration of subsets in
// increasing size; the first hit in lexicographic index order is returned.
// Throws TooLarge when n > kBruteForceLimit.
DominationResult bruteForceMinPds(const Graph& graph, double rho);
DominationResult bruteForceMinPds(const Digraph& graph, double rho);

}  // namespace radscale
