#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "radscale/domination.hpp"
#include "radscale/error.hpp"
#include "radscale/synth.hpp"

using namespace radscale;

namespace {

Graph star(std::size_t leaves) {
  std::vector<std::string> labels = {"center"};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i <= leaves; ++i) {
    labels.push_back("leaf" + std::to_string(i));
    edges.emplace_back(0, i);
  }
  return Graph(std::move(labels), edges);
}

Graph cycle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  }
  return Graph(std::move(labels), edges);
}

Graph edgeless(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph(std::move(labels), std::vector<std::pair<VertexId, VertexId>>{});
}

ErrorKind kindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("figure-2 graph needs three authorities") {
  const Graph g = figure2Graph();
  REQUIRE(g.vertexCount() == 15);
  const auto greedy = greedyPartialDominatingSet(g, 1.0);
  CHECK(greedy.size() == 3);
  CHECK(greedy.coveredCount == 15);
  CHECK(bruteForceMinPds(g, 1.0).size() == 3);

  // h2 first (closed neighbourhood of 7), then h1 and h3 on the tie.
  CHECK(greedy.authorities == std::vector<VertexId>{1, 0, 2});

  const auto half = greedyPartialDominatingSet(g, 0.5);
  CHECK(half.targetCount == 8);
  CHECK(half.size() == 2);
  CHECK(half.coveredCount == 11);
  CHECK(bruteForceMinPds(g, 0.5).size() == 2);
}

TEST_CASE("coverage counts closed neighbourhoods") {
  const Graph g = figure2Graph();
  CHECK(coverage(g, std::vector<VertexId>{0}) == 6);   // h1, h2 and l1..l4
  CHECK(coverage(g, std::vector<VertexId>{}) == 0);
  std::vector<VertexId> all(g.vertexCount());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  CHECK(coverage(g, all) == 15);
  CHECK((kindOf([&] { coverage(g, std::vector<VertexId>{15}); }) == ErrorKind::IndexOutOfRange));
}

TEST_CASE("simple shapes") {
  CHECK(greedyPartialDominatingSet(star(9), 1.0).authorities == std::vector<VertexId>{0});
  CHECK(greedyPartialDominatingSet(edgeless(6), 1.0).size() == 6);
  CHECK(bruteForceMinPds(edgeless(6), 0.5).size() == 3);

  const Graph path({"a", "b", "c"}, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
  CHECK(bruteForceMinPds(path, 1.0).authorities == std::vector<VertexId>{1});
  CHECK(bruteForceMinPds(cycle(6), 1.0).size() == 2);
  CHECK(bruteForceMinPds(cycle(6), 1.0).authorities == std::vector<VertexId>{0, 3});
}

TEST_CASE("rho validation and target rounding") {
  const Graph g = figure2Graph();
  CHECK((kindOf([&] { greedyPartialDominatingSet(g, 0.0); }) == ErrorKind::InvalidRho));
  CHECK((kindOf([&] { greedyPartialDominatingSet(g, 1.5); }) == ErrorKind::InvalidRho));
  CHECK((kindOf([&] { greedyPartialDominatingSet(g, std::nan("")); }) == ErrorKind::InvalidRho));
  CHECK(dominationTarget(0.7, 10) == 7);
  CHECK(dominationTarget(0.07, 100) == 7);
  CHECK(dominationTarget(0.57, 100) == 57);
  CHECK(dominationTarget(0.75, 15) == 12);
  CHECK(dominationTarget(0.5, 15) == 8);
  CHECK(dominationTarget(1e-9, 15) == 1);
  CHECK((kindOf([&] { bruteForceMinPds(edgeless(26), 1.0); }) == ErrorKind::TooLarge));
  CHECK((kindOf([&] { greedyPartialDominatingSet(edgeless(0), 1.0); }) == ErrorKind::EmptyGraph));
}

TEST_CASE("greedy properties on random graphs") {
  std::mt19937_64 rng(31337);
  const double rhos[] = {0.3, 0.5, 0.75, 1.0};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const Graph g = oracle::randomTestGraph(n, 0.1 + 0.05 * static_cast<double>(rng() % 8), rng);
    const double bound = std::log(static_cast<double>(g.maxDegree()) + 2.0) + 1.0;

    std::vector<VertexId> previous;
    for (const double rho : rhos) {
      const auto greedy = greedyPartialDominatingSet(g, rho);
      CHECK(greedy.coveredCount >= greedy.targetCount);
      CHECK(greedy.coveredCount == coverage(g, greedy.authorities));
      // No pick is redundant at stop time: every proper prefix falls short.
      const std::vector<VertexId> prefix(greedy.authorities.begin(), greedy.authorities.end() - 1);
      CHECK(coverage(g, prefix) < greedy.targetCount);
      // Smaller rho stops the same run earlier.
      REQUIRE(previous.size() <= greedy.size());
      CHECK(std::equal(previous.begin(), previous.end(), greedy.authorities.begin()));
      previous = greedy.authorities;

      const auto exact = bruteForceMinPds(g, rho);
      CHECK(exact.size() <= greedy.size());
      CHECK(static_cast<double>(greedy.size()) <= bound * static_cast<double>(exact.size()));
      CHECK(greedyPartialDominatingSet(g, rho).authorities == greedy.authorities);
    }
  }
}

TEST_CASE("universal vertex always suffices alone") {
  for (const double rho : {0.1, 0.5, 0.9, 1.0}) CHECK(greedyPartialDominatingSet(star(12), rho).size() == 1);
}

TEST_CASE("directed mode reaches out-neighbours only") {
  // Hub a is retweeted by b, c, d: influence arcs a->b, a->c, a->d.
  const Digraph d = buildDigraph(std::vector<LabelPair>{{"a", "b"}, {"a", "c"}, {"a", "d"}, {"e", "a"}});
  const auto result = greedyPartialDominatingSet(d, 1.0);
  CHECK(result.authorities.front() == 0);
  CHECK(result.size() == 2);   // e is reached by nobody but itself
  CHECK(coverage(d, std::vector<VertexId>{0}) == 4);
  CHECK(coverage(d, std::vector<VertexId>{1}) == 1);
  CHECK(bruteForceMinPds(d, 1.0).size() == 2);
}
