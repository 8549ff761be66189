#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "radscale/error.hpp"
#include "radscale/modularity.hpp"
#include "radscale/synth.hpp"

using namespace radscale;

namespace {

Graph twoTriangles() {
  const std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return Graph({"a", "b", "c", "d", "e", "f"}, edges);
}

bool relClose(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST_CASE("figure-1 modularity values") {
  const auto fig = figure1Graph();
  CHECK(std::abs(modularity(fig.graph, fig.partition) - 0.402) <= 0.001);
  CHECK(std::abs(groupContribution(fig.graph, fig.partition, 0) - 0.180) <= 0.001);
  CHECK(std::abs(groupContribution(fig.graph, fig.partition, 1) - 0.111) <= 0.001);
  CHECK(std::abs(groupContribution(fig.graph, fig.partition, 2) - 0.111) <= 0.001);
  CHECK(std::abs(dModularity(fig.graph, fig.partition, 0) - 0.448) <= 0.002);
  CHECK(std::abs(dModularity(fig.graph, fig.partition, 1) - 0.276) <= 0.002);
  CHECK(std::abs(dModularity(fig.graph, fig.partition, 2) - 0.276) <= 0.002);
  // Exact rationals: Q = 145/361, Q_black = 65/361, d_black = 13/29.
  CHECK(modularity(fig.graph, fig.partition) == doctest::Approx(145.0 / 361.0).epsilon(1e-14));
  CHECK(dModularity(fig.graph, fig.partition, 0) == doctest::Approx(13.0 / 29.0).epsilon(1e-14));

  const auto agg = aggregateGroups(fig.graph, fig.partition);
  CHECK(agg.degreeSums == std::vector<std::size_t>{14, 12, 12});
  CHECK(agg.internalEdges == std::vector<std::size_t>{6, 4, 4});
}

TEST_CASE("single-group partition has zero modularity and undefined d") {
  const auto fig = figure1Graph();
  const Partition one(std::vector<GroupId>(12, 0));
  CHECK(modularity(fig.graph, one) == 0.0);
  CHECK(groupContribution(fig.graph, one, 0) == 0.0);
  const auto report = dModularityAll(fig.graph, one);
  CHECK(report.modularity == 0.0);
  CHECK_FALSE(report.perGroup[0].dModularity.has_value());
  try {
    dModularity(fig.graph, one, 0);
    FAIL("expected ZeroModularity");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::ZeroModularity));
  }
}

TEST_CASE("two disjoint triangles") {
  const Graph g = twoTriangles();
  const Partition p({0, 0, 0, 1, 1, 1});
  CHECK(modularity(g, p) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dModularity(g, p, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dModularity(g, p, 1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("error paths") {
  const Graph empty({"a", "b"}, std::vector<std::pair<VertexId, VertexId>>{});
  const Partition p({0, 1});
  try {
    modularity(empty, p);
    FAIL("expected EmptyGraph");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::EmptyGraph));
  }
  const auto fig = figure1Graph();
  try {
    groupContribution(fig.graph, fig.partition, 3);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::IndexOutOfRange));
  }
}

TEST_CASE("conservation and pair-sum equivalence on random instances") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 59;
    const Graph g = oracle::randomTestGraph(n, 0.05 + 0.3 * static_cast<double>(rng() % 100) / 100.0, rng);
    if (g.edgeCount() == 0) continue;
    const Partition p = oracle::randomTestPartition(n, 1 + rng() % 6, rng);
    const auto report = dModularityAll(g, p);
    double sumQi = 0.0;
    for (const auto& entry : report.perGroup) sumQi += entry.contribution;
    CHECK(relClose(sumQi, report.modularity, 1e-9));
    CHECK(relClose(report.modularity, oracle::pairSumModularity(g, p), 1e-9));
    CHECK(report.modularity <= 1.0);
    if (std::abs(report.modularity) >= kZeroModularity) {
      double sumD = 0.0;
      for (const auto& entry : report.perGroup) sumD += *entry.dModularity;
      CHECK(std::abs(sumD - 1.0) <= 1e-9);
    }
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("label permutation leaves every value unchanged") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10 + rng() % 30;
    const Graph g = oracle::randomTestGraph(n, 0.2, rng);
    if (g.edgeCount() == 0) continue;
    const Partition p = oracle::randomTestPartition(n, 4, rng);

    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph permuted = inducedSubgraph(g, perm);
    std::vector<GroupId> groupOf;
    for (const VertexId v : perm) groupOf.push_back(p.groupOf(v));
    const Partition permutedPartition(groupOf, p.groupLabels());

    const auto a = dModularityAll(g, p);
    const auto b = dModularityAll(permuted, permutedPartition);
    CHECK(a.modularity == doctest::Approx(b.modularity).epsilon(1e-12));
    for (GroupId k = 0; k < p.groupCount(); ++k) {
      CHECK(a.perGroup[k].contribution == doctest::Approx(b.perGroup[k].contribution).epsilon(1e-12));
    }
  }
}

TEST_CASE("induced subgraph of one group has zero single-group modularity") {
  const auto fig = figure1Graph();
  for (const auto& members : fig.partition.members()) {
    const Graph sub = inducedSubgraph(fig.graph, members);
    CHECK(modularity(sub, Partition(std::vector<GroupId>(sub.vertexCount(), 0))) == 0.0);
  }
}

TEST_CASE("contributions can be negative") {
  // Two K4s glued by a pair of vertices with no edge between them.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId base : {0u, 4u}) {
    for (VertexId u = 0; u < 4; ++u) {
      for (VertexId v = u + 1; v < 4; ++v) edges.emplace_back(base + u, base + v);
    }
  }
  edges.insert(edges.end(), {{8, 0}, {8, 4}, {9, 1}, {9, 5}});
  const Graph g({"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "x", "y"}, edges);
  const Partition p({0, 0, 0, 0, 1, 1, 1, 1, 2, 2});
  const auto report = dModularityAll(g, p);
  CHECK(report.modularity > 0.0);
  CHECK(report.perGroup[2].contribution == doctest::Approx(-1.0 / 64.0).epsilon(1e-14));
  REQUIRE(report.perGroup[2].dModularity.has_value());
  CHECK(*report.perGroup[2].dModularity < 0.0);
}
