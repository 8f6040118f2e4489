#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tretoc/louvain.hpp"
#include "tretoc/metrics.hpp"
#include "tretoc/synth.hpp"

using namespace tretoc;

namespace {

std::vector<UserId> ids(std::size_t n) {
  std::vector<UserId> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("n" + std::to_string(i));
  return out;
}

UndirectedGraph two_triangles(bool bridged) {
  std::vector<std::pair<NodeIndex, NodeIndex>> e = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  if (bridged) e.emplace_back(2, 3);
  return UndirectedGraph(ids(6), e);
}

void expect_dendrogram_invariants(const UndirectedGraph& g, const Dendrogram& d) {
  ASSERT_GE(d.levels(), 1u);
  for (std::size_t l = 0; l < d.levels(); ++l) {
    const Partition& p = d.partitions()[l];
    ASSERT_EQ(p.size(), g.node_count());
    if (l + 1 < d.levels()) {
      EXPECT_TRUE(p.refines(d.partitions()[l + 1]));
      EXPECT_GE(d.modularities()[l + 1], d.modularities()[l] - 1e-12);
    }
    if (g.edge_count() > 0) EXPECT_NEAR(d.modularities()[l], modularity(g, p), 1e-9);
  }
}

}  // namespace

TEST(Modularity, TwoDisjointTriangles) {
  Partition p({0, 0, 0, 1, 1, 1});
  EXPECT_NEAR(modularity(two_triangles(false), p), 0.5, 1e-15);
}

TEST(Modularity, SingleCommunityIsZero) {
  std::mt19937_64 rng(1);
  UndirectedGraph g = oracle::random_undirected(rng, 30, 0.2);
  EXPECT_NEAR(modularity(g, Partition(std::vector<CommunityId>(30, 0))), 0.0, 1e-15);
}

TEST(Modularity, SingletonsNonPositive) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    UndirectedGraph g = oracle::random_undirected(rng, 5 + rng() % 40, 0.3);
    if (g.edge_count() == 0) continue;
    EXPECT_LE(modularity(g, Partition::singletons(g.node_count())), 0.0);
  }
}

TEST(Modularity, Errors) {
  EXPECT_THROW(modularity(UndirectedGraph(ids(3), {}), Partition::singletons(3)), Error);
  EXPECT_THROW(modularity(two_triangles(false), Partition::singletons(5)), Error);
}

TEST(Modularity, MatchesPairSumOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 199;
    UndirectedGraph g = oracle::random_undirected(rng, n, std::uniform_real_distribution<double>(0.01, 0.3)(rng));
    if (g.edge_count() == 0) continue;
    std::vector<CommunityId> labels(n);
    const std::size_t k = 1 + rng() % n;
    for (auto& c : labels) c = static_cast<CommunityId>(rng() % k);
    const Partition p(labels);
    const double gamma = trial % 2 ? 1.0 : 0.5 + static_cast<double>(rng() % 100) / 50.0;
    EXPECT_NEAR(modularity(g, p, gamma), oracle::modularity(oracle::symmetric_matrix(g), p.assignment(), gamma), 1e-12);
  }
}

TEST(PartitionType, RenumbersDenselyAndRefines) {
  Partition p({7, 7, 3, 9, 3});
  EXPECT_EQ(p.assignment(), (std::vector<CommunityId>{0, 0, 1, 2, 1}));
  EXPECT_EQ(p.community_count(), 3u);
  EXPECT_TRUE(p.refines(Partition({0, 0, 0, 1, 0})));
  EXPECT_FALSE(p.refines(Partition({0, 1, 0, 1, 0})));
  EXPECT_TRUE(Partition::singletons(5).refines(p));
}

TEST(Louvain, BridgedTrianglesSplit) {
  UndirectedGraph g = two_triangles(true);
  Dendrogram d = louvain(g);
  const Partition& best = best_partition(d);
  EXPECT_EQ(best.assignment(), (std::vector<CommunityId>{0, 0, 0, 1, 1, 1}));
  EXPECT_NEAR(modularity(g, best), oracle::optimal_modularity(g), 1e-12);
  expect_dendrogram_invariants(g, d);
}

TEST(Louvain, EdgelessGraphGivesSingletons) {
  UndirectedGraph g(ids(7), {});
  Dendrogram d = louvain(g);
  ASSERT_EQ(d.levels(), 1u);
  EXPECT_EQ(best_partition(d), Partition::singletons(7));
}

TEST(Louvain, IsolatedNodesStaySingletons) {
  UndirectedGraph g(ids(5), {{0, 1}, {1, 2}, {0, 2}});
  const Partition p = best_partition(louvain(g));
  EXPECT_EQ(p.community_count(), 3u);
  EXPECT_NE(p[3], p[4]);
}

TEST(Louvain, PlantedPartitionRecovered) {
  PlantedGraph pg = planted_partition_graph(4, 8, 0.9, 0.02, 17);
  Dendrogram d = louvain(pg.graph, {.seed = 17});
  const double nmi = normalized_mutual_information(best_partition(d).assignment(), pg.truth.labels_for(pg.graph.nodes()));
  EXPECT_GE(nmi, 0.9);
  expect_dendrogram_invariants(pg.graph, d);
}

TEST(Louvain, DeterministicForSeed) {
  PlantedGraph pg = planted_partition_graph(5, 30, 0.3, 0.05, 4);
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    Dendrogram a = louvain(pg.graph, {.seed = seed});
    Dendrogram b = louvain(pg.graph, {.seed = seed});
    EXPECT_EQ(a.partitions(), b.partitions());
    EXPECT_EQ(a.modularities(), b.modularities());
  }
}

TEST(Louvain, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    UndirectedGraph g = oracle::random_undirected(rng, 2 + rng() % 120, std::uniform_real_distribution<double>(0.02, 0.3)(rng));
    if (g.edge_count() == 0) continue;
    Dendrogram d = louvain(g, {.seed = static_cast<std::uint64_t>(trial)});
    expect_dendrogram_invariants(g, d);
    EXPECT_GE(modularity(g, best_partition(d)), modularity(g, partition_at_level(d, 0)) - 1e-12);
  }
}

TEST(Louvain, NearOptimalOnSmallGraphs) {
  std::mt19937_64 rng(6);
  int checked = 0;
  while (checked < 40) {
    UndirectedGraph g = oracle::random_undirected(rng, 3 + rng() % 6, 0.4);
    if (g.edge_count() == 0) continue;
    ++checked;
    const double got = modularity(g, best_partition(louvain(g, {.seed = rng()})));
    EXPECT_GE(got, oracle::optimal_modularity(g) - 0.05);
  }
}

TEST(Louvain, RelabelingGivesEquivalentPartition) {
  // Well-separated blocks: the optimum does not depend on node names.
  PlantedGraph pg = planted_partition_graph(4, 10, 1.0, 0.0, 3);
  std::vector<NodeIndex> perm(pg.graph.node_count());
  std::iota(perm.begin(), perm.end(), NodeIndex{0});
  std::mt19937_64 rng(9);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<UserId> renamed(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) renamed[perm[i]] = pg.graph.nodes()[i];
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  for (auto [a, b] : pg.graph.edges()) edges.emplace_back(perm[a], perm[b]);
  UndirectedGraph h(renamed, edges);

  const Partition pa = best_partition(louvain(pg.graph, {.seed = 1}));
  const Partition pb = best_partition(louvain(h, {.seed = 1}));
  std::vector<CommunityId> pulled(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) pulled[i] = pb[perm[i]];
  EXPECT_DOUBLE_EQ(normalized_mutual_information(pa.assignment(), pulled), 1.0);
}

TEST(Louvain, ResolutionControlsGranularity) {
  PlantedGraph pg = planted_partition_graph(6, 10, 0.8, 0.05, 8);
  const auto coarse = best_partition(louvain(pg.graph, {.resolution = 0.2})).community_count();
  const auto fine = best_partition(louvain(pg.graph, {.resolution = 3.0})).community_count();
  EXPECT_LT(coarse, fine);
}

TEST(Louvain, ConfigValidation) {
  UndirectedGraph g = two_triangles(true);
  EXPECT_THROW(louvain(g, {.resolution = 0.0}), Error);
  EXPECT_THROW(louvain(g, {.min_gain = 0.0}), Error);
}

TEST(Dendrogram, LevelAccess) {
  UndirectedGraph g = two_triangles(true);
  Dendrogram d = louvain(g);
  EXPECT_EQ(&partition_at_level(d, d.levels() - 1), &best_partition(d));
  EXPECT_TRUE(partition_at_level(d, 0).refines(best_partition(d)));
  EXPECT_THROW(partition_at_level(d, 5), Error);
  EXPECT_THROW(best_partition(Dendrogram{}), Error);

  Dendrogram single({Partition::singletons(3)}, {0.0});
  EXPECT_EQ(best_partition(single), Partition::singletons(3));
  EXPECT_THROW(Dendrogram({Partition({0, 0, 1}), Partition({0, 1, 1})}, {0.0, 0.1}), Error);
}
