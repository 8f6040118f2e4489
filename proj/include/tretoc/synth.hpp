// synth.hpp
// Synthetic topics and planted-partition graphs with known ground truth.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tretoc/graph.hpp"
#include "tretoc/ingest.hpp"
#include "tretoc/louvain.hpp"

namespace tretoc {

struct SynthConfig {
  std::size_t n_creators = 5;       // per planted community
  std::size_t n_distributors = 20;  // per planted community
  std::size_t n_communities = 4;
  // Probability that a distributor retweets a given original of a creator in
  // the same / another planted community.
  double p_retweet_in = 0.1;
  double p_retweet_cross = 0.01;
  // Probability of each ordered follow pair inside a planted community.
  double p_follow_cc = 0.5;
  double p_follow_dd = 0.15;
  std::size_t min_originals = 1;
  std::size_t max_originals = 3;
  std::uint64_t seed = 42;
  std::string topic = "synthetic";
  std::string user_prefix;  // prepended to every generated user id

  void validate() const;
};

struct PlantedTruth {
  std::map<UserId, CommunityId> community;
  std::map<UserId, Role> role;  // empty for plain planted-partition graphs

  // Planted labels in the order of `nodes`; throws if a node is unknown.
  std::vector<CommunityId> labels_for(const std::vector<UserId>& nodes) const;
};

struct SynthTopic {
  TopicDataset dataset;
  PlantedTruth truth;
};

SynthTopic generate_topic(const SynthConfig& cfg);

// `n_topics` independent topics named "<cfg.topic>-NN", each with its own
// seed (cfg.seed + i) and user prefix, so topics share no users.
Corpus generate_corpus(const SynthConfig& cfg, std::size_t n_topics);

struct PlantedGraph {
  UndirectedGraph graph;
  PlantedTruth truth;
};

// k blocks of n nodes; within-block pairs are linked with p_in, cross-block
// pairs with p_out. Uses geometric skipping, so cost is O(k n + edges).
// Throws Error unless k, n >= 1 and 0 <= p_out < p_in <= 1.
PlantedGraph planted_partition_graph(std::size_t k, std::size_t n, double p_in, double p_out,
                                     std::uint64_t seed);

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace tretoc
