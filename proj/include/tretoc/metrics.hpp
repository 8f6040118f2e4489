// metrics.hpp
// Evaluation metrics for topic graphs and their community partitions.
//
// Structural metrics run on the directed TopicGraph. E is treated as a set of
// ordered user pairs: an (x, y) pair carrying two tags (a creator that both
// follows and retweets another creator) counts once.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tretoc/graph.hpp"
#include "tretoc/louvain.hpp"
#include "tretoc/roles.hpp"

namespace tretoc {

struct CommunityComposition {
  CommunityId community = 0;
  std::size_t size = 0;
  double pct_creators = 0.0;      // share of the graph's creators, in percent
  double pct_distributors = 0.0;  // share of the graph's distributors, in percent
  double clustering_coefficient = 0.0;
};

struct TopicMetrics {
  std::size_t nodes = 0;
  std::size_t edges = 0;  // distinct ordered pairs
  std::size_t n_communities = 0;
  double disconnected_ratio = 0.0;
  double modularity = 0.0;
  double communities_nodes_ratio = 0.0;
  double density = 0.0;
  std::vector<CommunityComposition> per_community;

  double mean_pct_creators() const;
  double mean_pct_distributors() const;
  double mean_clustering() const;
};

// Fraction of nodes with no incident edge. Throws on an empty graph.
double disconnected_ratio(const TopicGraph& g);
// |E| / (|V| (|V| - 1)). Throws when |V| < 2.
double density(const TopicGraph& g);
// Throws on an empty partition.
double communities_nodes_ratio(const Partition& p);

// Directed local clustering: edges among the either-direction neighbourhood
// N_i over k_i (k_i - 1); 0 when k_i < 2. Throws if v is not in g.
double node_clustering(const TopicGraph& g, const UserId& v);
// node_clustering for every node, in g.nodes() order.
std::vector<double> all_node_clustering(const TopicGraph& g);

// `p` is over the node order of undirected_projection(g), i.e. g.nodes().
std::vector<CommunityComposition> community_composition(const TopicGraph& g, const Partition& p);

// |A n B| / |A u B|. Throws when both sets are empty.
double jaccard_overlap(const std::set<UserId>& a, const std::set<UserId>& b);

// Normalised mutual information with arithmetic-mean normalisation; 1 for
// identical partitions up to renaming. Both labelings must have equal length.
double normalized_mutual_information(const std::vector<CommunityId>& a,
                                     const std::vector<CommunityId>& b);

struct MethodResult {
  TopicGraph graph;
  Dendrogram dendrogram;
  TopicMetrics metrics;
};

// Louvain on the undirected projection, then every metric on the directed
// graph. Modularity is that of the best partition at resolution 1.
MethodResult evaluate_graph(TopicGraph graph, const LouvainConfig& cfg);

struct TopicReport {
  TopicId topic;
  std::optional<MethodResult> tretoc;
  std::optional<MethodResult> rbc;
};

enum class Method { TreToC, RBC, Both };

// Runs roles -> graphs -> Louvain -> metrics for one topic. Throws Error for
// a topic without any creator or distributor, or whose graph has no edge.
TopicReport topic_report(const TopicDataset& ds, const LouvainConfig& cfg, Method method = Method::Both);

}  // namespace tretoc
