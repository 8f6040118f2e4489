// louvain.hpp
// Louvain modularity optimisation over an UndirectedGraph.
//
// Each level runs local moves until a full pass gains less than min_gain,
// then collapses communities into super-nodes (intra-community edges become
// self-loops) and repeats. The dendrogram stores one partition per level,
// always expressed over the original nodes.

#pragma once

#include <cstdint>
#include <vector>

#include "tretoc/graph.hpp"

namespace tretoc {

using CommunityId = std::uint32_t;

// Node -> community assignment over an UndirectedGraph's node indices.
// Community ids are renumbered densely in order of first appearance.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<CommunityId> assignment);

  static Partition singletons(std::size_t n);

  std::size_t size() const { return assignment_.size(); }
  std::size_t community_count() const { return count_; }
  CommunityId operator[](std::size_t node) const { return assignment_[node]; }
  const std::vector<CommunityId>& assignment() const { return assignment_; }
  std::vector<std::vector<NodeIndex>> members() const;

  // True if every community of *this lies inside one community of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<CommunityId> assignment_;
  std::size_t count_ = 0;
};

struct LouvainConfig {
  double resolution = 1.0;
  std::uint64_t seed = 0;
  double min_gain = 1e-7;

  void validate() const;
};

class Dendrogram {
 public:
  Dendrogram() = default;
  Dendrogram(std::vector<Partition> levels, std::vector<double> modularities);

  std::size_t levels() const { return levels_.size(); }
  bool empty() const { return levels_.empty(); }
  const std::vector<Partition>& partitions() const { return levels_; }
  // Modularity of each level at the resolution used to build it.
  const std::vector<double>& modularities() const { return modularities_; }

 private:
  std::vector<Partition> levels_;
  std::vector<double> modularities_;
};

// Q = sum_c [ in_c / (2m) - resolution * (tot_c / (2m))^2 ], where in_c counts
// intra-community edge endpoints and tot_c the degree sum of c.
// Throws Error for an edgeless graph or a partition of the wrong size.
double modularity(const UndirectedGraph& g, const Partition& p, double resolution = 1.0);

Dendrogram louvain(const UndirectedGraph& g, const LouvainConfig& cfg = {});

// The last (coarsest) level. Throws Error on an empty dendrogram.
const Partition& best_partition(const Dendrogram& d);
// Level 0 is the finest. Throws Error when out of range.
const Partition& partition_at_level(const Dendrogram& d, std::size_t level);

}  // namespace tretoc
