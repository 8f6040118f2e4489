// graph.hpp
// Directed topic graphs (TreToC and the retweet-only baseline) and the
// undirected projection consumed by Louvain.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tretoc/roles.hpp"
#include "tretoc/types.hpp"

namespace tretoc {

enum class Role : std::uint8_t { Creator, Distributor };

// FC: creator follows creator. FD: distributor follows distributor.
// RT: retweeter -> author of the retweeted original.
enum class EdgeTag : std::uint8_t { FC, FD, RT };

std::string_view to_string(Role role);
std::string_view to_string(EdgeTag tag);
std::optional<Role> parse_role(std::string_view s);
std::optional<EdgeTag> parse_edge_tag(std::string_view s);

struct DirectedEdge {
  UserId src;
  UserId dst;
  EdgeTag tag;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Directed, unweighted, role-typed graph. Every edge is checked against the
// role typing rules on insertion; self-edges are rejected.
class TopicGraph {
 public:
  // Adds or confirms a node. Re-adding with a different role throws.
  void add_node(const UserId& user, Role role);
  // Returns false if the identical (src, dst, tag) record already existed.
  bool add_edge(const UserId& src, const UserId& dst, EdgeTag tag);

  const std::map<UserId, Role>& nodes() const { return nodes_; }
  const std::set<DirectedEdge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool contains(const UserId& user) const { return nodes_.contains(user); }
  std::optional<Role> role(const UserId& user) const;

  friend bool operator==(const TopicGraph&, const TopicGraph&) = default;

 private:
  std::map<UserId, Role> nodes_;
  std::set<DirectedEdge> edges_;
};

// E = F_C u F_D u Ret over V = creators u distributors. Follow edges between a
// creator and a distributor are never added.
// Follows touching users outside the topic are ignored.
TopicGraph build_tretoc(const RoleAssignment& ra, const std::set<FollowEdge>& follows);
// Same node set as build_tretoc, RT edges only.
TopicGraph build_rbc(const RoleAssignment& ra);

using NodeIndex = std::uint32_t;

// Simple undirected graph over a fixed node list, stored as a sorted edge
// list plus CSR adjacency. Nodes are addressed by their position in nodes().
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  // Node ids must be unique. Edge endpoints index into `nodes`; parallel and
  // reversed duplicates collapse. Self-loops throw.
  UndirectedGraph(std::vector<UserId> nodes, std::vector<std::pair<NodeIndex, NodeIndex>> edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<UserId>& nodes() const { return nodes_; }
  // Each pair has first < second; sorted lexicographically.
  const std::vector<std::pair<NodeIndex, NodeIndex>>& edges() const { return edges_; }

  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeIndex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<NodeIndex> index_of(const UserId& user) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<UserId> nodes_;
  std::vector<std::pair<NodeIndex, NodeIndex>> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeIndex> adjacency_;
  std::unordered_map<UserId, NodeIndex> index_;
};

// Every directed edge (a, b, *) becomes the pair {a, b}. Node order follows
// the topic graph's (sorted) node order; isolated nodes are kept.
UndirectedGraph undirected_projection(const TopicGraph& g);

}  // namespace tretoc
