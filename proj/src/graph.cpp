#include "tretoc/graph.hpp"

#include <algorithm>

namespace tretoc {

std::string_view to_string(Role role) {
  return role == Role::Creator ? "creator" : "distributor";
}

std::string_view to_string(EdgeTag tag) {
  switch (tag) {
    case EdgeTag::FC: return "FC";
    case EdgeTag::FD: return "FD";
    case EdgeTag::RT: return "RT";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view s) {
  if (s == "creator") return Role::Creator;
  if (s == "distributor") return Role::Distributor;
  return std::nullopt;
}

std::optional<EdgeTag> parse_edge_tag(std::string_view s) {
  if (s == "FC") return EdgeTag::FC;
  if (s == "FD") return EdgeTag::FD;
  if (s == "RT") return EdgeTag::RT;
  return std::nullopt;
}

void TopicGraph::add_node(const UserId& user, Role role) {
  auto [it, inserted] = nodes_.emplace(user, role);
  if (!inserted && it->second != role) {
    throw Error("node " + user.str() + " already present with role " +
                std::string(to_string(it->second)));
  }
}

std::optional<Role> TopicGraph::role(const UserId& user) const {
  auto it = nodes_.find(user);
  if (it == nodes_.end()) return std::nullopt;
  return it->second;
}

bool TopicGraph::add_edge(const UserId& src, const UserId& dst, EdgeTag tag) {
  if (src == dst) throw Error("self-edge on " + src.str());
  auto rs = role(src);
  auto rd = role(dst);
  if (!rs || !rd) {
    throw Error("edge " + src.str() + " -> " + dst.str() + " references an unknown node");
  }
  bool typed = false;
  switch (tag) {
    case EdgeTag::FC: typed = *rs == Role::Creator && *rd == Role::Creator; break;
    case EdgeTag::FD: typed = *rs == Role::Distributor && *rd == Role::Distributor; break;
    case EdgeTag::RT: typed = *rd == Role::Creator; break;
  }
  if (!typed) {
    throw Error("edge " + src.str() + " -> " + dst.str() + " violates " +
                std::string(to_string(tag)) + " role typing");
  }
  return edges_.insert({src, dst, tag}).second;
}

namespace {

TopicGraph nodes_with_retweets(const RoleAssignment& ra) {
  TopicGraph g;
  for (const UserId& u : ra.creators) g.add_node(u, Role::Creator);
  for (const UserId& u : ra.distributors) g.add_node(u, Role::Distributor);
  for (const auto& [retweeter, author] : ra.retweet_links) g.add_edge(retweeter, author, EdgeTag::RT);
  return g;
}

}  // namespace

TopicGraph build_tretoc(const RoleAssignment& ra, const std::set<FollowEdge>& follows) {
  TopicGraph g = nodes_with_retweets(ra);
  for (const FollowEdge& f : follows) {
    if (f.follower == f.followee) continue;
    auto rs = g.role(f.follower);
    auto rd = g.role(f.followee);
    if (!rs || !rd || *rs != *rd) continue;
    g.add_edge(f.follower, f.followee, *rs == Role::Creator ? EdgeTag::FC : EdgeTag::FD);
  }
  return g;
}

TopicGraph build_rbc(const RoleAssignment& ra) { return nodes_with_retweets(ra); }

UndirectedGraph::UndirectedGraph(std::vector<UserId> nodes,
                                 std::vector<std::pair<NodeIndex, NodeIndex>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const std::size_t n = nodes_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(nodes_[i], static_cast<NodeIndex>(i)).second) {
      throw Error("duplicate node " + nodes_[i].str());
    }
  }
  for (auto& [a, b] : edges_) {
    if (a >= n || b >= n) throw Error("edge endpoint out of range");
    if (a == b) throw Error("self-loop on " + nodes_[a].str());
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : edges_) {
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    adjacency_[cursor[a]++] = b;
    adjacency_[cursor[b]++] = a;
  }
}

std::optional<NodeIndex> UndirectedGraph::index_of(const UserId& user) const {
  auto it = index_.find(user);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UndirectedGraph undirected_projection(const TopicGraph& g) {
  std::vector<UserId> nodes;
  nodes.reserve(g.node_count());
  std::map<UserId, NodeIndex> index;
  for (const auto& [user, role] : g.nodes()) {
    index.emplace(user, static_cast<NodeIndex>(nodes.size()));
    nodes.push_back(user);
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(g.edges().size());
  for (const DirectedEdge& e : g.edges()) edges.emplace_back(index.at(e.src), index.at(e.dst));
  return UndirectedGraph(std::move(nodes), std::move(edges));
}

}  // namespace tretoc
