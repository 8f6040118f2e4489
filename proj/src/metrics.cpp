#include "tretoc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tretoc {

namespace {

// Distinct out/in neighbour lists over g.nodes() order.
struct DirectedAdjacency {
  std::vector<std::vector<NodeIndex>> out;
  std::vector<std::vector<NodeIndex>> in;
  std::size_t pair_count = 0;

  explicit DirectedAdjacency(const TopicGraph& g) : out(g.node_count()), in(g.node_count()) {
    std::map<UserId, NodeIndex> index;
    NodeIndex i = 0;
    for (const auto& [user, role] : g.nodes()) index.emplace(user, i++);
    for (const DirectedEdge& e : g.edges()) {
      const NodeIndex a = index.at(e.src);
      const NodeIndex b = index.at(e.dst);
      out[a].push_back(b);
      in[b].push_back(a);
    }
    for (auto* lists : {&out, &in}) {
      for (auto& l : *lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
      }
    }
    for (const auto& l : out) pair_count += l.size();
  }

  std::vector<NodeIndex> neighbourhood(NodeIndex v) const {
    std::vector<NodeIndex> n;
    std::set_union(out[v].begin(), out[v].end(), in[v].begin(), in[v].end(), std::back_inserter(n));
    return n;
  }
};

double clustering_at(const DirectedAdjacency& adj, NodeIndex v, std::vector<char>& mark) {
  const auto nb = adj.neighbourhood(v);
  const std::size_t k = nb.size();
  if (k < 2) return 0.0;
  for (NodeIndex u : nb) mark[u] = 1;
  std::size_t links = 0;
  for (NodeIndex j : nb) {
    for (NodeIndex t : adj.out[j]) links += static_cast<std::size_t>(mark[t]);
  }
  for (NodeIndex u : nb) mark[u] = 0;
  return static_cast<double>(links) / static_cast<double>(k * (k - 1));
}

double mean(const std::vector<CommunityComposition>& rows, double CommunityComposition::*field) {
  if (rows.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : rows) sum += r.*field;
  return sum / static_cast<double>(rows.size());
}

}  // namespace

double TopicMetrics::mean_pct_creators() const {
  return mean(per_community, &CommunityComposition::pct_creators);
}
double TopicMetrics::mean_pct_distributors() const {
  return mean(per_community, &CommunityComposition::pct_distributors);
}
double TopicMetrics::mean_clustering() const {
  return mean(per_community, &CommunityComposition::clustering_coefficient);
}

double disconnected_ratio(const TopicGraph& g) {
  if (g.node_count() == 0) throw Error("disconnected ratio of an empty graph");
  std::set<UserId> linked;
  for (const DirectedEdge& e : g.edges()) {
    linked.insert(e.src);
    linked.insert(e.dst);
  }
  return static_cast<double>(g.node_count() - linked.size()) / static_cast<double>(g.node_count());
}

double density(const TopicGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw Error("density needs at least two nodes");
  const DirectedAdjacency adj(g);
  return static_cast<double>(adj.pair_count) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double communities_nodes_ratio(const Partition& p) {
  if (p.size() == 0) throw Error("communities/nodes ratio of an empty partition");
  return static_cast<double>(p.community_count()) / static_cast<double>(p.size());
}

double node_clustering(const TopicGraph& g, const UserId& v) {
  auto it = g.nodes().find(v);
  if (it == g.nodes().end()) throw Error("node " + v.str() + " not in graph");
  const auto pos = static_cast<NodeIndex>(std::distance(g.nodes().begin(), it));
  const DirectedAdjacency adj(g);
  std::vector<char> mark(g.node_count(), 0);
  return clustering_at(adj, pos, mark);
}

std::vector<double> all_node_clustering(const TopicGraph& g) {
  const DirectedAdjacency adj(g);
  std::vector<char> mark(g.node_count(), 0);
  std::vector<double> out(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) out[v] = clustering_at(adj, v, mark);
  return out;
}

std::vector<CommunityComposition> community_composition(const TopicGraph& g, const Partition& p) {
  if (p.size() != g.node_count()) throw Error("partition does not cover the graph's nodes");
  const auto clustering = all_node_clustering(g);
  std::vector<Role> roles;
  roles.reserve(g.node_count());
  std::size_t creators = 0, distributors = 0;
  for (const auto& [user, role] : g.nodes()) {
    roles.push_back(role);
    (role == Role::Creator ? creators : distributors)++;
  }
  std::vector<CommunityComposition> rows(p.community_count());
  std::vector<std::size_t> cc(rows.size(), 0), cd(rows.size(), 0);
  std::vector<double> cluster_sum(rows.size(), 0.0);
  for (std::size_t v = 0; v < p.size(); ++v) {
    const CommunityId c = p[v];
    ++rows[c].size;
    (roles[v] == Role::Creator ? cc : cd)[c]++;
    cluster_sum[c] += clustering[v];
  }
  for (CommunityId c = 0; c < rows.size(); ++c) {
    rows[c].community = c;
    rows[c].pct_creators = creators ? 100.0 * static_cast<double>(cc[c]) / static_cast<double>(creators) : 0.0;
    rows[c].pct_distributors =
        distributors ? 100.0 * static_cast<double>(cd[c]) / static_cast<double>(distributors) : 0.0;
    rows[c].clustering_coefficient = cluster_sum[c] / static_cast<double>(rows[c].size);
  }
  return rows;
}

double jaccard_overlap(const std::set<UserId>& a, const std::set<UserId>& b) {
  if (a.empty() && b.empty()) throw Error("jaccard index of two empty sets");
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

double normalized_mutual_information(const std::vector<CommunityId>& a, const std::vector<CommunityId>& b) {
  if (a.size() != b.size()) throw Error("labelings differ in length");
  if (a.empty()) throw Error("NMI of empty labelings");
  const double n = static_cast<double>(a.size());
  std::map<CommunityId, double> pa, pb;
  std::map<std::pair<CommunityId, CommunityId>, double> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa[a[i]] += 1.0;
    pb[b[i]] += 1.0;
    joint[{a[i], b[i]}] += 1.0;
  }
  auto entropy = [n](const std::map<CommunityId, double>& counts) {
    double h = 0.0;
    for (const auto& [label, c] : counts) h -= (c / n) * std::log(c / n);
    return h;
  };
  const double ha = entropy(pa);
  const double hb = entropy(pb);
  if (ha + hb == 0.0) return 1.0;
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    mi += (c / n) * std::log(c * n / (pa[key.first] * pb[key.second]));
  }
  return std::clamp(2.0 * mi / (ha + hb), 0.0, 1.0);
}

MethodResult evaluate_graph(TopicGraph graph, const LouvainConfig& cfg) {
  MethodResult r{std::move(graph), {}, {}};
  const UndirectedGraph projected = undirected_projection(r.graph);
  r.dendrogram = louvain(projected, cfg);
  const Partition& best = best_partition(r.dendrogram);

  TopicMetrics& m = r.metrics;
  m.nodes = r.graph.node_count();
  m.edges = DirectedAdjacency(r.graph).pair_count;
  m.n_communities = best.community_count();
  m.disconnected_ratio = disconnected_ratio(r.graph);
  m.modularity = modularity(projected, best, 1.0);
  m.communities_nodes_ratio = communities_nodes_ratio(best);
  m.density = density(r.graph);
  m.per_community = community_composition(r.graph, best);
  return r;
}

TopicReport topic_report(const TopicDataset& ds, const LouvainConfig& cfg, Method method) {
  const RoleAssignment ra = assign_roles(ds);
  if (ra.creators.empty() && ra.distributors.empty()) {
    throw Error("empty topic '" + ds.topic().str() + "': no retweeted content");
  }
  TopicReport report{ds.topic(), std::nullopt, std::nullopt};
  if (method != Method::RBC) report.tretoc = evaluate_graph(build_tretoc(ra, ds.follows()), cfg);
  if (method != Method::TreToC) report.rbc = evaluate_graph(build_rbc(ra), cfg);
  return report;
}

}  // namespace tretoc
