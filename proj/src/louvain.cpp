#include "tretoc/louvain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace tretoc {

Partition::Partition(std::vector<CommunityId> assignment) : assignment_(std::move(assignment)) {
  constexpr CommunityId kUnset = std::numeric_limits<CommunityId>::max();
  std::vector<CommunityId> remap;
  for (CommunityId& c : assignment_) {
    if (c >= remap.size()) remap.resize(static_cast<std::size_t>(c) + 1, kUnset);
    if (remap[c] == kUnset) remap[c] = static_cast<CommunityId>(count_++);
    c = remap[c];
  }
}

Partition Partition::singletons(std::size_t n) {
  std::vector<CommunityId> a(n);
  std::iota(a.begin(), a.end(), CommunityId{0});
  return Partition(std::move(a));
}

std::vector<std::vector<NodeIndex>> Partition::members() const {
  std::vector<std::vector<NodeIndex>> out(count_);
  for (std::size_t v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(static_cast<NodeIndex>(v));
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  constexpr CommunityId kUnset = std::numeric_limits<CommunityId>::max();
  std::vector<CommunityId> parent(count_, kUnset);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    CommunityId& p = parent[assignment_[v]];
    if (p == kUnset) p = coarser[v];
    else if (p != coarser[v]) return false;
  }
  return true;
}

void LouvainConfig::validate() const {
  if (!(resolution > 0.0)) throw Error("resolution must be positive");
  if (!(min_gain > 0.0)) throw Error("min_gain must be positive");
}

Dendrogram::Dendrogram(std::vector<Partition> levels, std::vector<double> modularities)
    : levels_(std::move(levels)), modularities_(std::move(modularities)) {
  if (levels_.size() != modularities_.size()) throw Error("dendrogram level/modularity size mismatch");
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (!levels_[i - 1].refines(levels_[i])) throw Error("dendrogram levels are not nested");
  }
}

double modularity(const UndirectedGraph& g, const Partition& p, double resolution) {
  if (p.size() != g.node_count()) throw Error("partition does not cover the graph's nodes");
  if (g.edge_count() == 0) throw Error("modularity is undefined on an edgeless graph");
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  std::vector<double> in(p.community_count(), 0.0);
  std::vector<double> tot(p.community_count(), 0.0);
  for (const auto& [a, b] : g.edges()) {
    if (p[a] == p[b]) in[p[a]] += 2.0;
  }
  for (NodeIndex v = 0; v < g.node_count(); ++v) tot[p[v]] += static_cast<double>(g.degree(v));
  double q = 0.0;
  for (std::size_t c = 0; c < in.size(); ++c) {
    const double share = tot[c] / two_m;
    q += in[c] / two_m - resolution * share * share;
  }
  return q;
}

namespace {

// Weighted graph used at every level. Neighbour lists exclude self-loops,
// which are kept separately and counted once in internal weight but twice in
// the node's degree.
struct LevelGraph {
  std::vector<std::size_t> offsets;
  std::vector<NodeIndex> targets;
  std::vector<double> weights;
  std::vector<double> self_loop;
  std::vector<double> degree;
  double total_weight = 0.0;  // m

  std::size_t size() const { return self_loop.size(); }
};

LevelGraph from_undirected(const UndirectedGraph& g) {
  LevelGraph lg;
  const std::size_t n = g.node_count();
  lg.offsets.resize(n + 1);
  lg.targets.reserve(2 * g.edge_count());
  for (NodeIndex v = 0; v < n; ++v) {
    lg.offsets[v] = lg.targets.size();
    auto nb = g.neighbors(v);
    lg.targets.insert(lg.targets.end(), nb.begin(), nb.end());
  }
  lg.offsets[n] = lg.targets.size();
  lg.weights.assign(lg.targets.size(), 1.0);
  lg.self_loop.assign(n, 0.0);
  lg.degree.resize(n);
  for (NodeIndex v = 0; v < n; ++v) lg.degree[v] = static_cast<double>(g.degree(v));
  lg.total_weight = static_cast<double>(g.edge_count());
  return lg;
}

class LocalMover {
 public:
  LocalMover(const LevelGraph& g, const LouvainConfig& cfg, std::mt19937_64& rng)
      : g_(g), cfg_(cfg), rng_(rng), community_(g.size()), tot_(g.degree), in_(g.self_loop),
        neigh_weight_(g.size(), -1.0) {
    std::iota(community_.begin(), community_.end(), NodeIndex{0});
    neigh_list_.reserve(g.size());
  }

  double modularity() const {
    const double m = g_.total_weight;
    double q = 0.0;
    for (std::size_t c = 0; c < tot_.size(); ++c) {
      const double share = tot_[c] / (2.0 * m);
      q += in_[c] / m - cfg_.resolution * share * share;
    }
    return q;
  }

  // Runs passes until one improves modularity by less than min_gain.
  // Returns the modularity of the resulting assignment.
  double run() {
    std::vector<NodeIndex> order(g_.size());
    std::iota(order.begin(), order.end(), NodeIndex{0});
    double current = modularity();
    for (;;) {
      std::shuffle(order.begin(), order.end(), rng_);
      bool moved = false;
      for (NodeIndex v : order) moved |= move_node(v);
      const double next = modularity();
      const double gained = next - current;
      current = next;
      if (!moved || gained < cfg_.min_gain) break;
    }
    return current;
  }

  const std::vector<NodeIndex>& communities() const { return community_; }

 private:
  bool move_node(NodeIndex v) {
    const NodeIndex own = community_[v];
    const double k = g_.degree[v];
    const double two_m = 2.0 * g_.total_weight;

    neigh_list_.clear();
    touch(own);
    for (std::size_t e = g_.offsets[v]; e < g_.offsets[v + 1]; ++e) {
      const NodeIndex c = community_[g_.targets[e]];
      touch(c);
      neigh_weight_[c] += g_.weights[e];
    }

    tot_[own] -= k;
    in_[own] -= neigh_weight_[own] + g_.self_loop[v];

    NodeIndex best = own;
    double best_gain = neigh_weight_[own] - cfg_.resolution * tot_[own] * k / two_m;
    for (NodeIndex c : neigh_list_) {
      const double gain = neigh_weight_[c] - cfg_.resolution * tot_[c] * k / two_m;
      // Staying put wins ties; among other communities the lowest id wins.
      if (gain > best_gain || (gain == best_gain && best != own && c < best)) {
        best = c;
        best_gain = gain;
      }
    }

    tot_[best] += k;
    in_[best] += neigh_weight_[best] + g_.self_loop[v];
    community_[v] = best;

    for (NodeIndex c : neigh_list_) neigh_weight_[c] = -1.0;
    return best != own;
  }

  void touch(NodeIndex c) {
    if (neigh_weight_[c] < 0.0) {
      neigh_weight_[c] = 0.0;
      neigh_list_.push_back(c);
    }
  }

  const LevelGraph& g_;
  const LouvainConfig& cfg_;
  std::mt19937_64& rng_;
  std::vector<NodeIndex> community_;
  std::vector<double> tot_;
  std::vector<double> in_;
  std::vector<double> neigh_weight_;  // -1 marks "not touched this move"
  std::vector<NodeIndex> neigh_list_;
};

LevelGraph aggregate(const LevelGraph& g, const Partition& p) {
  const std::size_t k = p.community_count();
  const auto members = p.members();
  LevelGraph out;
  out.offsets.resize(k + 1);
  out.self_loop.assign(k, 0.0);
  out.degree.assign(k, 0.0);
  out.total_weight = g.total_weight;

  std::vector<double> acc(k, 0.0);
  std::vector<NodeIndex> touched;
  for (CommunityId c = 0; c < k; ++c) {
    out.offsets[c] = out.targets.size();
    touched.clear();
    for (NodeIndex v : members[c]) {
      out.self_loop[c] += g.self_loop[v];
      out.degree[c] += g.degree[v];
      for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
        const CommunityId d = p[g.targets[e]];
        if (d == c) {
          // Seen once from each endpoint.
          out.self_loop[c] += g.weights[e] / 2.0;
          continue;
        }
        if (acc[d] == 0.0) touched.push_back(d);
        acc[d] += g.weights[e];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (NodeIndex d : touched) {
      out.targets.push_back(d);
      out.weights.push_back(acc[d]);
      acc[d] = 0.0;
    }
  }
  out.offsets[k] = out.targets.size();
  return out;
}

}  // namespace

Dendrogram louvain(const UndirectedGraph& g, const LouvainConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.node_count();
  if (g.edge_count() == 0) {
    return Dendrogram({Partition::singletons(n)}, {std::numeric_limits<double>::quiet_NaN()});
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<Partition> levels;
  std::vector<double> qs;
  std::vector<CommunityId> original_to_super(n);
  std::iota(original_to_super.begin(), original_to_super.end(), CommunityId{0});

  LevelGraph current = from_undirected(g);
  for (;;) {
    LocalMover mover(current, cfg, rng);
    const double q = mover.run();
    if (!levels.empty() && q - qs.back() < cfg.min_gain) break;

    Partition level_partition(mover.communities());
    for (CommunityId& s : original_to_super) s = level_partition[s];
    levels.emplace_back(original_to_super);
    qs.push_back(q);
    if (level_partition.community_count() == current.size()) break;
    current = aggregate(current, level_partition);
  }
  return Dendrogram(std::move(levels), std::move(qs));
}

const Partition& best_partition(const Dendrogram& d) {
  if (d.empty()) throw Error("empty dendrogram");
  return d.partitions().back();
}

const Partition& partition_at_level(const Dendrogram& d, std::size_t level) {
  if (level >= d.levels()) {
    throw Error("level " + std::to_string(level) + " out of range (dendrogram has " +
                std::to_string(d.levels()) + " levels)");
  }
  return d.partitions()[level];
}

}  // namespace tretoc
