#include "tretoc/synth.hpp"

#include <cmath>
#include <cstdio>

namespace tretoc {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::string numbered(const char* prefix, std::size_t a, std::size_t b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%zu_%zu", prefix, a, b);
  return buf;
}

bool coin(std::mt19937_64& rng, double p) { return uniform01(rng) < p; }

// Visits each cell of a sequence of row segments independently with
// probability p, skipping ahead geometrically between hits.
class SkipSampler {
 public:
  SkipSampler(double p, std::mt19937_64& rng) : p_(p), rng_(rng) {
    if (p_ > 0.0 && p_ < 1.0) log_q_ = std::log1p(-p_);
    next_ = draw();
  }

  template <typename Emit>
  void row(std::size_t length, Emit&& emit) {
    if (p_ <= 0.0) return;
    if (p_ >= 1.0) {
      for (std::size_t j = 0; j < length; ++j) emit(j);
      return;
    }
    while (next_ < length) {
      emit(static_cast<std::size_t>(next_));
      next_ += 1 + draw();
    }
    next_ -= length;
  }

 private:
  std::uint64_t draw() {
    if (p_ <= 0.0 || p_ >= 1.0) return 0;
    const double u = 1.0 - uniform01(rng_);  // (0, 1]
    const double skip = std::floor(std::log(u) / log_q_);
    return skip > 1e18 ? std::uint64_t{1} << 62 : static_cast<std::uint64_t>(skip);
  }

  double p_;
  double log_q_ = 0.0;
  std::mt19937_64& rng_;
  std::uint64_t next_ = 0;
};

}  // namespace

void SynthConfig::validate() const {
  if (n_communities == 0) throw Error("synthetic config needs at least one community");
  if (n_creators == 0 || n_distributors == 0) throw Error("synthetic config needs creators and distributors");
  for (double p : {p_retweet_in, p_retweet_cross, p_follow_cc, p_follow_dd}) {
    if (!is_probability(p)) throw Error("synthetic probabilities must lie in [0, 1]");
  }
  if (min_originals == 0 || min_originals > max_originals) throw Error("invalid originals-per-creator range");
}

std::vector<CommunityId> PlantedTruth::labels_for(const std::vector<UserId>& nodes) const {
  std::vector<CommunityId> out;
  out.reserve(nodes.size());
  for (const UserId& u : nodes) {
    auto it = community.find(u);
    if (it == community.end()) throw Error("no planted label for " + u.str());
    out.push_back(it->second);
  }
  return out;
}

SynthTopic generate_topic(const SynthConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const TopicId topic(cfg.topic);
  PlantedTruth truth;

  struct Original {
    std::string id;
    std::size_t community;
  };
  std::vector<std::vector<UserId>> creators(cfg.n_communities), distributors(cfg.n_communities);
  std::vector<Original> originals;
  std::vector<Tweet> tweets;

  for (std::size_t k = 0; k < cfg.n_communities; ++k) {
    for (std::size_t i = 0; i < cfg.n_creators; ++i) {
      UserId u(cfg.user_prefix + numbered("c", k, i));
      truth.community.emplace(u, static_cast<CommunityId>(k));
      truth.role.emplace(u, Role::Creator);
      creators[k].push_back(u);
      const std::size_t span = cfg.max_originals - cfg.min_originals + 1;
      const std::size_t count = cfg.min_originals + static_cast<std::size_t>(rng() % span);
      for (std::size_t o = 0; o < count; ++o) {
        std::string id = cfg.user_prefix + "o" + std::to_string(originals.size());
        tweets.push_back({TweetId(id), u, topic, std::nullopt, false});
        originals.push_back({id, k});
      }
    }
    for (std::size_t i = 0; i < cfg.n_distributors; ++i) {
      UserId u(cfg.user_prefix + numbered("d", k, i));
      truth.community.emplace(u, static_cast<CommunityId>(k));
      truth.role.emplace(u, Role::Distributor);
      distributors[k].push_back(u);
    }
  }

  std::size_t retweet_count = 0;
  for (std::size_t k = 0; k < cfg.n_communities; ++k) {
    for (const UserId& d : distributors[k]) {
      for (const Original& o : originals) {
        if (!coin(rng, o.community == k ? cfg.p_retweet_in : cfg.p_retweet_cross)) continue;
        std::string id = cfg.user_prefix + "r" + std::to_string(retweet_count++);
        tweets.push_back({TweetId(id), d, topic, TweetId(o.id), false});
      }
    }
  }

  std::set<FollowEdge> follows;
  auto sample_follows = [&](const std::vector<UserId>& group, double p) {
    for (const UserId& a : group) {
      for (const UserId& b : group) {
        if (a != b && coin(rng, p)) follows.insert({a, b});
      }
    }
  };
  for (std::size_t k = 0; k < cfg.n_communities; ++k) {
    sample_follows(creators[k], cfg.p_follow_cc);
    sample_follows(distributors[k], cfg.p_follow_dd);
  }

  return {TopicDataset(topic, std::move(tweets), std::move(follows)), std::move(truth)};
}

Corpus generate_corpus(const SynthConfig& cfg, std::size_t n_topics) {
  Corpus corpus;
  for (std::size_t i = 0; i < n_topics; ++i) {
    SynthConfig topic_cfg = cfg;
    char suffix[32];
    std::snprintf(suffix, sizeof suffix, "-%02zu", i);
    topic_cfg.topic = cfg.topic + suffix;
    topic_cfg.seed = cfg.seed + i;
    topic_cfg.user_prefix = cfg.user_prefix + "t" + std::to_string(i) + "-";
    SynthTopic t = generate_topic(topic_cfg);
    corpus.topics.emplace(t.dataset.topic(), std::move(t.dataset));
  }
  return corpus;
}

PlantedGraph planted_partition_graph(std::size_t k, std::size_t n, double p_in, double p_out,
                                     std::uint64_t seed) {
  if (k == 0 || n == 0) throw Error("planted partition needs k >= 1 and n >= 1");
  if (!is_probability(p_in) || !is_probability(p_out)) throw Error("probabilities must lie in [0, 1]");
  if (!(p_out < p_in)) throw Error("planted partition requires p_out < p_in");

  std::mt19937_64 rng(seed);
  const std::size_t total = k * n;
  std::vector<UserId> nodes;
  nodes.reserve(total);
  PlantedTruth truth;
  for (std::size_t v = 0; v < total; ++v) {
    nodes.emplace_back("v" + std::to_string(v));
    truth.community.emplace(nodes.back(), static_cast<CommunityId>(v / n));
  }

  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  SkipSampler inside(p_in, rng);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = b * n + i;
      inside.row(n - i - 1, [&](std::size_t j) {
        edges.emplace_back(static_cast<NodeIndex>(row), static_cast<NodeIndex>(row + 1 + j));
      });
    }
  }
  SkipSampler across(p_out, rng);
  for (std::size_t row = 0; row < total; ++row) {
    // Columns: every node in a later block.
    const std::size_t first = (row / n + 1) * n;
    across.row(total - first, [&](std::size_t j) {
      edges.emplace_back(static_cast<NodeIndex>(row), static_cast<NodeIndex>(first + j));
    });
  }
  return {UndirectedGraph(std::move(nodes), std::move(edges)), std::move(truth)};
}

}  // namespace tretoc
