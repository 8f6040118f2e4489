#include "tretoc/types.hpp"

#include <algorithm>
#include <cctype>

namespace tretoc {

TopicId::TopicId(std::string_view label) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!label.empty() && is_space(label.front())) label.remove_prefix(1);
  while (!label.empty() && is_space(label.back())) label.remove_suffix(1);
  if (label.empty()) throw Error("topic must be non-empty");
  value_.reserve(label.size());
  for (unsigned char c : label) value_.push_back(static_cast<char>(std::tolower(c)));
}

TopicDataset::TopicDataset(TopicId topic, std::vector<Tweet> tweets, std::set<FollowEdge> follows)
    : topic_(std::move(topic)), tweets_(std::move(tweets)) {
  std::sort(tweets_.begin(), tweets_.end(),
            [](const Tweet& a, const Tweet& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < tweets_.size(); ++i) {
    const Tweet& t = tweets_[i];
    if (t.id.empty() || t.author.empty()) throw Error("tweet with empty id or author");
    if (t.topic != topic_) {
      throw Error("tweet " + t.id.str() + " belongs to topic '" + t.topic.str() + "', not '" +
                  topic_.str() + "'");
    }
    if (i > 0 && tweets_[i - 1].id == t.id) throw Error("duplicate tweet id " + t.id.str());
  }
  for (const Tweet& t : tweets_) {
    if (!t.retweet_of) continue;
    if (t.dangling) throw Error("tweet " + t.id.str() + " is both dangling and a retweet");
    if (*t.retweet_of == t.id) throw Error("tweet " + t.id.str() + " retweets itself");
    const Tweet* origin = find(*t.retweet_of);
    if (origin == nullptr) {
      throw Error("retweet " + t.id.str() + " references unknown tweet " + t.retweet_of->str());
    }
    if (origin->retweet_of) {
      throw Error("retweet " + t.id.str() + " references another retweet " + origin->id.str());
    }
  }

  std::set<UserId> users = participants(*this);
  for (const FollowEdge& e : follows) {
    if (e.follower == e.followee) continue;
    if (users.contains(e.follower) && users.contains(e.followee)) follows_.insert(e);
  }
}

const Tweet* TopicDataset::find(const TweetId& id) const {
  auto it = std::lower_bound(tweets_.begin(), tweets_.end(), id,
                             [](const Tweet& t, const TweetId& key) { return t.id < key; });
  if (it == tweets_.end() || it->id != id) return nullptr;
  return &*it;
}

std::set<UserId> participants(const TopicDataset& ds) {
  std::set<UserId> users;
  for (const Tweet& t : ds.tweets()) users.insert(t.author);
  return users;
}

}  // namespace tretoc
