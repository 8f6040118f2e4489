// roles.hpp
// Content creator / content distributor classification for one topic.

#pragma once

#include <map>
#include <set>
#include <utility>

#include "tretoc/types.hpp"

namespace tretoc {

struct RoleAssignment {
  TopicId topic;
  std::set<TweetId> originals;   // not retweets, not dangling
  std::set<TweetId> amplified;   // originals retweeted at least once
  std::map<TweetId, std::set<TweetId>> retweet_map;  // amplified -> its retweets
  std::set<UserId> creators;
  std::set<UserId> distributors;  // retweeters of amplified tweets minus creators
  // (retweeter, original author) for every resolved retweet, self-pairs
  // excluded. Creators that retweet keep their pair here.
  std::set<std::pair<UserId, UserId>> retweet_links;

  friend bool operator==(const RoleAssignment&, const RoleAssignment&) = default;
};

std::set<TweetId> original_tweets(const TopicDataset& ds);
std::set<TweetId> amplified_tweets(const TopicDataset& ds);
// Throws Error if `t` is not an original tweet of the dataset.
std::set<TweetId> retweets_of(const TweetId& t, const TopicDataset& ds);
std::set<UserId> content_creators(const TopicDataset& ds);
std::set<UserId> content_distributors(const TopicDataset& ds);

RoleAssignment assign_roles(const TopicDataset& ds);

}  // namespace tretoc
