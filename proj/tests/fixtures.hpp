// fixtures.hpp
// Small hand-built datasets shared by the unit tests.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tretoc/types.hpp"

namespace fixtures {

inline tretoc::Tweet tweet(const std::string& id, const std::string& author,
                           const std::optional<std::string>& retweet_of = std::nullopt,
                           const std::string& topic = "h") {
  tretoc::Tweet t{tretoc::TweetId(id), tretoc::UserId(author), tretoc::TopicId(topic), std::nullopt, false};
  if (retweet_of) t.retweet_of = tretoc::TweetId(*retweet_of);
  return t;
}

inline tretoc::UserId user(const std::string& s) { return tretoc::UserId(s); }
inline tretoc::TweetId tid(const std::string& s) { return tretoc::TweetId(s); }

// 5 originals (o1..o5), 2 amplified (o1, o2), 4 retweets; bob authored the
// amplified o2 and also retweeted o1, so he is a creator only.
//   creators     = {alice, bob}
//   distributors = {erin, frank}
//   carol, dave  = authors of never-retweeted originals (no role)
inline tretoc::TopicDataset role_fixture(std::set<tretoc::FollowEdge> follows = {}) {
  return tretoc::TopicDataset(tretoc::TopicId("h"),
                              {tweet("o1", "alice"), tweet("o2", "bob"), tweet("o3", "carol"),
                               tweet("o4", "dave"), tweet("o5", "alice"), tweet("r1", "erin", "o1"),
                               tweet("r2", "frank", "o1"), tweet("r3", "bob", "o1"),
                               tweet("r4", "erin", "o2")},
                              std::move(follows));
}

// Random dataset: `n_users` users, originals and retweets of originals,
// random follow pairs over the same user pool.
inline tretoc::TopicDataset random_dataset(std::mt19937_64& rng, std::size_t n_users, std::size_t n_originals,
                                           std::size_t n_retweets, std::size_t n_follows) {
  std::uniform_int_distribution<std::size_t> pick_user(0, n_users - 1);
  std::vector<tretoc::Tweet> tweets;
  for (std::size_t i = 0; i < n_originals; ++i) {
    tweets.push_back(tweet("o" + std::to_string(i), "u" + std::to_string(pick_user(rng))));
  }
  std::uniform_int_distribution<std::size_t> pick_original(0, n_originals - 1);
  for (std::size_t i = 0; i < n_retweets; ++i) {
    tweets.push_back(tweet("r" + std::to_string(i), "u" + std::to_string(pick_user(rng)),
                           "o" + std::to_string(pick_original(rng))));
  }
  std::set<tretoc::FollowEdge> follows;
  for (std::size_t i = 0; i < n_follows; ++i) {
    auto a = pick_user(rng), b = pick_user(rng);
    if (a != b) follows.insert({user("u" + std::to_string(a)), user("u" + std::to_string(b))});
  }
  return tretoc::TopicDataset(tretoc::TopicId("h"), std::move(tweets), std::move(follows));
}

}  // namespace fixtures
