// types.hpp
// Shared domain types: identifiers, tweets, follow edges, per-topic datasets.

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tretoc {

// Base error for every domain failure. Callers map it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a file cannot be opened or written. Maps to exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Non-empty opaque string identifier, distinguished per domain by Tag.
template <typename Tag>
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw Error(std::string(Tag::kind) + " must be non-empty");
  }

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend bool operator==(const Identifier&, const Identifier&) = default;
  friend auto operator<=>(const Identifier&, const Identifier&) = default;

 private:
  std::string value_;
};

struct UserTag { static constexpr const char* kind = "user id"; };
struct TweetTag { static constexpr const char* kind = "tweet id"; };
struct TopicTag { static constexpr const char* kind = "topic"; };

using UserId = Identifier<UserTag>;
using TweetId = Identifier<TweetTag>;

// Topic labels are trimmed and lower-cased on construction.
class TopicId {
 public:
  TopicId() = default;
  explicit TopicId(std::string_view label);

  const std::string& str() const { return value_; }

  friend bool operator==(const TopicId&, const TopicId&) = default;
  friend auto operator<=>(const TopicId&, const TopicId&) = default;

 private:
  std::string value_;
};

struct Tweet {
  TweetId id;
  UserId author;
  TopicId topic;
  std::optional<TweetId> retweet_of;
  // Set when the record was a retweet whose origin was not captured. The
  // reference is cleared; the tweet still counts toward participation.
  bool dangling = false;

  bool is_retweet() const { return retweet_of.has_value(); }

  friend bool operator==(const Tweet&, const Tweet&) = default;
};

struct FollowEdge {
  UserId follower;
  UserId followee;

  friend bool operator==(const FollowEdge&, const FollowEdge&) = default;
  friend auto operator<=>(const FollowEdge&, const FollowEdge&) = default;
};

// All tweets of one topic plus the follow edges among its participants.
// Immutable once constructed; the constructor enforces the invariants.
class TopicDataset {
 public:
  TopicDataset() = default;
  // Tweets are sorted by id. Follow edges whose endpoints are not both
  // participants are discarded. Throws Error on duplicate ids, tweets from a
  // different topic, or retweets that do not resolve to an original here.
  TopicDataset(TopicId topic, std::vector<Tweet> tweets, std::set<FollowEdge> follows = {});

  const TopicId& topic() const { return topic_; }
  const std::vector<Tweet>& tweets() const { return tweets_; }
  const std::set<FollowEdge>& follows() const { return follows_; }

  const Tweet* find(const TweetId& id) const;

 private:
  TopicId topic_;
  std::vector<Tweet> tweets_;
  std::set<FollowEdge> follows_;
};

// Distinct authors over the dataset's tweets.
std::set<UserId> participants(const TopicDataset& ds);

}  // namespace tretoc

template <typename Tag>
struct std::hash<tretoc::Identifier<Tag>> {
  std::size_t operator()(const tretoc::Identifier<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
