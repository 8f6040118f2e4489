// ingest.hpp
// File formats: tweet records (JSONL / CSV), follow pairs (CSV), persisted
// corpora (JSON) and topic graphs (line-oriented text).

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>

#include "tretoc/graph.hpp"
#include "tretoc/types.hpp"

namespace tretoc {

enum class TweetFormat { Jsonl, Csv };

struct Corpus {
  std::map<TopicId, TopicDataset> topics;
};

struct IngestReport {
  std::size_t tweets_read = 0;
  std::size_t dangling_retweets = 0;
  std::size_t duplicate_ids = 0;  // byte-identical repeated records, dropped
  std::size_t normalized_chains = 0;  // retweets of retweets re-pointed at the root
  std::size_t follows_read = 0;
  std::size_t self_follows_dropped = 0;
  std::size_t duplicate_follows = 0;
  std::size_t topics = 0;
};

struct TweetParse {
  Corpus corpus;
  IngestReport report;
};

// One tweet per record, grouped by topic. Retweet chains are collapsed onto
// their root original; retweets whose root is missing (or lives in another
// topic) are kept as dangling originals. A repeated id with different content
// is an error; an exact repeat is counted and skipped.
TweetParse parse_tweets(std::istream& in, TweetFormat format);
TweetParse parse_tweets(const std::filesystem::path& path, TweetFormat format);

struct FollowParse {
  std::set<FollowEdge> edges;
  std::size_t lines_read = 0;
  std::size_t self_follows_dropped = 0;
  std::size_t duplicates = 0;
};

// `follower,followee` per line; blank lines are skipped.
FollowParse parse_follows(std::istream& in, bool has_header = false);
FollowParse parse_follows(const std::filesystem::path& path, bool has_header = false);

// Rebuilds every topic with the follow edges restricted to its participants.
Corpus attach_follows(const Corpus& corpus, const std::set<FollowEdge>& follows);

void write_tweets(const Corpus& corpus, std::ostream& out, TweetFormat format);
void write_follows(const std::set<FollowEdge>& follows, std::ostream& out);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& path);

// Format: `tretoc-graph v1` header, `node <id> <role>` lines, `edge <src>
// <dst> <tag>` lines, then an `end` trailer so truncation is detectable.
void write_graph(const TopicGraph& g, std::ostream& out);
void write_graph(const TopicGraph& g, const std::filesystem::path& path);
TopicGraph read_graph(std::istream& in);
TopicGraph read_graph(const std::filesystem::path& path);

}  // namespace tretoc
