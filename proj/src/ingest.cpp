#include "tretoc/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace tretoc {

using nlohmann::json;

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

// Splits one CSV record (RFC 4180 quoting, no embedded newlines).
std::vector<std::string> split_csv(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back().push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  return fields;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

struct RawTweet {
  std::string id;
  std::string author;
  std::string topic;
  std::optional<std::string> retweet_of;
  std::size_t line = 0;

  bool same_content(const RawTweet& o) const {
    return id == o.id && author == o.author && TopicId(topic) == TopicId(o.topic) &&
           retweet_of == o.retweet_of;
  }
};

std::string json_string_field(const json& obj, const char* key, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(line_no, std::string("missing key '") + key + "'");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_unsigned()) return std::to_string(it->get<std::uint64_t>());
  throw ParseError(line_no, std::string("key '") + key + "' must be a string");
}

RawTweet parse_jsonl_record(const std::string& line, std::size_t line_no) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError(line_no, "record is not a JSON object");
  RawTweet t;
  t.id = json_string_field(obj, "id", line_no);
  t.author = json_string_field(obj, "author", line_no);
  t.topic = json_string_field(obj, "topic", line_no);
  auto rt = obj.find("retweet_of");
  if (rt != obj.end() && !rt->is_null()) t.retweet_of = json_string_field(obj, "retweet_of", line_no);
  return t;
}

struct CsvColumns {
  std::size_t id = 0, author = 1, topic = 2, retweet_of = 3;
};

RawTweet parse_csv_record(const std::vector<std::string>& fields, const CsvColumns& cols,
                          std::size_t line_no) {
  std::size_t need = std::max({cols.id, cols.author, cols.topic}) + 1;
  if (fields.size() < need) {
    throw ParseError(line_no, "expected at least " + std::to_string(need) + " fields, got " +
                                  std::to_string(fields.size()));
  }
  RawTweet t;
  t.id = fields[cols.id];
  t.author = fields[cols.author];
  t.topic = fields[cols.topic];
  if (cols.retweet_of < fields.size() && !fields[cols.retweet_of].empty()) {
    t.retweet_of = fields[cols.retweet_of];
  }
  return t;
}

void validate_record(const RawTweet& t) {
  if (t.id.empty()) throw ParseError(t.line, "empty id");
  if (t.author.empty()) throw ParseError(t.line, "empty author");
  try {
    TopicId check(t.topic);
  } catch (const Error&) {
    throw ParseError(t.line, "empty topic");
  }
  if (t.retweet_of && *t.retweet_of == t.id) throw ParseError(t.line, "tweet retweets itself");
}

std::vector<RawTweet> read_raw_tweets(std::istream& in, TweetFormat format, IngestReport& report) {
  std::vector<RawTweet> records;
  std::unordered_map<std::string, std::size_t> by_id;
  std::string line;
  std::size_t line_no = 0;
  std::optional<CsvColumns> columns;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    RawTweet t;
    if (format == TweetFormat::Jsonl) {
      t = parse_jsonl_record(line, line_no);
    } else {
      auto fields = split_csv(line, line_no);
      if (!columns) {
        columns.emplace();
        auto named_column = [&](const char* name) {
          return std::find(fields.begin(), fields.end(), name) != fields.end();
        };
        if (named_column("id") && named_column("author") && named_column("topic")) {
          CsvColumns named{SIZE_MAX, SIZE_MAX, SIZE_MAX, SIZE_MAX};
          for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fields[i] == "id") named.id = i;
            else if (fields[i] == "author") named.author = i;
            else if (fields[i] == "topic") named.topic = i;
            else if (fields[i] == "retweet_of") named.retweet_of = i;
          }
          columns = named;
          continue;
        }
      }
      t = parse_csv_record(fields, *columns, line_no);
    }
    t.line = line_no;
    validate_record(t);
    ++report.tweets_read;
    auto [it, inserted] = by_id.emplace(t.id, records.size());
    if (!inserted) {
      if (!records[it->second].same_content(t)) {
        throw ParseError(line_no, "duplicate tweet id " + t.id + " (first seen on line " +
                                      std::to_string(records[it->second].line) + ")");
      }
      ++report.duplicate_ids;
      continue;
    }
    records.push_back(std::move(t));
  }
  if (in.bad()) throw IoError("read error");
  return records;
}

}  // namespace

TweetParse parse_tweets(std::istream& in, TweetFormat format) {
  TweetParse result;
  IngestReport& report = result.report;
  std::vector<RawTweet> records = read_raw_tweets(in, format, report);

  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < records.size(); ++i) by_id.emplace(records[i].id, i);

  std::map<TopicId, std::vector<Tweet>> grouped;
  for (const RawTweet& r : records) {
    Tweet t{TweetId(r.id), UserId(r.author), TopicId(r.topic), std::nullopt, false};
    if (r.retweet_of) {
      // Walk to the root original; a chain longer than the record count is a cycle.
      const RawTweet* cur = &r;
      std::size_t hops = 0;
      bool missing = false;
      while (cur->retweet_of) {
        auto it = by_id.find(*cur->retweet_of);
        if (it == by_id.end()) {
          missing = true;
          break;
        }
        cur = &records[it->second];
        if (++hops > records.size()) throw ParseError(r.line, "retweet cycle through " + r.id);
      }
      if (missing || TopicId(cur->topic) != t.topic) {
        t.dangling = true;
        ++report.dangling_retweets;
      } else {
        if (hops > 1) ++report.normalized_chains;
        t.retweet_of = TweetId(cur->id);
      }
    }
    grouped[t.topic].push_back(std::move(t));
  }
  for (auto& [topic, tweets] : grouped) {
    result.corpus.topics.emplace(topic, TopicDataset(topic, std::move(tweets)));
  }
  report.topics = result.corpus.topics.size();
  return result;
}

TweetParse parse_tweets(const std::filesystem::path& path, TweetFormat format) {
  auto in = open_input(path);
  return parse_tweets(in, format);
}

FollowParse parse_follows(std::istream& in, bool has_header) {
  FollowParse result;
  std::string line;
  std::size_t line_no = 0;
  bool skip_header = has_header;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (skip_header) {
      skip_header = false;
      continue;
    }
    if (is_blank(line)) continue;
    auto fields = split_csv(line, line_no);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "expected 'follower,followee'");
    }
    ++result.lines_read;
    if (fields[0] == fields[1]) {
      ++result.self_follows_dropped;
      continue;
    }
    if (!result.edges.insert({UserId(fields[0]), UserId(fields[1])}).second) ++result.duplicates;
  }
  if (in.bad()) throw IoError("read error");
  return result;
}

FollowParse parse_follows(const std::filesystem::path& path, bool has_header) {
  auto in = open_input(path);
  return parse_follows(in, has_header);
}

Corpus attach_follows(const Corpus& corpus, const std::set<FollowEdge>& follows) {
  Corpus out;
  for (const auto& [topic, ds] : corpus.topics) {
    out.topics.emplace(topic, TopicDataset(topic, ds.tweets(), follows));
  }
  return out;
}

void write_tweets(const Corpus& corpus, std::ostream& out, TweetFormat format) {
  if (format == TweetFormat::Csv) out << "id,author,topic,retweet_of\n";
  for (const auto& [topic, ds] : corpus.topics) {
    for (const Tweet& t : ds.tweets()) {
      // Dangling tweets are written as plain originals; the flag is not
      // representable in the interchange formats.
      if (format == TweetFormat::Jsonl) {
        json rec = {{"id", t.id.str()},
                    {"author", t.author.str()},
                    {"topic", topic.str()},
                    {"retweet_of", t.retweet_of ? json(t.retweet_of->str()) : json(nullptr)}};
        out << rec.dump() << '\n';
      } else {
        out << csv_field(t.id.str()) << ',' << csv_field(t.author.str()) << ','
            << csv_field(topic.str()) << ',' << (t.retweet_of ? csv_field(t.retweet_of->str()) : "")
            << '\n';
      }
    }
  }
}

void write_follows(const std::set<FollowEdge>& follows, std::ostream& out) {
  for (const FollowEdge& e : follows) {
    out << csv_field(e.follower.str()) << ',' << csv_field(e.followee.str()) << '\n';
  }
}

namespace {

constexpr const char* kCorpusFormat = "tretoc-corpus v1";

}  // namespace

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  json topics = json::array();
  for (const auto& [topic, ds] : corpus.topics) {
    json tweets = json::array();
    for (const Tweet& t : ds.tweets()) {
      json rec = {{"id", t.id.str()}, {"author", t.author.str()}};
      rec["retweet_of"] = t.retweet_of ? json(t.retweet_of->str()) : json(nullptr);
      if (t.dangling) rec["dangling"] = true;
      tweets.push_back(std::move(rec));
    }
    json follows = json::array();
    for (const FollowEdge& e : ds.follows()) follows.push_back({e.follower.str(), e.followee.str()});
    topics.push_back({{"topic", topic.str()}, {"tweets", std::move(tweets)}, {"follows", std::move(follows)}});
  }
  json doc = {{"format", kCorpusFormat}, {"topics", std::move(topics)}};
  auto out = open_output(path);
  out << doc.dump(1) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

Corpus load_corpus(const std::filesystem::path& path) {
  auto in = open_input(path);
  Corpus corpus;
  try {
    json doc = json::parse(in);
    if (doc.value("format", "") != kCorpusFormat) {
      throw Error(path.string() + ": not a " + std::string(kCorpusFormat) + " file");
    }
    for (const json& entry : doc.at("topics")) {
      TopicId topic(entry.at("topic").get<std::string>());
      std::vector<Tweet> tweets;
      for (const json& rec : entry.at("tweets")) {
        Tweet t{TweetId(rec.at("id").get<std::string>()), UserId(rec.at("author").get<std::string>()),
                topic, std::nullopt, rec.value("dangling", false)};
        const json& rt = rec.at("retweet_of");
        if (!rt.is_null()) t.retweet_of = TweetId(rt.get<std::string>());
        tweets.push_back(std::move(t));
      }
      std::set<FollowEdge> follows;
      for (const json& e : entry.at("follows")) {
        follows.insert({UserId(e.at(0).get<std::string>()), UserId(e.at(1).get<std::string>())});
      }
      if (!corpus.topics.emplace(topic, TopicDataset(topic, std::move(tweets), std::move(follows))).second) {
        throw Error("duplicate topic '" + topic.str() + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(path.string() + ": malformed corpus: " + e.what());
  }
  return corpus;
}

namespace {

constexpr const char* kGraphHeader = "tretoc-graph v1";

void check_token(const std::string& id) {
  if (id.find_first_of(" \t\r\n") != std::string::npos) {
    throw Error("user id '" + id + "' contains whitespace and cannot be written to a graph file");
  }
}

}  // namespace

void write_graph(const TopicGraph& g, std::ostream& out) {
  out << kGraphHeader << '\n';
  for (const auto& [user, role] : g.nodes()) {
    check_token(user.str());
    out << "node " << user.str() << ' ' << to_string(role) << '\n';
  }
  for (const DirectedEdge& e : g.edges()) {
    out << "edge " << e.src.str() << ' ' << e.dst.str() << ' ' << to_string(e.tag) << '\n';
  }
  out << "end\n";
}

void write_graph(const TopicGraph& g, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_graph(g, out);
  if (!out) throw IoError("write failed: " + path.string());
}

TopicGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing graph header");
  strip_cr(line);
  if (line != kGraphHeader) throw ParseError(1, "unsupported graph header '" + line + "'");
  TopicGraph g;
  bool ended = false;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (ended) {
      if (!is_blank(line)) throw ParseError(line_no, "content after end marker");
      continue;
    }
    std::istringstream fields(line);
    std::string kind, a, b, c, extra;
    fields >> kind;
    try {
      if (kind == "node") {
        if (!(fields >> a >> b) || (fields >> extra)) throw ParseError(line_no, "expected 'node <id> <role>'");
        auto role = parse_role(b);
        if (!role) throw ParseError(line_no, "unknown role '" + b + "'");
        if (g.contains(UserId(a))) throw ParseError(line_no, "duplicate node " + a);
        g.add_node(UserId(a), *role);
      } else if (kind == "edge") {
        if (!(fields >> a >> b >> c) || (fields >> extra)) {
          throw ParseError(line_no, "expected 'edge <src> <dst> <tag>'");
        }
        auto tag = parse_edge_tag(c);
        if (!tag) throw ParseError(line_no, "unknown relation tag '" + c + "'");
        if (!g.add_edge(UserId(a), UserId(b), *tag)) throw ParseError(line_no, "duplicate edge");
      } else if (kind == "end") {
        ended = true;
      } else {
        throw ParseError(line_no, "unexpected line '" + line + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!ended) throw ParseError(line_no, "truncated graph file (no end marker)");
  return g;
}

TopicGraph read_graph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graph(in);
}

}  // namespace tretoc
