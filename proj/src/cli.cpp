#include "tretoc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "tretoc/ingest.hpp"
#include "tretoc/metrics.hpp"
#include "tretoc/report.hpp"
#include "tretoc/synth.hpp"

namespace tretoc::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string corpus;
  std::string tweets;
  std::string follows;
  bool follows_header = false;
  std::string format;  // json | jsonl | csv; empty infers from extension
  std::string topic;
  std::string method = "both";
  double resolution = 1.0;
  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 0;
  std::size_t synth_topics = 20;
};

TweetFormat tweet_format(const RunConfig& cfg, const std::string& path) {
  if (cfg.format == "csv") return TweetFormat::Csv;
  if (cfg.format == "json" || cfg.format == "jsonl") return TweetFormat::Jsonl;
  return fs::path(path).extension() == ".csv" ? TweetFormat::Csv : TweetFormat::Jsonl;
}

void require_file(const std::string& path) {
  if (!fs::is_regular_file(path)) throw IoError("no such file: " + path);
}

Method parse_method(const std::string& s) {
  if (s == "tretoc") return Method::TreToC;
  if (s == "rbc") return Method::RBC;
  return Method::Both;
}

LouvainConfig louvain_config(const RunConfig& cfg) {
  LouvainConfig lc;
  lc.resolution = cfg.resolution;
  lc.seed = cfg.seed;
  lc.validate();
  return lc;
}

struct Loaded {
  Corpus corpus;
  IngestReport report;
};

Loaded load_inputs(const RunConfig& cfg) {
  Loaded loaded;
  if (!cfg.corpus.empty()) {
    require_file(cfg.corpus);
    loaded.corpus = load_corpus(cfg.corpus);
    loaded.report.topics = loaded.corpus.topics.size();
    for (const auto& [topic, ds] : loaded.corpus.topics) loaded.report.tweets_read += ds.tweets().size();
    return loaded;
  }
  if (cfg.tweets.empty()) throw IoError("either --corpus or --tweets is required");
  require_file(cfg.tweets);
  TweetParse parsed = parse_tweets(fs::path(cfg.tweets), tweet_format(cfg, cfg.tweets));
  loaded.report = parsed.report;
  loaded.corpus = std::move(parsed.corpus);
  if (!cfg.follows.empty()) {
    require_file(cfg.follows);
    FollowParse f = parse_follows(fs::path(cfg.follows), cfg.follows_header);
    loaded.report.follows_read = f.lines_read;
    loaded.report.self_follows_dropped = f.self_follows_dropped;
    loaded.report.duplicate_follows = f.duplicates;
    loaded.corpus = attach_follows(loaded.corpus, f.edges);
  }
  return loaded;
}

fs::path output_dir(const RunConfig& cfg) {
  if (cfg.out.empty()) throw IoError("--out is required");
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) throw IoError("cannot create " + cfg.out + ": " + ec.message());
  return cfg.out;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

std::string file_stem(const TopicId& topic) {
  std::string s = topic.str();
  for (char& c : s) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    if (!ok) c = '_';
  }
  return s;
}

void write_method(const fs::path& dir, const TopicId& topic, std::string_view method, const MethodResult& r) {
  const std::string base = file_stem(topic) + "." + std::string(method);
  write_graph(r.graph, dir / (base + ".graph"));
  auto part = open_out(dir / (base + ".partition.csv"));
  write_partition_csv(undirected_projection(r.graph), best_partition(r.dendrogram), part);
  nlohmann::json doc = metrics_to_json(topic, method, r.metrics);
  doc["levels"] = r.dendrogram.levels();
  auto js = open_out(dir / (base + ".metrics.json"));
  js << dump_fixed(doc) << '\n';
}

int cmd_ingest(const RunConfig& cfg, std::ostream& out) {
  Loaded loaded = load_inputs(cfg);
  if (cfg.out.empty()) throw IoError("--out is required");
  save_corpus(loaded.corpus, cfg.out);
  out << dump_fixed(ingest_report_to_json(loaded.report)) << '\n';
  return 0;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  Loaded loaded = load_inputs(cfg);
  if (cfg.topic.empty()) throw IoError("--topic is required");
  const TopicId topic(cfg.topic);
  auto it = loaded.corpus.topics.find(topic);
  if (it == loaded.corpus.topics.end()) throw Error("unknown topic '" + topic.str() + "'");
  const TopicReport report = topic_report(it->second, louvain_config(cfg), parse_method(cfg.method));
  const fs::path dir = output_dir(cfg);
  nlohmann::json summary = nlohmann::json::object();
  if (report.tretoc) {
    write_method(dir, topic, "tretoc", *report.tretoc);
    summary["tretoc"] = metrics_to_json(topic, "tretoc", report.tretoc->metrics);
    summary["tretoc"].erase("communities");
  }
  if (report.rbc) {
    write_method(dir, topic, "rbc", *report.rbc);
    summary["rbc"] = metrics_to_json(topic, "rbc", report.rbc->metrics);
    summary["rbc"].erase("communities");
  }
  out << dump_fixed(summary) << '\n';
  return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_inputs(cfg);
  const LouvainConfig lc = louvain_config(cfg);
  const Method method = parse_method(cfg.method);
  std::vector<const TopicDataset*> topics;
  for (const auto& [topic, ds] : loaded.corpus.topics) topics.push_back(&ds);

  std::vector<std::optional<TopicReport>> reports(topics.size());
  std::vector<std::string> failures(topics.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < topics.size(); i = next++) {
      try {
        reports[i] = topic_report(*topics[i], lc, method);
      } catch (const Error& e) {
        failures[i] = e.what();
      }
    }
  };
  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(topics.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  std::vector<CompareRow> rows;
  std::vector<std::string> skipped;
  for (std::size_t i = 0; i < topics.size(); ++i) {
    if (!reports[i]) {
      err << "warning: skipping topic '" << topics[i]->topic().str() << "': " << failures[i] << '\n';
      skipped.push_back(topics[i]->topic().str());
      continue;
    }
    if (reports[i]->tretoc) rows.push_back({reports[i]->topic, "tretoc", reports[i]->tretoc->metrics});
    if (reports[i]->rbc) rows.push_back({reports[i]->topic, "rbc", reports[i]->rbc->metrics});
  }
  const fs::path dir = output_dir(cfg);
  auto csv = open_out(dir / "compare.csv");
  write_compare_csv(rows, csv);
  const std::string summary = dump_fixed(compare_summary(rows, skipped));
  auto js = open_out(dir / "summary.json");
  js << summary << '\n';
  out << summary << '\n';
  return 0;
}

int cmd_overlap(const RunConfig& cfg, std::ostream& out) {
  Loaded loaded = load_inputs(cfg);
  const auto rows = topic_overlaps(loaded.corpus);
  const fs::path dir = output_dir(cfg);
  auto csv = open_out(dir / "overlap.csv");
  write_overlap_csv(rows, csv);
  const std::string summary = dump_fixed(overlap_summary(rows, loaded.corpus.topics.size()));
  auto js = open_out(dir / "overlap_summary.json");
  js << summary << '\n';
  out << summary << '\n';
  return 0;
}

int cmd_synth(const RunConfig& cfg, const SynthConfig& synth, std::ostream& out) {
  SynthConfig sc = synth;
  sc.seed = cfg.seed;
  const Corpus corpus = generate_corpus(sc, cfg.synth_topics);
  const fs::path dir = output_dir(cfg);
  const TweetFormat fmt = cfg.format == "csv" ? TweetFormat::Csv : TweetFormat::Jsonl;
  const fs::path tweets_path = dir / (fmt == TweetFormat::Csv ? "tweets.csv" : "tweets.jsonl");
  auto tw = open_out(tweets_path);
  write_tweets(corpus, tw, fmt);
  std::set<FollowEdge> follows;
  for (const auto& [topic, ds] : corpus.topics) follows.insert(ds.follows().begin(), ds.follows().end());
  auto fo = open_out(dir / "follows.csv");
  write_follows(follows, fo);
  out << dump_fixed({{"topics", corpus.topics.size()},
                     {"tweets", tweets_path.string()},
                     {"follows", (dir / "follows.csv").string()},
                     {"follow_edges", follows.size()}})
      << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trending-topic community detection (TreToC and retweet-only baseline)", "tretoc"};
  app.require_subcommand(1);
  RunConfig cfg;
  SynthConfig synth;

  auto add_input = [&cfg](CLI::App* sub) {
    sub->add_option("--corpus", cfg.corpus, "Corpus file written by 'ingest'")->envname("TRETOC_CORPUS");
    sub->add_option("--tweets", cfg.tweets, "Tweet file (JSONL or CSV)")->envname("TRETOC_TWEETS");
    sub->add_option("--follows", cfg.follows, "Follow pairs CSV (follower,followee)")->envname("TRETOC_FOLLOWS");
    sub->add_flag("--follows-header", cfg.follows_header, "Follow file has a header row");
    sub->add_option("--format", cfg.format, "Tweet file format")
        ->check(CLI::IsMember({"json", "jsonl", "csv"}))
        ->envname("TRETOC_FORMAT");
  };
  auto add_louvain = [&cfg](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "Graph construction")
        ->check(CLI::IsMember({"tretoc", "rbc", "both"}))
        ->envname("TRETOC_METHOD");
    sub->add_option("--resolution", cfg.resolution, "Modularity resolution")
        ->check(CLI::PositiveNumber)
        ->envname("TRETOC_RESOLUTION");
    sub->add_option("--seed", cfg.seed, "Louvain node-order seed")->envname("TRETOC_SEED");
  };
  auto add_out = [&cfg](CLI::App* sub, const char* help) {
    sub->add_option("--out", cfg.out, help)->envname("TRETOC_OUT");
  };

  CLI::App* ingest = app.add_subcommand("ingest", "Validate input files and persist a corpus");
  add_input(ingest);
  add_out(ingest, "Corpus file to write");

  CLI::App* analyze = app.add_subcommand("analyze", "Graphs, communities and metrics for one topic");
  add_input(analyze);
  add_louvain(analyze);
  analyze->add_option("--topic", cfg.topic, "Topic label")->envname("TRETOC_TOPIC");
  add_out(analyze, "Output directory");

  CLI::App* compare = app.add_subcommand("compare", "Per-topic metrics for every topic plus averages");
  add_input(compare);
  add_louvain(compare);
  compare->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->envname("TRETOC_WORKERS");
  add_out(compare, "Output directory");

  CLI::App* overlap = app.add_subcommand("overlap", "Jaccard overlap of users between topics");
  add_input(overlap);
  add_out(overlap, "Output directory");

  CLI::App* gen = app.add_subcommand("synth", "Write a synthetic corpus in the ingestion formats");
  gen->add_option("--topics", cfg.synth_topics, "Number of topics");
  gen->add_option("--seed", cfg.seed, "Generator seed")->envname("TRETOC_SEED");
  gen->add_option("--format", cfg.format, "Tweet file format")->check(CLI::IsMember({"json", "jsonl", "csv"}));
  gen->add_option("--communities", synth.n_communities, "Planted communities per topic");
  gen->add_option("--creators", synth.n_creators, "Creators per planted community");
  gen->add_option("--distributors", synth.n_distributors, "Distributors per planted community");
  gen->add_option("--p-retweet-in", synth.p_retweet_in, "P(distributor retweets a same-community original)");
  gen->add_option("--p-retweet-cross", synth.p_retweet_cross, "P(distributor retweets an original from another community)");
  gen->add_option("--p-follow-cc", synth.p_follow_cc, "P(creator follows a same-community creator)");
  gen->add_option("--p-follow-dd", synth.p_follow_dd, "P(distributor follows a same-community distributor)");
  add_out(gen, "Output directory");

  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (auto it = args.rbegin(); it != args.rend(); ++it) argv.push_back(*it);
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(cfg, out);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (compare->parsed()) return cmd_compare(cfg, out, err);
    if (overlap->parsed()) return cmd_overlap(cfg, out);
    if (gen->parsed()) return cmd_synth(cfg, synth, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tretoc::cli
