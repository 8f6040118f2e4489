#include "tretoc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace tretoc {

using nlohmann::json;

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void dump_into(const json& v, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump_into(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        dump_into(v[i], indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? fixed6(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

struct Column {
  const char* name;
  double (*get)(const TopicMetrics&);
};

const std::vector<Column>& metric_columns() {
  static const std::vector<Column> columns = {
      {"nodes", [](const TopicMetrics& m) { return static_cast<double>(m.nodes); }},
      {"edges", [](const TopicMetrics& m) { return static_cast<double>(m.edges); }},
      {"n_communities", [](const TopicMetrics& m) { return static_cast<double>(m.n_communities); }},
      {"disconnected_ratio", [](const TopicMetrics& m) { return m.disconnected_ratio; }},
      {"modularity", [](const TopicMetrics& m) { return m.modularity; }},
      {"communities_nodes_ratio", [](const TopicMetrics& m) { return m.communities_nodes_ratio; }},
      {"density", [](const TopicMetrics& m) { return m.density; }},
      {"pct_creators", [](const TopicMetrics& m) { return m.mean_pct_creators(); }},
      {"pct_distributors", [](const TopicMetrics& m) { return m.mean_pct_distributors(); }},
      {"clustering", [](const TopicMetrics& m) { return m.mean_clustering(); }},
  };
  return columns;
}

}  // namespace

std::string dump_fixed(const json& value, int indent) {
  std::string out;
  dump_into(value, indent, 0, out);
  return out;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::TreToC: return "tretoc";
    case Method::RBC: return "rbc";
    case Method::Both: return "both";
  }
  return "?";
}

json metrics_to_json(const TopicId& topic, std::string_view method, const TopicMetrics& m) {
  json communities = json::array();
  for (const CommunityComposition& c : m.per_community) {
    communities.push_back({{"community", c.community},
                           {"size", c.size},
                           {"pct_creators", c.pct_creators},
                           {"pct_distributors", c.pct_distributors},
                           {"clustering_coefficient", c.clustering_coefficient}});
  }
  return {{"topic", topic.str()},
          {"method", std::string(method)},
          {"nodes", m.nodes},
          {"edges", m.edges},
          {"n_communities", m.n_communities},
          {"disconnected_ratio", m.disconnected_ratio},
          {"modularity", m.modularity},
          {"communities_nodes_ratio", m.communities_nodes_ratio},
          {"density", m.density},
          {"mean_pct_creators", m.mean_pct_creators()},
          {"mean_pct_distributors", m.mean_pct_distributors()},
          {"mean_clustering", m.mean_clustering()},
          {"communities", std::move(communities)}};
}

json ingest_report_to_json(const IngestReport& r) {
  return {{"tweets_read", r.tweets_read},
          {"dangling_retweets", r.dangling_retweets},
          {"duplicate_ids", r.duplicate_ids},
          {"normalized_chains", r.normalized_chains},
          {"follows_read", r.follows_read},
          {"self_follows_dropped", r.self_follows_dropped},
          {"duplicate_follows", r.duplicate_follows},
          {"topics", r.topics}};
}

void write_partition_csv(const UndirectedGraph& g, const Partition& p, std::ostream& out) {
  out << "node,community\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) out << csv_text(g.nodes()[v].str()) << ',' << p[v] << '\n';
}

void write_compare_csv(const std::vector<CompareRow>& rows, std::ostream& out) {
  out << "topic,method";
  for (const Column& c : metric_columns()) out << ',' << c.name;
  out << '\n';
  for (const CompareRow& r : rows) {
    out << csv_text(r.topic.str()) << ',' << r.method;
    for (const Column& c : metric_columns()) {
      const double v = c.get(r.metrics);
      if (c.name == std::string_view("nodes") || c.name == std::string_view("edges") ||
          c.name == std::string_view("n_communities")) {
        out << ',' << static_cast<std::size_t>(v);
      } else {
        out << ',' << fixed6(v);
      }
    }
    out << '\n';
  }
}

json compare_summary(const std::vector<CompareRow>& rows, const std::vector<std::string>& skipped_topics) {
  std::map<std::string, std::vector<const CompareRow*>> by_method;
  for (const CompareRow& r : rows) by_method[r.method].push_back(&r);
  json methods = json::object();
  for (const auto& [method, list] : by_method) {
    json means = json::object();
    for (const Column& c : metric_columns()) {
      double sum = 0.0;
      for (const CompareRow* r : list) sum += c.get(r->metrics);
      means[c.name] = sum / static_cast<double>(list.size());
    }
    means["topics"] = list.size();
    methods[method] = std::move(means);
  }
  return {{"methods", std::move(methods)}, {"skipped_topics", skipped_topics}};
}

std::vector<OverlapRecord> topic_overlaps(const Corpus& corpus) {
  std::vector<std::pair<TopicId, std::set<UserId>>> users;
  for (const auto& [topic, ds] : corpus.topics) {
    RoleAssignment ra = assign_roles(ds);
    std::set<UserId> all = std::move(ra.creators);
    all.insert(ra.distributors.begin(), ra.distributors.end());
    users.emplace_back(topic, std::move(all));
  }
  std::vector<OverlapRecord> out;
  for (std::size_t i = 0; i < users.size(); ++i) {
    for (std::size_t j = i + 1; j < users.size(); ++j) {
      const auto& a = users[i].second;
      const auto& b = users[j].second;
      if (a.empty() && b.empty()) continue;
      const double jac = jaccard_overlap(a, b);
      if (jac == 0.0) continue;
      std::size_t shared = 0;
      for (const UserId& u : a) shared += b.contains(u) ? 1 : 0;
      out.push_back({users[i].first, users[j].first, shared, jac});
    }
  }
  return out;
}

void write_overlap_csv(const std::vector<OverlapRecord>& rows, std::ostream& out) {
  out << "topic_a,topic_b,shared_users,jaccard\n";
  for (const OverlapRecord& r : rows) {
    out << csv_text(r.a.str()) << ',' << csv_text(r.b.str()) << ',' << r.shared << ',' << fixed6(r.jaccard)
        << '\n';
  }
}

json overlap_summary(const std::vector<OverlapRecord>& rows, std::size_t topics) {
  json s = {{"topics", topics}, {"overlapping_pairs", rows.size()}};
  if (rows.empty()) {
    s["min"] = nullptr;
    s["mean"] = nullptr;
    s["max"] = nullptr;
    return s;
  }
  double lo = rows.front().jaccard, hi = lo, sum = 0.0;
  for (const OverlapRecord& r : rows) {
    lo = std::min(lo, r.jaccard);
    hi = std::max(hi, r.jaccard);
    sum += r.jaccard;
  }
  s["min"] = lo;
  s["mean"] = sum / static_cast<double>(rows.size());
  s["max"] = hi;
  return s;
}

}  // namespace tretoc
