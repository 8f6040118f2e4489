// report.hpp
// Report serialisation: per-topic JSON, partition CSV, corpus comparison CSV
// and summary, topic-overlap CSV. Floating-point values are always written
// with six fixed decimals and JSON keys in sorted order, so reports diff
// cleanly between runs.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "tretoc/ingest.hpp"
#include "tretoc/metrics.hpp"

namespace tretoc {

// Serialises `value` with sorted keys, floats as %.6f and NaN/inf as null.
std::string dump_fixed(const nlohmann::json& value, int indent = 2);

std::string_view method_name(Method m);  // "tretoc", "rbc", "both"

nlohmann::json metrics_to_json(const TopicId& topic, std::string_view method, const TopicMetrics& m);
nlohmann::json ingest_report_to_json(const IngestReport& r);

// `node,community` rows in graph node order.
void write_partition_csv(const UndirectedGraph& g, const Partition& p, std::ostream& out);

struct CompareRow {
  TopicId topic;
  std::string method;
  TopicMetrics metrics;
};

void write_compare_csv(const std::vector<CompareRow>& rows, std::ostream& out);
// Per-method arithmetic means of every CSV metric column.
nlohmann::json compare_summary(const std::vector<CompareRow>& rows,
                               const std::vector<std::string>& skipped_topics);

struct OverlapRecord {
  TopicId a;
  TopicId b;
  std::size_t shared = 0;
  double jaccard = 0.0;
};

// Topic users are the creators and distributors of each topic. Only pairs
// sharing at least one user are returned, ordered by (a, b).
std::vector<OverlapRecord> topic_overlaps(const Corpus& corpus);
void write_overlap_csv(const std::vector<OverlapRecord>& rows, std::ostream& out);
nlohmann::json overlap_summary(const std::vector<OverlapRecord>& rows, std::size_t topics);

}  // namespace tretoc
