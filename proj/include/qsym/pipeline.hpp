#pragma once

// Batch classification, aggregation by automorphism-group order and
// persistence of per-graph records.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/qsym.hpp"

namespace qsym {

enum class InputKind { Enumerate, File };
enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& s);

// A stored record line that does not follow the NDJSON schema.
class RecordFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  InputKind input = InputKind::Enumerate;
  int n = 0;
  std::string input_path;
  QsymConfig qsym{};
  int jobs = 1;
  OutputFormat format = OutputFormat::Text;
  std::string out_path;  // prefix; empty for no persistence
};

struct GraphRecord {
  std::string graph6;
  int n = 0;
  std::size_t aut_order = 0;
  std::optional<std::vector<std::string>> disjoint_pair;  // cycle notation
  std::optional<int> qsym_output;                         // 1 commutative, 0 not
  VerdictKind verdict = VerdictKind::Undecided;
  int gb_degree_bound = 0;
  std::size_t gb_size = 0;
  double wall_time_ms = 0;
  std::optional<std::string> error;

  friend bool operator==(const GraphRecord&, const GraphRecord&) = default;
};

struct AggregateRow {
  std::size_t order = 0;
  std::size_t total = 0;
  std::size_t qsym_count = 0;
  std::size_t undecided_count = 0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct BatchReport {
  std::vector<GraphRecord> records;
  std::vector<AggregateRow> rows;  // descending order
  std::vector<std::string> input_errors;
  std::size_t skipped_disconnected = 0;
  bool resource_failure = false;

  friend bool operator==(const BatchReport&, const BatchReport&) = default;
};

GraphRecord make_record(const Graph& g, const Verdict& v, double wall_time_ms);
GraphRecord classify_record(const Graph& g, const QsymConfig& cfg);

std::vector<AggregateRow> aggregate(const std::vector<GraphRecord>& records);

// Graphs from a text source: one graph6 string per line, or adjacency
// matrices separated by blank lines. '#' starts a comment line. Malformed
// entries are reported in `errors` and skipped.
std::vector<Graph> read_graphs(std::istream& in, std::vector<std::string>& errors);

// Classifies graphs in order with `jobs` workers; results are in input order.
std::vector<GraphRecord> classify_all(const std::vector<Graph>& graphs, const QsymConfig& cfg, int jobs);

BatchReport run_batch(const RunConfig& cfg);
BatchReport report_from_records(std::vector<GraphRecord> records);

std::string record_to_json(const GraphRecord& r);
GraphRecord record_from_json(const std::string& line);
std::vector<GraphRecord> read_ndjson(std::istream& in);

std::string render_table(const BatchReport& r, OutputFormat fmt);
BatchReport report_from_json(const std::string& text);

// Writes <prefix>.ndjson and <prefix>.summary.{txt,json,csv}.
void write_outputs(const BatchReport& r, const std::string& prefix, OutputFormat fmt);

}  // namespace qsym
