#include "qsym/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace qsym {
namespace {

using nlohmann::json;

VerdictKind verdict_from_string(const std::string& s) {
  if (s == "quantum_symmetric") return VerdictKind::QuantumSymmetric;
  if (s == "not_quantum_symmetric") return VerdictKind::NotQuantumSymmetric;
  if (s == "undecided") return VerdictKind::Undecided;
  throw std::runtime_error("unknown verdict '" + s + "'");
}

json record_json(const GraphRecord& r) {
  json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["aut_order"] = r.aut_order;
  j["disjoint_pair"] = r.disjoint_pair ? json(*r.disjoint_pair) : json(nullptr);
  j["qsym_output"] = r.qsym_output ? json(*r.qsym_output) : json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["gb_degree_bound"] = r.gb_degree_bound;
  j["gb_size"] = r.gb_size;
  j["wall_time_ms"] = r.wall_time_ms;
  if (r.error) j["error"] = *r.error;
  return j;
}

GraphRecord record_of(const json& j) {
  GraphRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.aut_order = j.at("aut_order").get<std::size_t>();
  if (!j.at("disjoint_pair").is_null()) r.disjoint_pair = j.at("disjoint_pair").get<std::vector<std::string>>();
  if (!j.at("qsym_output").is_null()) r.qsym_output = j.at("qsym_output").get<int>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.gb_degree_bound = j.at("gb_degree_bound").get<int>();
  r.gb_size = j.at("gb_size").get<std::size_t>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

json row_json(const AggregateRow& row) {
  return json{{"order", row.order}, {"total", row.total}, {"qsym", row.qsym_count}, {"undecided", row.undecided_count}};
}

AggregateRow totals_of(const std::vector<AggregateRow>& rows) {
  AggregateRow t;
  for (const auto& r : rows) {
    t.total += r.total;
    t.qsym_count += r.qsym_count;
    t.undecided_count += r.undecided_count;
  }
  return t;
}

bool is_adjacency_line(const std::string& line) {
  bool any = false;
  for (char ch : line) {
    if (ch == '0' || ch == '1') {
      any = true;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      return false;
    }
  }
  return any;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::ios_base::failure("failed writing " + path);
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

GraphRecord make_record(const Graph& g, const Verdict& v, double wall_time_ms) {
  GraphRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.n();
  r.aut_order = v.aut_order;
  if (v.disjoint_pair)
    r.disjoint_pair = std::vector<std::string>{v.disjoint_pair->first.to_cycles(), v.disjoint_pair->second.to_cycles()};
  if (v.qsym) {
    switch (v.qsym->kind) {
      case QsymResult::Kind::Commutative:
        r.qsym_output = 1;
        break;
      case QsymResult::Kind::NotShownCommutative:
        r.qsym_output = 0;
        break;
      case QsymResult::Kind::Truncated:
        break;
    }
    r.gb_degree_bound = v.qsym->degree_bound;
    r.gb_size = v.qsym->basis_size;
  }
  r.verdict = v.kind;
  r.wall_time_ms = wall_time_ms;
  return r;
}

GraphRecord classify_record(const Graph& g, const QsymConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  try {
    Verdict v = classify(g, cfg);
    return make_record(g, v, elapsed());
  } catch (const ResourceCapExceeded& e) {
    GraphRecord r;
    r.graph6 = to_graph6(g);
    r.n = g.n();
    r.aut_order = group_order(automorphism_group(g));
    r.verdict = VerdictKind::Undecided;
    r.error = std::string("resource cap exceeded: ") + e.what();
    r.wall_time_ms = elapsed();
    return r;
  }
}

std::vector<AggregateRow> aggregate(const std::vector<GraphRecord>& records) {
  std::map<std::size_t, AggregateRow, std::greater<>> by_order;
  for (const auto& r : records) {
    AggregateRow& row = by_order[r.aut_order];
    row.order = r.aut_order;
    ++row.total;
    if (r.verdict == VerdictKind::QuantumSymmetric) ++row.qsym_count;
    if (r.verdict == VerdictKind::Undecided) ++row.undecided_count;
  }
  std::vector<AggregateRow> rows;
  for (auto& [order, row] : by_order) rows.push_back(row);
  return rows;
}

std::vector<Graph> read_graphs(std::istream& in, std::vector<std::string>& errors) {
  std::vector<Graph> graphs;
  std::string line, block;
  int lineno = 0, block_start = 0;
  auto flush_block = [&] {
    if (block.empty()) return;
    try {
      graphs.push_back(parse_adjacency(block));
    } catch (const GraphFormatError& e) {
      errors.push_back("line " + std::to_string(block_start) + ": " + e.what());
    }
    block.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || line.front() == '#') {
      flush_block();
      continue;
    }
    if (is_adjacency_line(line)) {
      if (block.empty()) block_start = lineno;
      block += line + "\n";
      continue;
    }
    flush_block();
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const GraphFormatError& e) {
      errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  flush_block();
  return graphs;
}

std::vector<GraphRecord> classify_all(const std::vector<Graph>& graphs, const QsymConfig& cfg, int jobs) {
  std::vector<GraphRecord> out(graphs.size());
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        out[i] = classify_record(graphs[i], cfg);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

BatchReport report_from_records(std::vector<GraphRecord> records) {
  BatchReport r;
  r.records = std::move(records);
  r.rows = aggregate(r.records);
  r.resource_failure = std::any_of(r.records.begin(), r.records.end(), [](const GraphRecord& g) { return g.error.has_value(); });
  return r;
}

BatchReport run_batch(const RunConfig& cfg) {
  if (cfg.jobs < 0) throw std::invalid_argument("jobs must be non-negative");
  if (cfg.qsym.gb_cap <= 0 || cfg.qsym.fulton_power < 0) throw std::invalid_argument("caps must be positive");
  std::vector<Graph> graphs;
  std::vector<std::string> errors;
  std::size_t skipped = 0;
  if (cfg.input == InputKind::Enumerate) {
    for (const Graph& g : enumerate_graphs(cfg.n)) {
      if (is_connected(g)) {
        graphs.push_back(g);
      } else {
        ++skipped;
      }
    }
  } else {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::ios_base::failure("cannot read " + cfg.input_path);
    graphs = read_graphs(in, errors);
  }
  BatchReport r = report_from_records(classify_all(graphs, cfg.qsym, cfg.jobs));
  r.input_errors = std::move(errors);
  r.skipped_disconnected = skipped;
  return r;
}

std::string record_to_json(const GraphRecord& r) { return record_json(r).dump(); }

GraphRecord record_from_json(const std::string& line) { return record_of(json::parse(line)); }

std::vector<GraphRecord> read_ndjson(std::istream& in) {
  std::vector<GraphRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    try {
      out.push_back(record_from_json(line));
    } catch (const std::exception& e) {
      throw RecordFormatError("record line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string render_table(const BatchReport& r, OutputFormat fmt) {
  const AggregateRow t = totals_of(r.rows);
  switch (fmt) {
    case OutputFormat::Json: {
      json j;
      j["rows"] = json::array();
      for (const auto& row : r.rows) j["rows"].push_back(row_json(row));
      j["totals"] = {{"total", t.total}, {"qsym", t.qsym_count}, {"undecided", t.undecided_count}};
      j["records"] = json::array();
      for (const auto& rec : r.records) j["records"].push_back(record_json(rec));
      j["input_errors"] = r.input_errors;
      j["skipped_disconnected"] = r.skipped_disconnected;
      j["resource_failure"] = r.resource_failure;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "order,total,qsym,undecided\n";
      for (const auto& row : r.rows)
        out += std::to_string(row.order) + "," + std::to_string(row.total) + "," + std::to_string(row.qsym_count) +
               "," + std::to_string(row.undecided_count) + "\n";
      out += "total," + std::to_string(t.total) + "," + std::to_string(t.qsym_count) + "," +
             std::to_string(t.undecided_count) + "\n";
      return out;
    }
    case OutputFormat::Text:
      break;
  }
  char buf[96];
  std::string out;
  std::snprintf(buf, sizeof buf, "%8s %8s %8s %10s\n", "|Aut|", "total", "qsym", "undecided");
  out += buf;
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%8zu %8zu %8zu %10zu\n", row.order, row.total, row.qsym_count, row.undecided_count);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%8s %8zu %8zu %10zu\n", "total", t.total, t.qsym_count, t.undecided_count);
  out += buf;
  return out;
}

BatchReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  BatchReport r;
  for (const auto& row : j.at("rows"))
    r.rows.push_back({row.at("order").get<std::size_t>(), row.at("total").get<std::size_t>(),
                      row.at("qsym").get<std::size_t>(), row.at("undecided").get<std::size_t>()});
  for (const auto& rec : j.at("records")) r.records.push_back(record_of(rec));
  r.input_errors = j.at("input_errors").get<std::vector<std::string>>();
  r.skipped_disconnected = j.at("skipped_disconnected").get<std::size_t>();
  r.resource_failure = j.at("resource_failure").get<bool>();
  return r;
}

void write_outputs(const BatchReport& r, const std::string& prefix, OutputFormat fmt) {
  std::string nd;
  for (const auto& rec : r.records) nd += record_to_json(rec) + "\n";
  write_file(prefix + ".ndjson", nd);
  const char* ext = fmt == OutputFormat::Json ? "json" : fmt == OutputFormat::Csv ? "csv" : "txt";
  write_file(prefix + ".summary." + ext, render_table(r, fmt));
}

}  // namespace qsym
