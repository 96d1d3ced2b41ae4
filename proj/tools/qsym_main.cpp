// Command-line front end. Talks to the library through the C interface only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qsym/qsym.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitResource = 2;

struct Options {
  int fulton_power = 0;
  int gb_cap = 12;
  std::string fulton_mode = "delete";
  int jobs = 1;
  std::string format = "text";
  std::string out;
  bool cross_check = false;
  std::size_t max_basis_size = 200000;
  std::size_t max_total_terms = 50000000;
};

using ConfigPtr = std::unique_ptr<qsym_config, decltype(&qsym_config_free)>;
using ReportPtr = std::unique_ptr<qsym_report, decltype(&qsym_report_free)>;

qsym_format format_of(const std::string& s) {
  if (s == "json") return QSYM_FORMAT_JSON;
  if (s == "csv") return QSYM_FORMAT_CSV;
  return QSYM_FORMAT_TEXT;
}

const char* extension_of(const std::string& s) {
  if (s == "json") return "json";
  if (s == "csv") return "csv";
  return "txt";
}

int exit_code_for(qsym_status st) {
  switch (st) {
    case QSYM_OK:
      return kExitOk;
    case QSYM_ERR_RESOURCE_CAP:
      return kExitResource;
    default:
      return kExitMalformed;
  }
}

int report_failure(qsym_status st) {
  std::cerr << "qsym: " << qsym_status_string(st) << ": " << qsym_last_error() << "\n";
  return exit_code_for(st);
}

ConfigPtr make_config(const Options& o) {
  ConfigPtr cfg(qsym_config_new(), qsym_config_free);
  qsym_config_set_fulton_power(cfg.get(), o.fulton_power);
  qsym_config_set_gb_cap(cfg.get(), o.gb_cap);
  qsym_config_set_fulton_mode(cfg.get(), o.fulton_mode == "relations" ? QSYM_FULTON_RELATIONS : QSYM_FULTON_DELETE);
  qsym_config_set_jobs(cfg.get(), o.jobs);
  qsym_config_set_cross_check(cfg.get(), o.cross_check ? 1 : 0);
  qsym_config_set_limits(cfg.get(), o.max_basis_size, o.max_total_terms);
  return cfg;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << text;
  }
}

int finish_report(const ReportPtr& rep, const Options& o) {
  char* table = qsym_report_render(rep.get(), format_of(o.format));
  std::cout << table;
  qsym_string_free(table);
  if (!o.out.empty()) {
    qsym_status st = qsym_report_write(rep.get(), o.out.c_str(), format_of(o.format));
    if (st != QSYM_OK) return report_failure(st);
    std::cerr << "wrote " << o.out << ".ndjson and " << o.out << ".summary." << extension_of(o.format) << "\n";
  }
  const std::size_t errors = qsym_report_input_error_count(rep.get());
  for (std::size_t i = 0; i < errors; ++i) std::cerr << "qsym: malformed input: " << qsym_report_input_error(rep.get(), i) << "\n";
  if (qsym_report_resource_failure(rep.get())) return kExitResource;
  return errors ? kExitMalformed : kExitOk;
}

void add_engine_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--fulton-power", o.fulton_power, "Highest adjacency power compared (0: n^2)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--gb-cap", o.gb_cap, "Degree cap for Groebner completion")->check(CLI::PositiveNumber);
  cmd->add_option("--fulton-mode", o.fulton_mode, "How forced zeros enter the presentation")
      ->check(CLI::IsMember({"delete", "relations"}));
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out, "Output path (batch, table: prefix for .ndjson and summary files)");
  cmd->add_option("--max-basis-size", o.max_basis_size, "Abort completion beyond this many basis elements")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-terms", o.max_total_terms, "Abort completion beyond this many stored terms")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--cross-check", o.cross_check, "Run the algebraic check even when disjoint automorphisms decide");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether small graphs have quantum symmetries"};
  app.require_subcommand(1);
  Options o;

  std::string graph6, adjacency_path;
  auto* check = app.add_subcommand("check", "Classify one graph");
  check->add_option("graph6,--graph6", graph6, "Graph in graph6 format");
  check->add_option("--adjacency", adjacency_path, "File holding an adjacency matrix");
  add_engine_flags(check, o);

  int n = 0;
  std::string batch_input;
  auto* batch = app.add_subcommand("batch", "Classify a collection of graphs and aggregate by |Aut|");
  auto* n_opt = batch->add_option("--n", n, "Enumerate connected graphs on n vertices")->check(CLI::Range(1, 8));
  auto* in_opt = batch->add_option("--input", batch_input, "File of graph6 lines or adjacency matrices");
  n_opt->excludes(in_opt);
  batch->add_option("--jobs", o.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  add_engine_flags(batch, o);

  std::string records_path;
  auto* table = app.add_subcommand("table", "Re-aggregate stored NDJSON records");
  table->add_option("--input", records_path, "NDJSON records written by batch")->required();
  table->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_option("--out", o.out, "Prefix for rewritten .ndjson and summary files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitMalformed;
  }

  if (*check) {
    qsym_graph* raw = nullptr;
    qsym_status st;
    if (!adjacency_path.empty()) {
      std::string text;
      if (!read_file(adjacency_path, text)) {
        std::cerr << "qsym: cannot read " << adjacency_path << "\n";
        return kExitMalformed;
      }
      st = qsym_graph_from_adjacency(text.c_str(), &raw);
    } else if (!graph6.empty()) {
      st = qsym_graph_from_graph6(graph6.c_str(), &raw);
    } else {
      std::cerr << "qsym: check needs a graph6 string or --adjacency FILE\n";
      return kExitMalformed;
    }
    if (st != QSYM_OK) return report_failure(st);
    std::unique_ptr<qsym_graph, decltype(&qsym_graph_free)> g(raw, qsym_graph_free);
    ConfigPtr cfg = make_config(o);
    qsym_result* res = nullptr;
    st = qsym_classify(g.get(), cfg.get(), &res);
    if (st != QSYM_OK) return report_failure(st);
    std::unique_ptr<qsym_result, decltype(&qsym_result_free)> r(res, qsym_result_free);
    if (o.format == "text") {
      emit(qsym_result_details(r.get()), o.out);
    } else {
      emit(std::string(qsym_result_json(r.get())) + "\n", o.out);
    }
    return kExitOk;
  }

  if (*batch) {
    if (n == 0 && batch_input.empty()) {
      std::cerr << "qsym: batch needs --n or --input\n";
      return kExitMalformed;
    }
    ConfigPtr cfg = make_config(o);
    qsym_report* raw = nullptr;
    qsym_status st = n ? qsym_batch_enumerate(n, cfg.get(), &raw) : qsym_batch_file(batch_input.c_str(), cfg.get(), &raw);
    if (st != QSYM_OK) return report_failure(st);
    ReportPtr rep(raw, qsym_report_free);
    return finish_report(rep, o);
  }

  qsym_report* raw = nullptr;
  qsym_status st = qsym_report_from_ndjson(records_path.c_str(), &raw);
  if (st != QSYM_OK) return report_failure(st);
  ReportPtr rep(raw, qsym_report_free);
  return finish_report(rep, o);
}
