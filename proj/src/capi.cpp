#include "qsym/qsym.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "qsym/pipeline.hpp"

struct qsym_graph {
  qsym::Graph graph;
};

struct qsym_config {
  qsym::QsymConfig qsym;
  int jobs = 1;
};

struct qsym_result {
  qsym::Verdict verdict;
  std::string json;
  std::string details;
};

struct qsym_report {
  qsym::BatchReport report;
};

namespace {

thread_local std::string last_error;

qsym_status fail(qsym_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps exceptions escaping the core onto status codes.
template <class F>
qsym_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return QSYM_OK;
  } catch (const qsym::GraphFormatError& e) {
    return fail(QSYM_ERR_PARSE, e.what());
  } catch (const qsym::RecordFormatError& e) {
    return fail(QSYM_ERR_PARSE, e.what());
  } catch (const qsym::ResourceCapExceeded& e) {
    return fail(QSYM_ERR_RESOURCE_CAP, e.what());
  } catch (const qsym::DegenerateInput& e) {
    return fail(QSYM_ERR_DEGENERATE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QSYM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    std::string msg = e.what();
    const std::string suffix = ": " + e.code().message();
    if (msg.size() > suffix.size() && msg.ends_with(suffix)) msg.resize(msg.size() - suffix.size());
    return fail(QSYM_ERR_IO, msg);
  } catch (const std::bad_alloc&) {
    return fail(QSYM_ERR_RESOURCE_CAP, "out of memory");
  } catch (const std::exception& e) {
    return fail(QSYM_ERR_INTERNAL, e.what());
  }
}

std::string describe(const qsym::Graph& g, const qsym::Verdict& v, const qsym::QsymConfig& cfg) {
  using namespace qsym;
  std::string out;
  out += "graph6: " + to_graph6(g) + "\n";
  out += "vertices: " + std::to_string(g.n()) + ", edges: " + std::to_string(g.edge_count()) + "\n";
  out += "automorphism group order: " + std::to_string(v.aut_order) + "\n";
  if (v.disjoint_pair) {
    out += "disjoint automorphisms: " + v.disjoint_pair->first.to_cycles() + " and " +
           v.disjoint_pair->second.to_cycles() + "\n";
  } else {
    out += "disjoint automorphisms: none\n";
  }
  const ZeroPattern z = zero_pattern(g, cfg.fulton_power);
  out += "fulton pattern (powers up to " + std::to_string(z.max_power_used) + "):\n" + render_pattern(z);
  if (v.qsym) {
    const QsymResult& q = *v.qsym;
    out += "algebraic check: " + std::string(to_string(q.kind)) + " (" + std::to_string(v.alive_generators) +
           " generators, " + std::to_string(q.commutator_count) + " commutators";
    if (q.engine_used)
      out += ", basis size " + std::to_string(q.basis_size) + " at degree bound " + std::to_string(q.degree_bound) +
             (q.basis_complete ? ", complete" : ", incomplete");
    out += ")\n";
    if (q.witness) {
      out += "witness: " + q.witness->to_string() + "\n";
      out += "normal form: " + q.witness_normal_form->to_string() + "\n";
    }
  }
  out += "verdict: " + std::string(to_string(v.kind)) + "\n";
  return out;
}

qsym_status batch_out(qsym::RunConfig rc, const qsym_config* cfg, qsym_report** out) {
  if (!out) return fail(QSYM_ERR_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  if (cfg) {
    rc.qsym = cfg->qsym;
    rc.jobs = cfg->jobs;
  }
  return guarded([&] { *out = new qsym_report{qsym::run_batch(rc)}; });
}

}  // namespace

extern "C" {

const char* qsym_version(void) { return "1.0.0"; }

const char* qsym_last_error(void) { return last_error.c_str(); }

const char* qsym_status_string(qsym_status status) {
  switch (status) {
    case QSYM_OK:
      return "ok";
    case QSYM_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QSYM_ERR_PARSE:
      return "malformed input";
    case QSYM_ERR_RESOURCE_CAP:
      return "resource cap exceeded";
    case QSYM_ERR_DEGENERATE:
      return "degenerate presentation";
    case QSYM_ERR_IO:
      return "i/o failure";
    case QSYM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void qsym_string_free(char* s) { std::free(s); }

qsym_status qsym_graph_from_graph6(const char* text, qsym_graph** out) {
  if (!text || !out) return fail(QSYM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new qsym_graph{qsym::parse_graph6(text)}; });
}

qsym_status qsym_graph_from_adjacency(const char* text, qsym_graph** out) {
  if (!text || !out) return fail(QSYM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new qsym_graph{qsym::parse_adjacency(text)}; });
}

void qsym_graph_free(qsym_graph* g) { delete g; }

int qsym_graph_vertex_count(const qsym_graph* g) { return g ? g->graph.n() : 0; }

int qsym_graph_is_connected(const qsym_graph* g) { return g && qsym::is_connected(g->graph) ? 1 : 0; }

char* qsym_graph_to_graph6(const qsym_graph* g) { return g ? dup_string(qsym::to_graph6(g->graph)) : nullptr; }

qsym_config* qsym_config_new(void) { return new (std::nothrow) qsym_config{}; }

void qsym_config_free(qsym_config* cfg) { delete cfg; }

qsym_status qsym_config_set_fulton_power(qsym_config* cfg, int power) {
  if (!cfg || power < 0) return fail(QSYM_ERR_INVALID_ARGUMENT, "fulton power must be positive (0 selects n^2)");
  cfg->qsym.fulton_power = power;
  return QSYM_OK;
}

qsym_status qsym_config_set_gb_cap(qsym_config* cfg, int cap) {
  if (!cfg || cap < 1) return fail(QSYM_ERR_INVALID_ARGUMENT, "degree cap must be positive");
  cfg->qsym.gb_cap = cap;
  return QSYM_OK;
}

qsym_status qsym_config_set_fulton_mode(qsym_config* cfg, qsym_fulton_mode mode) {
  if (!cfg || (mode != QSYM_FULTON_DELETE && mode != QSYM_FULTON_RELATIONS))
    return fail(QSYM_ERR_INVALID_ARGUMENT, "unknown fulton mode");
  cfg->qsym.fulton_mode = mode == QSYM_FULTON_DELETE ? qsym::FultonMode::Delete : qsym::FultonMode::Relations;
  return QSYM_OK;
}

qsym_status qsym_config_set_jobs(qsym_config* cfg, int jobs) {
  if (!cfg || jobs < 0) return fail(QSYM_ERR_INVALID_ARGUMENT, "jobs must be non-negative (0 selects all cores)");
  cfg->jobs = jobs;
  return QSYM_OK;
}

qsym_status qsym_config_set_cross_check(qsym_config* cfg, int enabled) {
  if (!cfg) return fail(QSYM_ERR_INVALID_ARGUMENT, "null config");
  cfg->qsym.cross_check = enabled != 0;
  return QSYM_OK;
}

qsym_status qsym_config_set_limits(qsym_config* cfg, size_t max_basis_size, size_t max_total_terms) {
  if (!cfg || max_basis_size == 0 || max_total_terms == 0)
    return fail(QSYM_ERR_INVALID_ARGUMENT, "limits must be positive");
  cfg->qsym.limits.max_basis_size = max_basis_size;
  cfg->qsym.limits.max_total_terms = max_total_terms;
  return QSYM_OK;
}

qsym_status qsym_classify(const qsym_graph* g, const qsym_config* cfg, qsym_result** out) {
  if (!g || !out) return fail(QSYM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  const qsym::QsymConfig qc = cfg ? cfg->qsym : qsym::QsymConfig{};
  return guarded([&] {
    const auto t0 = std::chrono::steady_clock::now();
    qsym::Verdict v = qsym::classify(g->graph, qc);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    auto* r = new qsym_result{std::move(v), {}, {}};
    r->json = qsym::record_to_json(qsym::make_record(g->graph, r->verdict, ms));
    r->details = describe(g->graph, r->verdict, qc);
    *out = r;
  });
}

void qsym_result_free(qsym_result* r) { delete r; }

qsym_verdict qsym_result_verdict(const qsym_result* r) {
  if (!r) return QSYM_UNDECIDED;
  switch (r->verdict.kind) {
    case qsym::VerdictKind::QuantumSymmetric:
      return QSYM_QUANTUM_SYMMETRIC;
    case qsym::VerdictKind::NotQuantumSymmetric:
      return QSYM_NOT_QUANTUM_SYMMETRIC;
    case qsym::VerdictKind::Undecided:
      break;
  }
  return QSYM_UNDECIDED;
}

size_t qsym_result_aut_order(const qsym_result* r) { return r ? r->verdict.aut_order : 0; }

int qsym_result_qsym_output(const qsym_result* r) {
  if (!r || !r->verdict.qsym) return -1;
  switch (r->verdict.qsym->kind) {
    case qsym::QsymResult::Kind::Commutative:
      return 1;
    case qsym::QsymResult::Kind::NotShownCommutative:
      return 0;
    case qsym::QsymResult::Kind::Truncated:
      break;
  }
  return -1;
}

const char* qsym_result_json(const qsym_result* r) { return r ? r->json.c_str() : ""; }

const char* qsym_result_details(const qsym_result* r) { return r ? r->details.c_str() : ""; }

qsym_status qsym_batch_enumerate(int n, const qsym_config* cfg, qsym_report** out) {
  if (n < 1 || n > 8) return fail(QSYM_ERR_INVALID_ARGUMENT, "enumeration supports 1..8 vertices");
  qsym::RunConfig rc;
  rc.input = qsym::InputKind::Enumerate;
  rc.n = n;
  return batch_out(rc, cfg, out);
}

qsym_status qsym_batch_file(const char* path, const qsym_config* cfg, qsym_report** out) {
  if (!path) return fail(QSYM_ERR_INVALID_ARGUMENT, "null path");
  qsym::RunConfig rc;
  rc.input = qsym::InputKind::File;
  rc.input_path = path;
  return batch_out(rc, cfg, out);
}

qsym_status qsym_report_from_ndjson(const char* path, qsym_report** out) {
  if (!path || !out) return fail(QSYM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::ifstream in(path);
  if (!in) return fail(QSYM_ERR_IO, std::string("cannot read ") + path);
  qsym_status st = QSYM_OK;
  try {
    *out = new qsym_report{qsym::report_from_records(qsym::read_ndjson(in))};
  } catch (const std::exception& e) {
    st = fail(QSYM_ERR_PARSE, e.what());
  }
  return st;
}

void qsym_report_free(qsym_report* r) { delete r; }

size_t qsym_report_record_count(const qsym_report* r) { return r ? r->report.records.size() : 0; }

size_t qsym_report_input_error_count(const qsym_report* r) { return r ? r->report.input_errors.size() : 0; }

const char* qsym_report_input_error(const qsym_report* r, size_t i) {
  if (!r || i >= r->report.input_errors.size()) return nullptr;
  return r->report.input_errors[i].c_str();
}

int qsym_report_resource_failure(const qsym_report* r) { return r && r->report.resource_failure ? 1 : 0; }

char* qsym_report_render(const qsym_report* r, qsym_format fmt) {
  if (!r) return nullptr;
  auto f = fmt == QSYM_FORMAT_JSON ? qsym::OutputFormat::Json
           : fmt == QSYM_FORMAT_CSV ? qsym::OutputFormat::Csv
                                    : qsym::OutputFormat::Text;
  return dup_string(qsym::render_table(r->report, f));
}

qsym_status qsym_report_write(const qsym_report* r, const char* prefix, qsym_format fmt) {
  if (!r || !prefix) return fail(QSYM_ERR_INVALID_ARGUMENT, "null argument");
  auto f = fmt == QSYM_FORMAT_JSON ? qsym::OutputFormat::Json
           : fmt == QSYM_FORMAT_CSV ? qsym::OutputFormat::Csv
                                    : qsym::OutputFormat::Text;
  try {
    qsym::write_outputs(r->report, prefix, f);
  } catch (const std::exception& e) {
    return fail(QSYM_ERR_IO, e.what());
  }
  last_error.clear();
  return QSYM_OK;
}

}  // extern "C"
