/*
 * C interface to the quantum-symmetry classifier.
 *
 * All objects are opaque handles created and released through this API.
 * Functions returning qsym_status report failures by code; the message of
 * the most recent failure on the calling thread is available from
 * qsym_last_error(). Strings returned as `char*` are owned by the caller and
 * released with qsym_string_free(); `const char*` results are owned by the
 * handle they came from.
 */
#ifndef QSYM_QSYM_H
#define QSYM_QSYM_H

#include <stddef.h>

#if defined(_WIN32)
#define QSYM_API __declspec(dllexport)
#else
#define QSYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsym_status {
  QSYM_OK = 0,
  QSYM_ERR_INVALID_ARGUMENT = 1,
  QSYM_ERR_PARSE = 2,
  QSYM_ERR_RESOURCE_CAP = 3,
  QSYM_ERR_DEGENERATE = 4,
  QSYM_ERR_IO = 5,
  QSYM_ERR_INTERNAL = 6
} qsym_status;

typedef enum qsym_verdict {
  QSYM_QUANTUM_SYMMETRIC = 0,
  QSYM_NOT_QUANTUM_SYMMETRIC = 1,
  QSYM_UNDECIDED = 2
} qsym_verdict;

typedef enum qsym_fulton_mode { QSYM_FULTON_DELETE = 0, QSYM_FULTON_RELATIONS = 1 } qsym_fulton_mode;

typedef enum qsym_format { QSYM_FORMAT_TEXT = 0, QSYM_FORMAT_JSON = 1, QSYM_FORMAT_CSV = 2 } qsym_format;

typedef struct qsym_graph qsym_graph;
typedef struct qsym_config qsym_config;
typedef struct qsym_result qsym_result;
typedef struct qsym_report qsym_report;

QSYM_API const char* qsym_version(void);
QSYM_API const char* qsym_last_error(void);
QSYM_API const char* qsym_status_string(qsym_status status);
QSYM_API void qsym_string_free(char* s);

/* Graphs */
QSYM_API qsym_status qsym_graph_from_graph6(const char* text, qsym_graph** out);
QSYM_API qsym_status qsym_graph_from_adjacency(const char* text, qsym_graph** out);
QSYM_API void qsym_graph_free(qsym_graph* g);
QSYM_API int qsym_graph_vertex_count(const qsym_graph* g);
QSYM_API int qsym_graph_is_connected(const qsym_graph* g);
QSYM_API char* qsym_graph_to_graph6(const qsym_graph* g);

/* Configuration; defaults: Fulton power n^2, degree cap 12, delete mode, 1 job. */
QSYM_API qsym_config* qsym_config_new(void);
QSYM_API void qsym_config_free(qsym_config* cfg);
QSYM_API qsym_status qsym_config_set_fulton_power(qsym_config* cfg, int power);
QSYM_API qsym_status qsym_config_set_gb_cap(qsym_config* cfg, int cap);
QSYM_API qsym_status qsym_config_set_fulton_mode(qsym_config* cfg, qsym_fulton_mode mode);
QSYM_API qsym_status qsym_config_set_jobs(qsym_config* cfg, int jobs);
QSYM_API qsym_status qsym_config_set_cross_check(qsym_config* cfg, int enabled);
QSYM_API qsym_status qsym_config_set_limits(qsym_config* cfg, size_t max_basis_size, size_t max_total_terms);

/* Single graph */
QSYM_API qsym_status qsym_classify(const qsym_graph* g, const qsym_config* cfg, qsym_result** out);
QSYM_API void qsym_result_free(qsym_result* r);
QSYM_API qsym_verdict qsym_result_verdict(const qsym_result* r);
QSYM_API size_t qsym_result_aut_order(const qsym_result* r);
/* 1 when the algebra was shown commutative, 0 when shown not to be, -1 if not run or truncated. */
QSYM_API int qsym_result_qsym_output(const qsym_result* r);
/* One-line JSON record. */
QSYM_API const char* qsym_result_json(const qsym_result* r);
/* Multi-line human-readable report with the evidence. */
QSYM_API const char* qsym_result_details(const qsym_result* r);

/* Batches */
QSYM_API qsym_status qsym_batch_enumerate(int n, const qsym_config* cfg, qsym_report** out);
QSYM_API qsym_status qsym_batch_file(const char* path, const qsym_config* cfg, qsym_report** out);
QSYM_API qsym_status qsym_report_from_ndjson(const char* path, qsym_report** out);
QSYM_API void qsym_report_free(qsym_report* r);
QSYM_API size_t qsym_report_record_count(const qsym_report* r);
QSYM_API size_t qsym_report_input_error_count(const qsym_report* r);
QSYM_API const char* qsym_report_input_error(const qsym_report* r, size_t i);
QSYM_API int qsym_report_resource_failure(const qsym_report* r);
QSYM_API char* qsym_report_render(const qsym_report* r, qsym_format fmt);
/* Writes <prefix>.ndjson and <prefix>.summary.<txt|json|csv>. */
QSYM_API qsym_status qsym_report_write(const qsym_report* r, const char* prefix, qsym_format fmt);

#ifdef __cplusplus
}
#endif

#endif /* QSYM_QSYM_H */
