#ifndef DPCASCADE_H
#define DPCASCADE_H

#include <stddef.h>
#include <stdint.h>

#if defined(DPC_BUILDING_LIBRARY)
#define DPC_API __attribute__((visibility("default")))
#else
#define DPC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpc_status {
  DPC_OK = 0,
  DPC_INVALID_ARGUMENT = 1,
  DPC_UNKNOWN_MODEL = 2,
  DPC_OUT_OF_RANGE = 3,
  DPC_SCHEMA = 4,
  DPC_COMPUTATION = 5,
  DPC_INTERNAL = 6
} dpc_status;

typedef struct dpc_catalog dpc_catalog;
typedef struct dpc_report dpc_report;

/* Message of the last failing call on this thread; empty after success. */
DPC_API const char* dpc_last_error(void);
/* Error kind name of the last failing call (e.g. "OutOfRange"). */
DPC_API const char* dpc_last_error_kind(void);

DPC_API dpc_status dpc_catalog_builtin(dpc_catalog** out);
DPC_API dpc_status dpc_catalog_load(const char* path, dpc_catalog** out);
DPC_API dpc_status dpc_catalog_parse(const char* json_text, dpc_catalog** out);
DPC_API size_t dpc_catalog_size(const dpc_catalog* cat);
DPC_API const char* dpc_catalog_id(const dpc_catalog* cat, size_t i);
/* Serializes the catalog into a report whose text is the JSON document. */
DPC_API dpc_status dpc_catalog_dump(const dpc_catalog* cat, dpc_report** out);
DPC_API void dpc_catalog_free(dpc_catalog* cat);

typedef struct dpc_verify_options {
  const char* const* ids; /* NULL or n_ids model ids; all models when empty */
  size_t n_ids;
  int has_n_min;
  long long n_min;
  int has_n_max;
  long long n_max;
  uint64_t seed;
  uint64_t prime;
  int strict;
  long long member_n_max;
} dpc_verify_options;

DPC_API void dpc_verify_options_init(dpc_verify_options* opts);

DPC_API dpc_status dpc_verify(const dpc_catalog* cat, const dpc_verify_options* opts, int as_json, dpc_report** out);
DPC_API dpc_status dpc_cascade(const dpc_catalog* cat, long long n_max, uint64_t seed, int reid_suzuki, int as_json,
                               dpc_report** out);
DPC_API dpc_status dpc_tables(const dpc_catalog* cat, long long n_min, long long n_max, uint64_t seed, int as_json,
                              dpc_report** out);
DPC_API dpc_status dpc_instantiate(const dpc_catalog* cat, const char* id, long long n, uint64_t seed, dpc_report** out);
DPC_API dpc_status dpc_project(const dpc_catalog* cat, const char* id, const char* center, long long n, uint64_t seed,
                               int as_json, dpc_report** out);

DPC_API const char* dpc_report_text(const dpc_report* rep);
/* 0 when every check passed, 1 when a discrepancy was found. */
DPC_API int dpc_report_exit_code(const dpc_report* rep);
DPC_API void dpc_report_free(dpc_report* rep);

#ifdef __cplusplus
}
#endif

#endif
