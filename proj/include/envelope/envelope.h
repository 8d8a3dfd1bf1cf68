#ifndef ENVELOPE_ENVELOPE_H
#define ENVELOPE_ENVELOPE_H

#include <stddef.h>
#include <stdint.h>

#if defined(ENVELOPE_BUILDING_LIBRARY)
#define ENVELOPE_API __attribute__((visibility("default")))
#else
#define ENVELOPE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors envelope::ErrorCode, shifted by one so that 0 is success. */
typedef enum envelope_status {
  ENVELOPE_OK = 0,
  ENVELOPE_E_INVALID_ARGUMENT = 1,
  ENVELOPE_E_MALFORMED_INPUT = 2,
  ENVELOPE_E_NOT_ASSOCIATIVE = 3,
  ENVELOPE_E_NO_IDENTITY = 4,
  ENVELOPE_E_MISSING_INVERSE = 5,
  ENVELOPE_E_ORDER_CAP_EXCEEDED = 6,
  ENVELOPE_E_MALFORMED_CYCLE_NOTATION = 7,
  ENVELOPE_E_INDEX_NOT_SUCCESSOR = 8,
  ENVELOPE_E_ORDINAL_OUT_OF_RANGE = 9,
  ENVELOPE_E_NOT_YET_STABLE = 10,
  ENVELOPE_E_ARITY_MISMATCH = 11,
  ENVELOPE_E_INDEX_OUT_OF_RANGE = 12,
  ENVELOPE_E_UNKNOWN_CATALOG_NAME = 13,
  ENVELOPE_E_IO = 14,
  ENVELOPE_E_CONFIG = 15,
  ENVELOPE_E_INTERNAL = 16,
  ENVELOPE_E_UNKNOWN = 99
} envelope_status;

typedef enum envelope_chain_kind {
  ENVELOPE_CHAIN_ENVELOPE = 0,      /* E_a(H) inside G */
  ENVELOPE_CHAIN_CENTRALIZER = 1,   /* C^a_G(H) */
  ENVELOPE_CHAIN_UPPER_CENTRAL = 2  /* Z_a(H) */
} envelope_chain_kind;

typedef struct envelope_group envelope_group;
typedef struct envelope_subgroup envelope_subgroup;

typedef struct envelope_summary {
  size_t pass, fail, skipped, error;
} envelope_summary;

ENVELOPE_API const char* envelope_version(void);
ENVELOPE_API const char* envelope_status_name(envelope_status status);
/* Message of the last failed call on this thread; "" after a success. */
ENVELOPE_API const char* envelope_last_error(void);

/* Every char** result is allocated by the library; release it here. */
ENVELOPE_API void envelope_string_free(char* s);

/* spec: "catalog:D:8", "cayley:PATH", "perm:PATH", or factors joined by " x ".
   order_cap 0 takes ENVELOPE_ORDER_CAP or the built-in default. */
ENVELOPE_API envelope_status envelope_group_resolve(const char* spec, size_t order_cap,
                                                    envelope_group** out);
ENVELOPE_API void envelope_group_free(envelope_group* g);
ENVELOPE_API size_t envelope_group_order(const envelope_group* g);
/* Order, labels, center, nilpotency class, derived series and solvability. */
ENVELOPE_API envelope_status envelope_group_info_json(const envelope_group* g, char** out_json);
ENVELOPE_API envelope_status envelope_group_save_cayley(const envelope_group* g, const char* path);

/* Subgroup generated by the named elements; count 0 gives the trivial subgroup. */
ENVELOPE_API envelope_status envelope_subgroup_from_labels(const envelope_group* g,
                                                           const char* const* labels, size_t count,
                                                           envelope_subgroup** out);
ENVELOPE_API void envelope_subgroup_free(envelope_subgroup* h);
ENVELOPE_API size_t envelope_subgroup_order(const envelope_subgroup* h);

/* max_index: ordinal text such as "5", "w", "w+1"; NULL uses |G|. */
ENVELOPE_API envelope_status envelope_chain_json(const envelope_subgroup* h, envelope_chain_kind kind,
                                                 const char* max_index, char** out_json);
ENVELOPE_API envelope_status envelope_lattice_json(const envelope_group* g, char** out_json);

/* Runs a sweep and/or case-study audit from a run-config JSON document and
   writes the report where the config says. exit_status receives 0, 1 or 2
   as the command line reports it; diagnostics may be NULL. A config that
   fails to parse returns ENVELOPE_E_CONFIG. */
ENVELOPE_API envelope_status envelope_run_config(const char* config_json, int* exit_status,
                                                 char** diagnostics);

/* Case-study audit only; out_reports gets one JSON report per line and
   out_table the text table. Either output may be NULL. */
ENVELOPE_API envelope_status envelope_run_casestudy(size_t samples, uint64_t seed, char** out_reports,
                                                    char** out_table, envelope_summary* summary);

#ifdef __cplusplus
}
#endif

#endif
