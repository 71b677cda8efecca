/* charrig C API: load a simplicial complex, run a verification command and
 * read back the report. Handles are opaque; every call that can fail
 * returns a status code and leaves a message in charrig_last_error(). */
#ifndef CHARRIG_H
#define CHARRIG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CHARRIG_API __declspec(dllexport)
#else
#define CHARRIG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the numbering matches charrig::ErrorCode. */
enum {
  CHARRIG_OK = 0,
  CHARRIG_E_PARSE = 1,
  CHARRIG_E_FACE_CLOSURE = 2,
  CHARRIG_E_DUPLICATE = 3,
  CHARRIG_E_DEGREE = 4,
  CHARRIG_E_SHAPE = 5,
  CHARRIG_E_RING = 6,
  CHARRIG_E_MISMATCH = 7,
  CHARRIG_E_NOT_A_CYCLE = 8,
  CHARRIG_E_NOT_IN_IMAGE = 9,
  CHARRIG_E_GEOMETRY_BUDGET = 10,
  CHARRIG_E_DIMENSION = 11,
  CHARRIG_E_IO = 12,
  CHARRIG_E_INVALID_ARGUMENT = 13,
  CHARRIG_E_INTERNAL = 14
};

typedef struct charrig_complex charrig_complex;
typedef struct charrig_report charrig_report;

typedef struct charrig_options {
  const int* degrees; /* diagram, phi; NULL/0 for 1..dim+1 */
  size_t degree_count;
  const int* degree_pairs; /* ring; 2*pair_count ints (k, l); NULL/0 for all */
  size_t pair_count;
  const char* cycle_path; /* pseudo; NULL for sampled cycles */
  uint64_t seed;
  int max_subdiv; /* 0, 1 or 2 */
  int threads;
} charrig_options;

CHARRIG_API const char* charrig_version(void);
CHARRIG_API const char* charrig_status_name(int status);
/* Message of the last failed call on this thread; "" when none. */
CHARRIG_API const char* charrig_last_error(void);

CHARRIG_API void charrig_options_init(charrig_options* o);

/* Loads a complex file. Bare names and corpus/<name> resolve against
 * CHARRIG_CORPUS when set; ".json" may be omitted. */
CHARRIG_API int charrig_complex_load(const char* path, charrig_complex** out);
CHARRIG_API int charrig_complex_parse(const char* json, charrig_complex** out);
CHARRIG_API void charrig_complex_free(charrig_complex* x);
CHARRIG_API const char* charrig_complex_name(const charrig_complex* x);
CHARRIG_API int charrig_complex_dimension(const charrig_complex* x);
/* Number of j-simplices, 0 outside the dimension range. */
CHARRIG_API size_t charrig_complex_count(const charrig_complex* x, int j);

/* Writes a description of H^j(X; ring) such as "Z^2 + Z/2" into buf
 * (always NUL-terminated); ring is "Z", "Q" or "Q/Z". Returns
 * CHARRIG_E_SHAPE when buf is too small. */
CHARRIG_API int charrig_cohomology(const charrig_complex* x, int j, const char* ring, char* buf,
                                   size_t size);

/* command: "inspect", "diagram", "phi", "ring" or "pseudo". opts may be
 * NULL for defaults. */
CHARRIG_API int charrig_run(const char* command, const charrig_complex* x, const charrig_options* opts,
                            charrig_report** out);
CHARRIG_API void charrig_report_free(charrig_report* r);
/* 1 when no check failed. */
CHARRIG_API int charrig_report_passed(const charrig_report* r);
CHARRIG_API size_t charrig_report_failures(const charrig_report* r);
/* Strings owned by the report. */
CHARRIG_API const char* charrig_report_canonical(const charrig_report* r);
CHARRIG_API const char* charrig_report_pretty(const charrig_report* r);
CHARRIG_API const char* charrig_report_hash(const charrig_report* r);

#ifdef __cplusplus
}
#endif

#endif
