/*
 * svf — exact six-vertex partition-function library, C interface.
 *
 * Every function returns an svf_status; results are UTF-8 strings owned
 * by the library and released with svf_free(). On any failure the
 * thread-local message from svf_last_error() describes what went wrong.
 */
#ifndef SVF_H
#define SVF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum svf_status {
  SVF_OK = 0,
  SVF_ERR_INPUT = 1, /* malformed input, unknown name, bad range */
  SVF_ERR_POLE = 2,  /* vanishing denominator / degenerate parameters */
  SVF_ERR_INTERNAL = 3
} svf_status;

/* Opaque parameter-set handle. */
typedef struct svf_params svf_params;

const char* svf_version(void);

/* Thread-local message for the most recent failing call. Never NULL. */
const char* svf_last_error(void);

/* Releases any string returned by this library. NULL is a no-op. */
void svf_free(char* s);

/*
 * Parses a parameter file (JSON text):
 *   {"c": "1", "u": ["1","0"], "v": ["1/2"],
 *    "vectors": {"n": [..], "e": [..], "s": [..], "w": [..]},
 *    "split": [n, m]}            (u, v, split optional)
 * All scalars are rational strings: optional sign, digits, optional
 * "/digits". On success *out owns the handle; release with
 * svf_params_free().
 */
svf_status svf_params_parse(const char* json_text, svf_params** out);
void svf_params_free(svf_params* params);

/*
 * Canonicalizes one rational string ("3/6" -> "1/2", "-4/2" -> "-2").
 */
svf_status svf_rational_normalize(const char* text, char** out);

/*
 * Evaluates a quantity by a method and returns the result document
 * (JSON) in *json_out:
 *   {"quantity": .., "method": .., "value": "8", "float": "8.00", params}
 *
 * quantity: triangular | gdw | trapezoid | efp | z11 | beta | gamma
 * method (NULL or "" picks the quantity's default):
 *   triangular: contraction | factorized
 *   gdw:        contraction | subset-sum | determinant
 *   trapezoid:  contraction | factorized
 *   efp:        determinant | components
 *   z11:        factorized | contraction
 *   beta/gamma: formula
 * float_digits >= 0 adds a "float" decimal string with that many places;
 * pass a negative value to omit it.
 *
 * On SVF_ERR_POLE / SVF_ERR_INPUT, *json_out (when non-NULL) carries an
 * error document {"error": {"code", "kind", "factor", "message"}}.
 */
svf_status svf_eval(const svf_params* params, const char* quantity,
                    const char* method, int float_digits, char** json_out);

/*
 * Runs a verification suite (or "all") with a deterministic seeded
 * sampler and writes the JSON report to *report_out. failures_out (may
 * be NULL) receives the number of failed trials. Reports are
 * byte-reproducible for fixed arguments apart from elapsed_seconds.
 */
svf_status svf_verify(const char* suite, unsigned trials,
                      unsigned long long seed, unsigned max_size,
                      char** report_out, unsigned* failures_out);

/* Newline-separated list of valid suite names (excluding "all"). */
svf_status svf_suite_names(char** out);

/*
 * Benchmarks quantity/method over sizes [size_lo, size_hi] on fixed
 * seeded inputs; *csv_out receives "size,method,seconds,max_bits" rows.
 */
svf_status svf_bench(const char* quantity, const char* method, int size_lo,
                     int size_hi, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* SVF_H */
