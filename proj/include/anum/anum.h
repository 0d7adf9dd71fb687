/* C API for the superelliptic a-number toolkit.
 *
 * The library computes, in exact arithmetic, the Cartier matrix, rank,
 * a-number and p-rank of the curves y^((q+1)/2) = x^m + x over F_{q^2}
 * (q = p^s), brute-force point counts, and a verification report comparing
 * the matrix values against congruence counts and closed formulas.
 *
 * All entry points are thread safe. Handles are opaque; strings returned
 * through char** are heap-allocated and must be released with
 * anum_string_free. On failure the return code is nonzero and
 * anum_last_error() describes the problem for the calling thread.
 */
#ifndef ANUM_H
#define ANUM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct anum_curve_s anum_curve;

typedef enum {
  ANUM_OK = 0,
  ANUM_ERR_INVALID = 1,  /* bad parameters or usage */
  ANUM_ERR_INTERNAL = 2, /* hard internal consistency failure */
  ANUM_ERR_RESOURCE = 3  /* brute-force or genus guard tripped */
} anum_status;

/* Curve y^n = x^m + x with n = (p^s+1)/2. strict_hypotheses != 0 rejects
 * parameter sets failing any of the standing gcd/shape hypotheses;
 * otherwise the failures are recorded as flags. */
anum_status anum_curve_create(long long p, int s, long long m,
                              int strict_hypotheses, anum_curve** out);
void anum_curve_free(anum_curve* c);

/* Message for the most recent failure on this thread ("" if none). */
const char* anum_last_error(void);

/* Cheap parameter accessors (valid handle required). */
long long anum_param_n(const anum_curve* c);
long long anum_param_q(const anum_curve* c);
long long anum_genus(const anum_curve* c);
int anum_hypotheses_ok(const anum_curve* c);

anum_status anum_basis_size(const anum_curve* c, long long* out);
anum_status anum_paper_index_set_size(const anum_curve* c, long long* out);

anum_status anum_matrix_rank(const anum_curve* c, long long* out);
anum_status anum_a_number(const anum_curve* c, long long* out);
anum_status anum_p_rank(const anum_curve* c, long long* out);

/* exponent_mode: "honest" | "paper-literal"
 * index_mode:    "derived-basis" | "paper-literal"
 * h_range:       "half" | "full" */
anum_status anum_congruence_count(const anum_curve* c, const char* exponent_mode,
                                  const char* index_mode, const char* h_range,
                                  long long* out);

/* Brute-force point count over F_{p^e} (guarded at p^e <= 1e7). */
anum_status anum_point_count(const anum_curve* c, int e, long long* total);
anum_status anum_is_maximal(const anum_curve* c, int* out);

/* Canonical text dump of the Cartier matrix columns. */
anum_status anum_matrix_dump(const anum_curve* c, char** out);

/* Validation summary (params, genus, basis size, hypothesis flags) as JSON. */
anum_status anum_check_json(const anum_curve* c, char** out);

/* Full verification report. JSON field order is stable; identical inputs
 * produce byte-identical output. */
anum_status anum_verify_json(const anum_curve* c, char** out);
anum_status anum_verify_csv(const anum_curve* c, int with_header, char** out);

void anum_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ANUM_H */
