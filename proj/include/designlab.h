/* designlab C API.
 *
 * Every function returns a dl_status; on failure dl_last_error() describes
 * the problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * dl_free_string. Reports are JSON objects carrying "schema": "v1".
 * Rationals appear as "num/den" strings.
 */
#ifndef DESIGNLAB_H
#define DESIGNLAB_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DL_API __declspec(dllexport)
#else
#define DL_API __attribute__((visibility("default")))
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_INVALID_ARGUMENT = 1,
  DL_INSUFFICIENT_PRECISION = 2,
  DL_CAP_EXCEEDED = 3,
  DL_NOT_FOUND = 4,
  DL_IO = 5,
  DL_INTERNAL = 6
} dl_status;

typedef struct dl_series dl_series;
typedef struct dl_code dl_code;
typedef struct dl_lattice dl_lattice;

DL_API const char* dl_version(void);
DL_API const char* dl_last_error(void);
DL_API const char* dl_status_name(dl_status s);
DL_API void dl_free_string(char* s);

/* n <= 0 restores the default (hardware concurrency). */
DL_API dl_status dl_set_workers(int n);
DL_API int dl_get_workers(void);
/* NULL or "" clears the override. */
DL_API dl_status dl_set_fixture_dir(const char* dir);

/* -- series ---------------------------------------------------------------- */

/* spec: "3:8", "2:15,1:-7", "" for the constant 1. */
DL_API dl_status dl_eta_quotient(const char* spec, long prec, dl_series** out);
/* k = 4 or 6, constant term 1. */
DL_API dl_status dl_eisenstein(int k, long prec, dl_series** out);
DL_API dl_status dl_delta(long prec, dl_series** out);
DL_API dl_status dl_series_from_json(const char* json, dl_series** out);
DL_API void dl_series_free(dl_series* s);
DL_API long dl_series_prec(const dl_series* s);
DL_API long dl_series_offset24(const dl_series* s);
/* Coefficient at index i as "num/den". */
DL_API dl_status dl_series_coefficient(const dl_series* s, long i, char** out);
/* {"offset24", "prec", "coeffs": [[i, "num/den"], ...]} (nonzero entries only). */
DL_API dl_status dl_series_to_json(const dl_series* s, char** out);
/* Indices 0..bound with a zero coefficient, as a JSON array. */
DL_API dl_status dl_series_vanishing_json(const dl_series* s, long bound, char** out);

/* -- codes ------------------------------------------------------------------ */

/* hamming8, golay24, d16plus, '+'-joined sums, or a generator-matrix path. */
DL_API dl_status dl_code_load(const char* name, dl_code** out);
DL_API void dl_code_free(dl_code* c);
DL_API dl_status dl_code_info_json(const dl_code* c, char** out);
/* Brute-force t-design test of the union of the given shells. */
DL_API dl_status dl_code_design_json(const dl_code* c, const int* weights, int nweights, int t, char** out);
/* Harmonic-criterion verdicts for degrees 1..max_degree on the union of shells.
 * degrees may restrict the report (NULL = all). */
DL_API dl_status dl_code_tset_json(const dl_code* c, const int* weights, int nweights, const int* degrees,
                                   int ndegrees, int max_degree, long cap, char** out);
/* c(i) + c(n-i) = 0 on Harm_k. */
DL_API dl_status dl_code_antisymmetry_json(const dl_code* c, int k, long cap, char** out);

/* -- lattices ------------------------------------------------------------------ */

/* Z<n>, A2, E8, E8+E8, D16+, golay24-A, A:<code>, e8_cartan, or a Gram-matrix path. */
DL_API dl_status dl_lattice_load(const char* name, dl_lattice** out);
DL_API void dl_lattice_free(dl_lattice* l);
DL_API dl_status dl_lattice_info_json(const dl_lattice* l, char** out);
/* norm as "n" or "n/d". Moment test for k = 1..t plus per-degree kernel verdicts. */
DL_API dl_status dl_lattice_design_json(const dl_lattice* l, const char* norm, int t, long cap, char** out);
/* Every nonempty shell with norm in [norm_lo, norm_hi], each with its strength up to t. */
DL_API dl_status dl_lattice_design_range_json(const dl_lattice* l, long norm_lo, long norm_hi, int t, char** out);
/* Per-degree verdicts on the given degrees. */
DL_API dl_status dl_lattice_tset_json(const dl_lattice* l, const char* norm, const int* degrees, int ndegrees,
                                      long cap, char** out);
/* format: "json" or "csv" (one vector per line, lattice coordinates). */
DL_API dl_status dl_lattice_shell(const dl_lattice* l, const char* norm, long cap, const char* format, char** out);

/* weight: "one", "zonal:<k>" (along the first ambient axis, or the first
 * basis vector without a frame), "zonal:<k>:axis=<a>", or
 * "zonal:<k>:<w1>,<w2>,..." in lattice coordinates.
 * route: 0 auto, 1 enumerate, 2 codeword sum. prec_norm bounds (x,x). */
DL_API dl_status dl_lattice_theta(const dl_lattice* l, const char* weight, long prec_norm, int route,
                                  dl_series** out);
DL_API dl_status dl_theta_membership_json(const dl_lattice* l, const char* weight, long prec, char** out);

/* -- conformal designs ----------------------------------------------------------- */

/* which: 'a', 'b', 'c' or 'd'. */
DL_API dl_status dl_trace_series(char which, long prec, dl_series** out);
DL_API dl_status dl_graded_trace(const dl_lattice* l, const char* weight, long prec, dl_series** out);
DL_API int dl_ord_criterion(long ell);
DL_API dl_status dl_voa_strength_json(int c, long ell, long prec, char** out);
/* Strength for every ell in [from, to]; the report keeps only a summary and exceptions. */
DL_API dl_status dl_voa_strength_scan_json(int c, long from, long to, char** out);
DL_API dl_status dl_conformal_tset_json(int c, int max_even, char** out);
DL_API dl_status dl_modular_obstruction_json(int c, int s, long mu, char** out);
DL_API dl_status dl_remark4_json(long prec, char** out);
DL_API dl_status dl_d_series_json(long prec, char** out);
DL_API dl_status dl_lehmer_json(long bound, long shell_bound, char** out);

#ifdef __cplusplus
}
#endif

#endif
