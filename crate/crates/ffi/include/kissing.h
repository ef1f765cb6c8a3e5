#ifndef KISSING_H
#define KISSING_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Certificates available through [`kissing_certify`].
 */
typedef enum KissingCertKind {
  /**
   * `5k^4 - 24k^3 + 40k^2 - 28k + 10 > 0` for every integer `k >= 1`.
   */
  KISSING_CERT_KIND_QUARTIC = 0,
  /**
   * The polynomial bound over the first candidate set.
   */
  KISSING_CERT_KIND_CANDIDATE_B = 1,
  /**
   * The search over the second candidate set.
   */
  KISSING_CERT_KIND_CANDIDATE_A = 2,
  /**
   * The search hits are images of the extremal pair at `k = 6`.
   */
  KISSING_CERT_KIND_EQUIVALENCE = 3,
  /**
   * Brute-force check of the closed form for small `k`.
   */
  KISSING_CERT_KIND_SMALL_K = 4,
} KissingCertKind;

/**
 * Status codes returned by every fallible function.
 */
typedef enum KissingStatus {
  KISSING_STATUS_OK = 0,
  KISSING_STATUS_NULL_POINTER = 1,
  KISSING_STATUS_INVALID_ARGUMENT = 2,
  KISSING_STATUS_BUDGET_EXCEEDED = 3,
  KISSING_STATUS_PANIC = 4,
} KissingStatus;

/**
 * A certificate with its verdict and witnesses.
 */
typedef struct KissingCertificate KissingCertificate;

/**
 * Result of a brute-force ε(d,k) computation.
 */
typedef struct KissingEps KissingEps;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *kissing_version(void);

/**
 * Message describing the last failure on this thread, or NULL. The caller
 * owns the returned string.
 */
char *kissing_last_error(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string obtained from this library, not yet freed.
 */
void kissing_string_free(char *s);

/**
 * Computes `f(x)` and `g(x)` for a point `x` of `[-k,k]^9`.
 *
 * # Safety
 * `x` must point to 9 readable values; `f` and `g` must be writable.
 */
enum KissingStatus kissing_xpoint_fg(const int64_t *x, int64_t k, int64_t *f, int64_t *g);

/**
 * Exact squared distance between two lattice simplices of `[0,k]^d`,
 * written to `out` as `"p/q"`.
 *
 * Vertices are given row-major: `np` rows of `d` coordinates for `p`,
 * `nq` rows for `q`.
 *
 * # Safety
 * `p` and `q` must point to `np * d` and `nq * d` readable values; `out`
 * must be writable.
 */
enum KissingStatus kissing_sq_dist(const int64_t *p,
                                   size_t np,
                                   const int64_t *q,
                                   size_t nq,
                                   size_t d,
                                   int64_t k,
                                   char **out);

/**
 * Brute-force ε(d,k) over every pair class of dimension `d`.
 *
 * `budget` caps the number of pairs examined (0 selects the default).
 *
 * # Safety
 * `out` must be writable. The handle is released with [`kissing_eps_free`].
 */
enum KissingStatus kissing_eps_compute(size_t d,
                                       int64_t k,
                                       uint64_t budget,
                                       int symmetry_reduced,
                                       struct KissingEps **out);

/**
 * Writes ε(d,k)^2 as `"p/q"`.
 *
 * # Safety
 * `eps` must be a live handle; `out` must be writable.
 */
enum KissingStatus kissing_eps_squared(const struct KissingEps *eps, char **out);

/**
 * Number of witness orbits; 0 for a NULL handle.
 *
 * # Safety
 * `eps` must be NULL or a live handle.
 */
size_t kissing_eps_witness_count(const struct KissingEps *eps);

/**
 * Number of pairs examined; 0 for a NULL handle.
 *
 * # Safety
 * `eps` must be NULL or a live handle.
 */
uint64_t kissing_eps_pairs_examined(const struct KissingEps *eps);

/**
 * Writes the canonical key of witness orbit `index`.
 *
 * # Safety
 * `eps` must be a live handle; `out` must be writable.
 */
enum KissingStatus kissing_eps_witness(const struct KissingEps *eps, size_t index, char **out);

/**
 * Releases an ε handle. NULL is ignored.
 *
 * # Safety
 * `eps` must be NULL or a handle not yet freed.
 */
void kissing_eps_free(struct KissingEps *eps);

/**
 * Runs one certificate.
 *
 * # Safety
 * `out` must be writable. The handle is released with
 * [`kissing_certificate_free`].
 */
enum KissingStatus kissing_certify(enum KissingCertKind kind, struct KissingCertificate **out);

/**
 * 1 if the certificate passed, 0 if it failed, -1 for NULL.
 *
 * # Safety
 * `cert` must be NULL or a live handle.
 */
int kissing_certificate_passed(const struct KissingCertificate *cert);

/**
 * Number of witnesses attached to the certificate; 0 for NULL.
 *
 * # Safety
 * `cert` must be NULL or a live handle.
 */
size_t kissing_certificate_witness_count(const struct KissingCertificate *cert);

/**
 * Writes the human-readable certificate report.
 *
 * # Safety
 * `cert` must be a live handle; `out` must be writable.
 */
enum KissingStatus kissing_certificate_report(const struct KissingCertificate *cert, char **out);

/**
 * Releases a certificate handle. NULL is ignored.
 *
 * # Safety
 * `cert` must be NULL or a handle not yet freed.
 */
void kissing_certificate_free(struct KissingCertificate *cert);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KISSING_H */
