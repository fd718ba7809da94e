/* Copyright (c) 2026 The gsp-census authors
 *
 * Licensed under the Apache License, Version 2.0 (see
 * LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
 * This file may not be copied, modified, or distributed
 * except according to those terms.
 */

/* C interface to the symplectic-similitude census engine.
 *
 * Every operation produces an opaque record handle holding named exact
 * counts (arbitrary-precision integers), exact ratios, and Monte Carlo
 * estimates, together with the command and canonical parameters that
 * reproduce it.  Records serialize to JSON (one document) or CSV (one row
 * per named quantity).
 *
 * All functions returning int use the status codes below; on any failure
 * gspc_last_error() describes the problem for the calling thread.  Record
 * handles must be released with gspc_record_free().
 *
 * cache_dir: if non-NULL, results are looked up in and stored to that
 * directory keyed by command and canonical parameters; corrupt entries are
 * ignored with a warning on stderr.  threads: 0 picks the hardware count;
 * results are bit-identical for every thread count.
 */

#ifndef GSPCENSUS_GSP_CENSUS_H
#define GSPCENSUS_GSP_CENSUS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GSPC_API
#if defined(_WIN32)
#ifdef GSPC_BUILD
#define GSPC_API __declspec(dllexport)
#else
#define GSPC_API __declspec(dllimport)
#endif
#else
#define GSPC_API __attribute__((visibility("default")))
#endif
#endif

/* Status codes; they double as CLI exit codes. */
#define GSPC_OK 0
#define GSPC_ERR_USAGE 2    /* bad parameters or domain error */
#define GSPC_ERR_BUDGET 3   /* refused: work exceeds the budget */
#define GSPC_ERR_INTERNAL 4 /* violated internal invariant */

typedef struct gspc_record gspc_record;

/* Version of the library, e.g. "1.0.0". */
GSPC_API const char* gspc_version(void);

/* Human-readable description of the last failure on this thread. */
GSPC_API const char* gspc_last_error(void);

/* Default work budget for exhaustive operations (number of elements). */
GSPC_API uint64_t gspc_default_budget(void);

/* --- census: exact counting formulas ------------------------------- */

/* Eigenvalue-one census of the gamma-coset of GSp_{2g}(F_ell): group
 * orders, the S and T counts, the proportion, its large-g limit and the
 * deviation certificate.  all_gamma != 0 sweeps every coset instead and
 * verifies the count is the same on all nonidentity cosets (gamma is then
 * ignored). */
GSPC_API int gspc_census_exact(uint32_t g, uint64_t ell, uint64_t gamma,
                               int all_gamma, const char* cache_dir,
                               gspc_record** out);

/* Deviation certificates for every prime ell <= ell_max on the identity
 * coset and one nonidentity coset, with their maxima. */
GSPC_API int gspc_census_sweep(uint32_t g, uint64_t ell_max, const char* cache_dir,
                               gspc_record** out);

/* --- brute: exhaustive enumeration of the coset --------------------- */

/* prop is one of "E" (eigenvalue one), "N" (no eigenvalue one), "R"
 * (root-pairing condition), "Rproof" (its derivative-checked form). */
GSPC_API int gspc_brute_count(uint32_t g, uint64_t ell, uint64_t gamma,
                              const char* prop, uint64_t budget,
                              const char* cache_dir, gspc_record** out);

/* Characteristic-polynomial fiber histogram over the coset. */
GSPC_API int gspc_brute_delta(uint32_t g, uint64_t ell, uint64_t gamma,
                              uint64_t budget, const char* cache_dir,
                              gspc_record** out);

/* --- sample: Monte Carlo over the coset ----------------------------- */

GSPC_API int gspc_sample(uint32_t g, uint64_t ell, uint64_t gamma,
                         const char* prop, uint64_t n, uint64_t seed,
                         uint32_t threads, const char* cache_dir,
                         gspc_record** out);

/* --- charpoly: the coefficient space of characteristic polynomials -- */

/* Lists all ell^g characteristic polynomials of the gamma-coset. */
GSPC_API int gspc_charpoly_enum(uint32_t g, uint64_t ell, uint64_t gamma,
                                uint64_t budget, const char* cache_dir,
                                gspc_record** out);

/* Counts those with the property.  raw_literal != 0 reports the literal
 * root-pairing count on the identity coset instead of the headline zero. */
GSPC_API int gspc_charpoly_count(uint32_t g, uint64_t ell, uint64_t gamma,
                                 const char* prop, int raw_literal,
                                 uint64_t budget, const char* cache_dir,
                                 gspc_record** out);

/* --- bounds: closed-form sandwiches and constants ------------------- */

/* Proportion bounds implied by a characteristic-polynomial count psi. */
GSPC_API int gspc_bounds_psitow(uint32_t g, uint64_t ell, uint64_t psi,
                                const char* cache_dir, gspc_record** out);

/* Per-polynomial fiber size bounds over the coset. */
GSPC_API int gspc_bounds_delta(uint32_t g, uint64_t ell, const char* cache_dir,
                               gspc_record** out);

/* Constant C(g) with raw root-pairing count >= ell^g - C(g) ell^{g-1};
 * gamma must not be 1. */
GSPC_API int gspc_bounds_eigenweird(uint32_t g, uint64_t ell, uint64_t gamma,
                                    uint64_t budget, const char* cache_dir,
                                    gspc_record** out);

/* Same constant for every prime 3 <= ell <= ell_max at gamma = ell - 1. */
GSPC_API int gspc_bounds_eigenweird_sweep(uint32_t g, uint64_t ell_max,
                                          uint64_t budget, const char* cache_dir,
                                          gspc_record** out);

/* --- curves: Frobenius statistics of elliptic curve families -------- */

/* Reduces every Weierstrass curve over F_q mod ell and compares property
 * frequencies with the exact census of the q-mod-ell coset. */
GSPC_API int gspc_curves_scan(uint64_t q, uint64_t ell, uint32_t threads,
                              const char* cache_dir, gspc_record** out);

/* Deviation envelope |freq - target| <= c / sqrt(q) over all primes
 * q <= q_max with q mod ell = gamma. */
GSPC_API int gspc_curves_envelope(uint64_t ell, uint64_t gamma, uint64_t q_max,
                                  uint32_t threads, const char* cache_dir,
                                  gspc_record** out);

/* --- records --------------------------------------------------------- */

/* Serialized forms; pointers stay valid until gspc_record_free.  JSON is
 * one compact document; CSV is a flat table with a header row. */
GSPC_API const char* gspc_record_json(const gspc_record* rec);
GSPC_API const char* gspc_record_csv(const gspc_record* rec);

/* Parses a JSON document produced by gspc_record_json; NULL on malformed
 * input (see gspc_last_error). */
GSPC_API gspc_record* gspc_record_parse(const char* json_text);

GSPC_API void gspc_record_free(gspc_record* rec);

#ifdef __cplusplus
}
#endif

#endif /* GSPCENSUS_GSP_CENSUS_H */
