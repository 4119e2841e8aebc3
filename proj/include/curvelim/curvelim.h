#ifndef CURVELIM_H
#define CURVELIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(CURVELIM_BUILDING)
#define CURVELIM_API __attribute__((visibility("default")))
#else
#define CURVELIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum curvelim_status {
  CURVELIM_OK = 0,
  CURVELIM_E_INPUT = 2,    /* malformed JSON, bad shapes, unknown command */
  CURVELIM_E_THEOREM = 3,  /* a structural check failed */
  CURVELIM_E_NUMERIC = 4,  /* root finding did not converge */
  CURVELIM_E_INTERNAL = 5
} curvelim_status;

typedef struct curvelim_job curvelim_job;
typedef struct curvelim_vessel curvelim_vessel;
typedef struct curvelim_detrep curvelim_detrep;

CURVELIM_API const char* curvelim_version(void);

/* Message of the last failing call on this thread; "" when none. */
CURVELIM_API const char* curvelim_last_error(void);

CURVELIM_API size_t curvelim_command_count(void);
/* NULL when index is out of range. */
CURVELIM_API const char* curvelim_command_name(size_t index);

/* Jobs: one subcommand with options; run() may be called repeatedly. */
CURVELIM_API curvelim_status curvelim_job_create(const char* command, curvelim_job** out);
CURVELIM_API void curvelim_job_destroy(curvelim_job* job);
CURVELIM_API curvelim_status curvelim_job_set_tol(curvelim_job* job, double tol);
CURVELIM_API curvelim_status curvelim_job_set_seed(curvelim_job* job, uint64_t seed);
CURVELIM_API curvelim_status curvelim_job_set_samples(curvelim_job* job, size_t samples);
/* Returns the job's exit status. The JSON report is always produced, also on
 * failure, and stays valid until the next run or destroy. */
CURVELIM_API curvelim_status curvelim_job_run(curvelim_job* job, const char* input_json);
CURVELIM_API const char* curvelim_job_report(const curvelim_job* job);

/* Vessels in the JSON vessel encoding (A1, A2, Phi, sigma1, sigma2,
 * gamma_in, gamma_out). */
CURVELIM_API curvelim_status curvelim_vessel_parse(const char* json, curvelim_vessel** out);
CURVELIM_API void curvelim_vessel_destroy(curvelim_vessel* v);
CURVELIM_API curvelim_status curvelim_vessel_dims(const curvelim_vessel* v, size_t* dim_h, size_t* dim_e);
/* Sets *holds to 1 when all five axioms hold exactly and the four E matrices
 * are hermitian; *failing_mask gets bit k for failing axiom k in the order
 * commutativity, sigma_coupling, gamma_in, gamma_out, linkage (bit 5:
 * hermitian). Either output may be NULL. */
CURVELIM_API curvelim_status curvelim_vessel_check(const curvelim_vessel* v, int* holds, unsigned* failing_mask);
/* *equal = 1 when det(y1σ2 − y2σ1 + γin) and the γout version coincide. */
CURVELIM_API curvelim_status curvelim_vessel_discriminant_equal(const curvelim_vessel* v, int* equal);

/* Determinantal representations {D0, D1, D2}. */
CURVELIM_API curvelim_status curvelim_detrep_parse(const char* json, curvelim_detrep** out);
CURVELIM_API void curvelim_detrep_destroy(curvelim_detrep* d);
CURVELIM_API curvelim_status curvelim_detrep_size(const curvelim_detrep* d, size_t* m);
/* Dimension of the principal subspace V_n. */
CURVELIM_API curvelim_status curvelim_detrep_vn_dim(const curvelim_detrep* d, int n, size_t* dim);

/* Owned copy of the report; release with curvelim_string_free. */
CURVELIM_API char* curvelim_job_report_copy(const curvelim_job* job);
CURVELIM_API void curvelim_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
