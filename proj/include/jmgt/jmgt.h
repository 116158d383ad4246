/* Copyright 2026 The jmgt-periodic Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the periodic JMGT harmonic-balance solver.
 * Every function returning jmgt_status leaves a message retrievable with
 * jmgt_last_error() (per thread) when the status is not JMGT_OK.
 */

#ifndef JMGT_JMGT_H
#define JMGT_JMGT_H

#include <stddef.h>

#if defined(JMGT_BUILDING_LIBRARY)
#define JMGT_API __attribute__((visibility("default")))
#else
#define JMGT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jmgt_status
{
  JMGT_OK = 0,
  JMGT_SYNTAX_ERROR,
  JMGT_UNKNOWN_KEY,
  JMGT_TYPE_MISMATCH,
  JMGT_NON_POSITIVE_COEFFICIENT,
  JMGT_STABILITY_VIOLATION,
  JMGT_MEASURE_ASSUMPTION_VIOLATION,
  JMGT_BAD_GRID,
  JMGT_UNKNOWN_CASE,
  JMGT_INVALID_ARGUMENT,
  JMGT_UNDERSAMPLED_TIME,
  JMGT_SINGULAR_MEAN_MODE,
  JMGT_SINGULAR_OPERATOR,
  JMGT_SOLVE_FAILURE,
  JMGT_NON_CONVERGED_ITERATION,
  JMGT_NON_CONTRACTION,
  JMGT_DEGENERACY_DETECTED,
  JMGT_MAX_ITER_EXCEEDED,
  JMGT_CONTRACTION_LOST,
  JMGT_NO_PERIODIC_ATTRACTOR,
  JMGT_STEP_REJECTED,
  JMGT_IO_ERROR,
  JMGT_INTERNAL_ERROR
} jmgt_status;

typedef struct jmgt_config jmgt_config;
typedef struct jmgt_field jmgt_field;
typedef struct jmgt_study jmgt_study;

typedef struct jmgt_solve_info
{
  int iterations;
  double final_residual;
  double alpha_min;
  double alpha_max;
  double stability_margin;
  double last_contraction_ratio; /* NaN with fewer than two iterations */
  double max_contraction_ratio;
} jmgt_solve_info;

/* Status names match the error kinds, e.g. "NonContraction". */
JMGT_API const char *jmgt_status_name(jmgt_status status);
/* 0 success, 1 configuration/validation/IO, 2 solver failure. */
JMGT_API int jmgt_status_exit_code(jmgt_status status);
JMGT_API const char *jmgt_last_error(void);

/* Configuration */
JMGT_API jmgt_status jmgt_config_load(const char *path, jmgt_config **out);
JMGT_API jmgt_status jmgt_config_parse(const char *text, const char *base_dir, jmgt_config **out);
/* "section.key=value", applied before any typed access. */
JMGT_API jmgt_status jmgt_config_override(jmgt_config *cfg, const char *assignment);
/* Builds and validates; reports min(b/c2) - taubar on success. */
JMGT_API jmgt_status jmgt_config_validate(const jmgt_config *cfg, double *stability_margin);
/* Writes a NUL-terminated hex digest (17 bytes needed). */
JMGT_API jmgt_status jmgt_config_hash(const jmgt_config *cfg, char *buf, size_t len);
/* "linear", "westervelt" or "kuznetsov". */
JMGT_API jmgt_status jmgt_config_model(const jmgt_config *cfg, const char **name);
JMGT_API void jmgt_config_free(jmgt_config *cfg);

/* Periodic state. On solver failure *out still receives the last iterate when
 * one exists, so callers can inspect the history; free it either way. */
JMGT_API jmgt_status jmgt_solve(const jmgt_config *cfg, jmgt_field **out);
JMGT_API jmgt_status jmgt_solve_info_get(const jmgt_field *field, jmgt_solve_info *info);
JMGT_API int jmgt_field_harmonics(const jmgt_field *field);
JMGT_API int jmgt_field_nodes(const jmgt_field *field);
JMGT_API jmgt_status jmgt_field_coefficient(const jmgt_field *field, int harmonic, int node, double *re,
                                            double *im);
JMGT_API jmgt_status jmgt_field_write_csv(const jmgt_field *field, const char *path);
JMGT_API jmgt_status jmgt_field_read_csv(const char *path, jmgt_field **out);
/* max relative L2(L2) distance between field and a manufactured exact state, if any. */
JMGT_API jmgt_status jmgt_field_manufactured_error(const jmgt_config *cfg, const jmgt_field *field,
                                                   double *relative_error);
JMGT_API void jmgt_field_free(jmgt_field *field);

/* Energies, multipliers, identity residual and coefficient norms as
 * term_name,level,value rows. */
JMGT_API jmgt_status jmgt_energy_write_csv(const jmgt_config *cfg, const jmgt_field *field, const char *path);

/* Studies driven by the [study] section. */
JMGT_API jmgt_status jmgt_study_tau_sweep(const jmgt_config *cfg, jmgt_study **out);
JMGT_API jmgt_status jmgt_study_taylor(const jmgt_config *cfg, jmgt_study **out);
JMGT_API jmgt_status jmgt_study_convergence(const jmgt_config *cfg, jmgt_study **out);
JMGT_API jmgt_status jmgt_study_oracle(const jmgt_config *cfg, jmgt_study **out);

JMGT_API jmgt_status jmgt_study_write_csv(const jmgt_study *study, const char *path);
JMGT_API int jmgt_study_rows(const jmgt_study *study);
JMGT_API int jmgt_study_columns(const jmgt_study *study);
JMGT_API const char *jmgt_study_column_name(const jmgt_study *study, int column);
JMGT_API const char *jmgt_study_row_label(const jmgt_study *study, int row);
JMGT_API const char *jmgt_study_row_hash(const jmgt_study *study, int row);
JMGT_API double jmgt_study_value(const jmgt_study *study, int row, int column);
JMGT_API int jmgt_study_metadata_count(const jmgt_study *study);
JMGT_API const char *jmgt_study_metadata_key(const jmgt_study *study, int index);
JMGT_API const char *jmgt_study_metadata_value(const jmgt_study *study, int index);
JMGT_API const char *jmgt_study_kind(const jmgt_study *study);
JMGT_API void jmgt_study_free(jmgt_study *study);

#ifdef __cplusplus
}
#endif

#endif /* JMGT_JMGT_H */
