/* Copyright 2026 The ising-daqc Authors */
/* SPDX-License-Identifier: Apache-2.0 */

#ifndef ISING_DAQC_H
#define ISING_DAQC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first five match the command-line exit codes.
 */
typedef enum DaqcStatus {
  DAQC_STATUS_OK = 0,
  DAQC_STATUS_INVALID = 1,
  DAQC_STATUS_UNSCHEDULABLE = 2,
  DAQC_STATUS_VERIFY_FAIL = 3,
  DAQC_STATUS_RESOURCE_LIMIT = 4,
  DAQC_STATUS_NULL_POINTER = 5,
  DAQC_STATUS_PANIC = 6,
} DaqcStatus;

/**
 * A parsed and validated problem.
 */
typedef struct DaqcProblem DaqcProblem;

/**
 * A compiled schedule.
 */
typedef struct DaqcSchedule DaqcSchedule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread. Valid until the next failing call.
 */
const char *daqc_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *daqc_version(void);

/**
 * Parses a problem file's contents.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DaqcStatus daqc_problem_from_json(const char *json, struct DaqcProblem **out);

/**
 * # Safety
 * `problem` must come from [`daqc_problem_from_json`] and not be freed twice.
 */
void daqc_problem_free(struct DaqcProblem *problem);

/**
 * Number of qubits of a problem, or 0 for a null handle.
 *
 * # Safety
 * `problem` must be null or a live handle.
 */
size_t daqc_problem_num_qubits(const struct DaqcProblem *problem);

/**
 * Compiles `problem`, dropping blocks shorter than `epsilon * t_f`.
 *
 * # Safety
 * `problem` must be a live handle; `out` must be writable.
 */
enum DaqcStatus daqc_compile(const struct DaqcProblem *problem,
                             double epsilon,
                             struct DaqcSchedule **out);

/**
 * Parses a schedule file's contents.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DaqcStatus daqc_schedule_from_json(const char *json, struct DaqcSchedule **out);

/**
 * # Safety
 * `schedule` must come from this library and not be freed twice.
 */
void daqc_schedule_free(struct DaqcSchedule *schedule);

/**
 * Serializes a schedule. Release the string with [`daqc_string_free`].
 *
 * # Safety
 * `schedule` must be a live handle; `out` must be writable.
 */
enum DaqcStatus daqc_schedule_to_json(const struct DaqcSchedule *schedule, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void daqc_string_free(char *s);

/**
 * Number of resource blocks in a schedule.
 *
 * # Safety
 * `schedule` must be a live handle; `out` must be writable.
 */
enum DaqcStatus daqc_schedule_block_count(const struct DaqcSchedule *schedule, size_t *out);

/**
 * Sum of resource block durations.
 *
 * # Safety
 * `schedule` must be a live handle; `out` must be writable.
 */
enum DaqcStatus daqc_schedule_total_time(const struct DaqcSchedule *schedule, double *out);

/**
 * Writes the phase-invariant distance between `schedule` and the exact
 * target of `problem` to `distance`. Returns `DAQC_STATUS_VERIFY_FAIL` when
 * the distance is not below `tol`; the distance is written either way.
 *
 * # Safety
 * Handles must be live; `distance` must be writable.
 */
enum DaqcStatus daqc_verify(const struct DaqcProblem *problem,
                            const struct DaqcSchedule *schedule,
                            size_t max_qubits,
                            double tol,
                            double *distance);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ISING_DAQC_H */
