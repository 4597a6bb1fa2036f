// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! C ABI over the compiler.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Every fallible function returns a
//! [`DaqcStatus`] and, on failure, stores a message readable through
//! [`daqc_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ising_daqc::cli::{input_hash, verify_schedule, Problem, ProblemSpec, ScheduleFile};
use ising_daqc::{compile, Circuit, Error};

/// Status codes. The first five match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DaqcStatus {
    Ok = 0,
    Invalid = 1,
    Unschedulable = 2,
    VerifyFail = 3,
    ResourceLimit = 4,
    NullPointer = 5,
    Panic = 6,
}

/// A parsed and validated problem.
pub struct DaqcProblem {
    problem: Problem,
    hash: String,
}

/// A compiled schedule.
pub struct DaqcSchedule {
    file: ScheduleFile,
    circuit: Circuit,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> DaqcStatus {
    match e {
        Error::Unschedulable { .. } => DaqcStatus::Unschedulable,
        Error::ResourceLimit { .. } => DaqcStatus::ResourceLimit,
        Error::InvalidArgument(_) | Error::DimensionMismatch { .. } => DaqcStatus::Invalid,
    }
}

fn guard(f: impl FnOnce() -> Result<(), DaqcStatus>) -> DaqcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DaqcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            DaqcStatus::Panic
        }
    }
}

fn fail(e: Error) -> DaqcStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(name: &str) -> DaqcStatus {
    set_error(format!("{name} is null"));
    DaqcStatus::NullPointer
}

unsafe fn read_str<'a>(s: *const c_char, name: &str) -> Result<&'a str, DaqcStatus> {
    if s.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(s).to_str().map_err(|e| {
        set_error(format!("{name} is not UTF-8: {e}"));
        DaqcStatus::Invalid
    })
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, DaqcStatus> {
    p.as_ref().ok_or_else(|| null(name))
}

/// Message for the last failure on this thread. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn daqc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn daqc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a problem file's contents.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn daqc_problem_from_json(
    json: *const c_char,
    out: *mut *mut DaqcProblem,
) -> DaqcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let text = read_str(json, "json")?;
        let problem = ProblemSpec::from_json(text)
            .and_then(|s| s.resolve())
            .map_err(fail)?;
        let handle = DaqcProblem {
            problem,
            hash: input_hash(text.as_bytes()),
        };
        *out = Box::into_raw(Box::new(handle));
        Ok(())
    })
}

/// # Safety
/// `problem` must come from [`daqc_problem_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn daqc_problem_free(problem: *mut DaqcProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Number of qubits of a problem, or 0 for a null handle.
///
/// # Safety
/// `problem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn daqc_problem_num_qubits(problem: *const DaqcProblem) -> usize {
    problem.as_ref().map_or(0, |p| p.problem.num_qubits())
}

/// Compiles `problem`, dropping blocks shorter than `epsilon * t_f`.
///
/// # Safety
/// `problem` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn daqc_compile(
    problem: *const DaqcProblem,
    epsilon: f64,
    out: *mut *mut DaqcSchedule,
) -> DaqcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let p = deref(problem, "problem")?;
        let compiled = compile(&p.problem.target, &p.problem.resource, p.problem.t_f, epsilon)
            .map_err(fail)?;
        let file = ScheduleFile::from_circuit(&compiled.circuit, compiled.stats, p.hash.clone())
            .map_err(fail)?;
        *out = Box::into_raw(Box::new(DaqcSchedule {
            file,
            circuit: compiled.circuit,
        }));
        Ok(())
    })
}

/// Parses a schedule file's contents.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn daqc_schedule_from_json(
    json: *const c_char,
    out: *mut *mut DaqcSchedule,
) -> DaqcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let text = read_str(json, "json")?;
        let file = ScheduleFile::from_json(text).map_err(fail)?;
        let circuit = file.to_circuit().map_err(fail)?;
        *out = Box::into_raw(Box::new(DaqcSchedule { file, circuit }));
        Ok(())
    })
}

/// # Safety
/// `schedule` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn daqc_schedule_free(schedule: *mut DaqcSchedule) {
    if !schedule.is_null() {
        drop(Box::from_raw(schedule));
    }
}

/// Serializes a schedule. Release the string with [`daqc_string_free`].
///
/// # Safety
/// `schedule` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn daqc_schedule_to_json(
    schedule: *const DaqcSchedule,
    out: *mut *mut c_char,
) -> DaqcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let s = deref(schedule, "schedule")?;
        let text = s.file.to_json().map_err(fail)?;
        *out = CString::new(text).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn daqc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of resource blocks in a schedule.
///
/// # Safety
/// `schedule` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn daqc_schedule_block_count(
    schedule: *const DaqcSchedule,
    out: *mut usize,
) -> DaqcStatus {
    guard(|| {
        let s = deref(schedule, "schedule")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = s.file.metadata.stats.analog_block_count;
        Ok(())
    })
}

/// Sum of resource block durations.
///
/// # Safety
/// `schedule` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn daqc_schedule_total_time(
    schedule: *const DaqcSchedule,
    out: *mut f64,
) -> DaqcStatus {
    guard(|| {
        let s = deref(schedule, "schedule")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = s.file.metadata.stats.total_analog_time.0;
        Ok(())
    })
}

/// Writes the phase-invariant distance between `schedule` and the exact
/// target of `problem` to `distance`. Returns `DAQC_STATUS_VERIFY_FAIL` when
/// the distance is not below `tol`; the distance is written either way.
///
/// # Safety
/// Handles must be live; `distance` must be writable.
#[no_mangle]
pub unsafe extern "C" fn daqc_verify(
    problem: *const DaqcProblem,
    schedule: *const DaqcSchedule,
    max_qubits: usize,
    tol: f64,
    distance: *mut f64,
) -> DaqcStatus {
    guard(|| {
        let p = deref(problem, "problem")?;
        let s = deref(schedule, "schedule")?;
        if distance.is_null() {
            return Err(null("distance"));
        }
        if s.circuit.num_qubits() != p.problem.num_qubits() {
            return Err(fail(Error::DimensionMismatch {
                left: s.circuit.num_qubits(),
                right: p.problem.num_qubits(),
            }));
        }
        let report = verify_schedule(&p.problem, &s.circuit, max_qubits).map_err(fail)?;
        *distance = report.distance;
        if report.distance < tol {
            Ok(())
        } else {
            set_error(format!("distance {:e} is not below {tol:e}", report.distance));
            Err(DaqcStatus::VerifyFail)
        }
    })
}
