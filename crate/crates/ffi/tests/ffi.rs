// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use ising_daqc_ffi::*;

const ATA4: &str = r#"{"num_qubits":4,"resource_couplings":[1.0,0.8,1.2],
"target":{"type":"ata","couplings":[
{"i":0,"j":1,"value":0.3},{"i":0,"j":2,"value":-0.7},{"i":0,"j":3,"value":0.5},
{"i":1,"j":2,"value":0.9},{"i":1,"j":3,"value":-0.2},{"i":2,"j":3,"value":0.4}]},
"t_f":0.6}"#;

fn last_error() -> String {
    unsafe { CStr::from_ptr(daqc_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn problem(json: &str) -> Result<*mut DaqcProblem, DaqcStatus> {
    let text = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    match unsafe { daqc_problem_from_json(text.as_ptr(), &mut out) } {
        DaqcStatus::Ok => Ok(out),
        s => {
            assert!(out.is_null());
            Err(s)
        }
    }
}

fn compiled(p: *const DaqcProblem) -> *mut DaqcSchedule {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { daqc_compile(p, 1e-12, &mut out) }, DaqcStatus::Ok, "{}", last_error());
    out
}

fn to_json(s: *const DaqcSchedule) -> String {
    let mut raw: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { daqc_schedule_to_json(s, &mut raw) }, DaqcStatus::Ok);
    let text = unsafe { CStr::from_ptr(raw) }.to_str().unwrap().to_owned();
    unsafe { daqc_string_free(raw) };
    text
}

#[test]
fn compile_and_verify() {
    let p = problem(ATA4).unwrap();
    assert_eq!(unsafe { daqc_problem_num_qubits(p) }, 4);
    let s = compiled(p);
    let mut d = f64::NAN;
    assert_eq!(unsafe { daqc_verify(p, s, 10, 1e-9, &mut d) }, DaqcStatus::Ok);
    assert!(d < 1e-9);

    let mut blocks = 0;
    let mut time = 0.0;
    assert_eq!(unsafe { daqc_schedule_block_count(s, &mut blocks) }, DaqcStatus::Ok);
    assert_eq!(unsafe { daqc_schedule_total_time(s, &mut time) }, DaqcStatus::Ok);
    assert!(blocks > 0 && time > 0.0);
    unsafe {
        daqc_schedule_free(s);
        daqc_problem_free(p);
    }
}

#[test]
fn json_round_trip_matches_library() {
    let p = problem(ATA4).unwrap();
    let s = compiled(p);
    let text = to_json(s);

    let spec = ising_daqc::cli::format::ProblemSpec::from_json(ATA4).unwrap();
    let lib = ising_daqc::cli::format::input_hash(ATA4.as_bytes());
    assert!(text.contains(&lib), "schedule carries the input hash");
    let problem = spec.resolve().unwrap();
    let c = ising_daqc::compile(&problem.target, &problem.resource, problem.t_f, 1e-12).unwrap();
    let file = ising_daqc::cli::ScheduleFile::from_circuit(&c.circuit, c.stats, lib).unwrap();
    assert_eq!(file.to_json().unwrap(), text);

    let c_text = CString::new(text.clone()).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { daqc_schedule_from_json(c_text.as_ptr(), &mut back) }, DaqcStatus::Ok);
    assert_eq!(to_json(back), text);
    let mut d = 1.0;
    assert_eq!(unsafe { daqc_verify(p, back, 10, 1e-9, &mut d) }, DaqcStatus::Ok);
    unsafe {
        daqc_schedule_free(back);
        daqc_schedule_free(s);
        daqc_problem_free(p);
    }
}

#[test]
fn status_codes_follow_cli_exit_codes() {
    assert_eq!(DaqcStatus::Ok as i32, 0);
    assert_eq!(DaqcStatus::Invalid as i32, 1);
    assert_eq!(DaqcStatus::Unschedulable as i32, 2);
    assert_eq!(DaqcStatus::VerifyFail as i32, 3);
    assert_eq!(DaqcStatus::ResourceLimit as i32, 4);
}

#[test]
fn invalid_input_sets_message() {
    assert_eq!(problem("{").unwrap_err(), DaqcStatus::Invalid);
    assert!(!last_error().is_empty());
    let reversed = r#"{"num_qubits":3,"resource_couplings":[1,1],"target":{"type":"ata","couplings":[{"i":2,"j":0,"value":1}]},"t_f":1}"#;
    assert_eq!(problem(reversed).unwrap_err(), DaqcStatus::Invalid);
}

#[test]
fn zero_slot_is_unschedulable() {
    let p = problem(r#"{"num_qubits":3,"resource_couplings":[1,0],"target":{"type":"nn","angles":[0.1,0.2]},"t_f":1}"#)
        .unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { daqc_compile(p, 1e-12, &mut out) }, DaqcStatus::Unschedulable);
    assert!(out.is_null());
    assert!(last_error().contains("slot 1"), "{}", last_error());
    unsafe { daqc_problem_free(p) };
}

#[test]
fn verify_failures() {
    let p = problem(ATA4).unwrap();
    let s = compiled(p);
    let mut text = to_json(s);
    // Perturb the first duration's leading digit.
    let at = text.find("\"duration\": ").unwrap() + "\"duration\": ".len();
    let digit = text.as_bytes()[at];
    let swapped = if digit == b'9' { "8" } else { "9" };
    text.replace_range(at..at + 1, swapped);
    let c_text = CString::new(text).unwrap();
    let mut bad = ptr::null_mut();
    assert_eq!(unsafe { daqc_schedule_from_json(c_text.as_ptr(), &mut bad) }, DaqcStatus::Ok);
    let mut d = f64::NAN;
    assert_eq!(unsafe { daqc_verify(p, bad, 10, 1e-9, &mut d) }, DaqcStatus::VerifyFail);
    assert!(d > 1e-9);

    // Four qubits exceed a cap of three.
    assert_eq!(unsafe { daqc_verify(p, s, 3, 1e-9, &mut d) }, DaqcStatus::ResourceLimit);

    let other = problem(r#"{"num_qubits":2,"resource_couplings":[1],"target":{"type":"nn","angles":[0.1]},"t_f":1}"#)
        .unwrap();
    assert_eq!(unsafe { daqc_verify(other, s, 10, 1e-9, &mut d) }, DaqcStatus::Invalid);
    unsafe {
        daqc_problem_free(other);
        daqc_schedule_free(bad);
        daqc_schedule_free(s);
        daqc_problem_free(p);
    }
}

#[test]
fn null_pointers_are_rejected() {
    let mut p_out = ptr::null_mut();
    assert_eq!(unsafe { daqc_problem_from_json(ptr::null(), &mut p_out) }, DaqcStatus::NullPointer);
    assert!(last_error().contains("json"));
    let text = CString::new(ATA4).unwrap();
    assert_eq!(
        unsafe { daqc_problem_from_json(text.as_ptr(), ptr::null_mut()) },
        DaqcStatus::NullPointer
    );
    let mut s_out = ptr::null_mut();
    assert_eq!(unsafe { daqc_compile(ptr::null(), 0.0, &mut s_out) }, DaqcStatus::NullPointer);
    let mut n = 0;
    assert_eq!(unsafe { daqc_schedule_block_count(ptr::null(), &mut n) }, DaqcStatus::NullPointer);
    let mut d = 0.0;
    assert_eq!(unsafe { daqc_verify(ptr::null(), ptr::null(), 10, 1e-9, &mut d) }, DaqcStatus::NullPointer);
    assert_eq!(unsafe { daqc_problem_num_qubits(ptr::null()) }, 0);
    // Freeing null is a no-op.
    unsafe {
        daqc_problem_free(ptr::null_mut());
        daqc_schedule_free(ptr::null_mut());
        daqc_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(daqc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/ising_daqc.h")).unwrap();
    assert!(header.contains("#ifndef ISING_DAQC_H"));
    assert!(header.contains("typedef struct DaqcProblem DaqcProblem;"));
    assert!(header.contains("DAQC_STATUS_VERIFY_FAIL = 3"));
    for f in [
        "daqc_last_error_message",
        "daqc_version",
        "daqc_problem_from_json",
        "daqc_problem_free",
        "daqc_problem_num_qubits",
        "daqc_compile",
        "daqc_schedule_from_json",
        "daqc_schedule_free",
        "daqc_schedule_to_json",
        "daqc_string_free",
        "daqc_schedule_block_count",
        "daqc_schedule_total_time",
        "daqc_verify",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
}
