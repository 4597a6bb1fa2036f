// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! `compile`, `verify` and `stats` subcommands.
//!
//! Exit codes: 0 success, 1 parse or I/O error, 2 unschedulable target,
//! 3 verification failed, 4 problem too large for the verifier.
//! Reports go to stdout, diagnostics to stderr.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::circuit::{compile, reference_block_count, stats, Circuit, ScheduleStats, Target};
use crate::error::Error;
use crate::scheduler::DEFAULT_EPSILON;
use crate::verifier::{diagonal_distance, phase_distance, DistanceReport, Verifier};

pub use format::{input_hash, Problem, ProblemSpec, ScheduleFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_UNSCHEDULABLE: i32 = 2;
pub const EXIT_VERIFY_FAIL: i32 = 3;
pub const EXIT_RESOURCE_LIMIT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ising-daqc", version, about = "Compile all-to-all ZZ Ising evolutions onto a nearest-neighbour resource chain")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compile a problem file into a schedule file.
    Compile {
        /// Problem file (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Schedule file to write.
        #[arg(long)]
        output: PathBuf,
        /// Blocks shorter than epsilon * t_f are dropped.
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
    },
    /// Compare a schedule against the exact target unitary.
    Verify {
        /// Problem file the schedule was compiled from.
        #[arg(long)]
        input: PathBuf,
        /// Schedule file written by `compile`.
        #[arg(long)]
        schedule: PathBuf,
        /// Pass when the phase-invariant distance is below this.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Refuse to build unitaries on more qubits than this.
        #[arg(long, default_value_t = crate::verifier::DEFAULT_MAX_QUBITS)]
        max_qubits: usize,
    },
    /// Print counts for a schedule.
    Stats {
        /// Problem file the schedule was compiled from.
        #[arg(long)]
        input: PathBuf,
        /// Schedule file written by `compile`.
        #[arg(long)]
        schedule: PathBuf,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unschedulable { .. } => EXIT_UNSCHEDULABLE,
            Error::ResourceLimit { .. } => EXIT_RESOURCE_LIMIT,
            Error::InvalidArgument(_) | Error::DimensionMismatch { .. } => EXIT_PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| io_failure(path, e))
}

fn load_problem(path: &Path) -> Result<(Problem, String), Failure> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    let problem = ProblemSpec::from_json(&text)?.resolve()?;
    Ok((problem, input_hash(&bytes)))
}

fn load_schedule(path: &Path, problem: &Problem) -> Result<(ScheduleFile, Circuit), Failure> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    let file = ScheduleFile::from_json(&text)?;
    if file.num_qubits != problem.num_qubits() {
        return Err(Error::DimensionMismatch {
            left: file.num_qubits,
            right: problem.num_qubits(),
        }
        .into());
    }
    let circuit = file.to_circuit()?;
    Ok((file, circuit))
}

fn warn_on_hash(file: &ScheduleFile, hash: &str, err: &mut dyn Write) {
    if file.metadata.input_hash != hash {
        let _ = writeln!(
            err,
            "warning: schedule was compiled from a different input (hash {})",
            file.metadata.input_hash
        );
    }
}

fn cmd_compile(input: &Path, output: &Path, epsilon: f64, out: &mut dyn Write) -> Result<(), Failure> {
    let (problem, hash) = load_problem(input)?;
    let compiled = compile(&problem.target, &problem.resource, problem.t_f, epsilon)?;
    let file = ScheduleFile::from_circuit(&compiled.circuit, compiled.stats, hash)?;
    std::fs::write(output, file.to_json()?).map_err(|e| io_failure(output, e))?;
    let _ = writeln!(
        out,
        "wrote {} ({} resource blocks, total analog time {:.6e})",
        output.display(),
        compiled.stats.analog_block_count,
        compiled.stats.total_analog_time
    );
    Ok(())
}

/// Distance between the schedule and the problem's exact target.
pub fn verify_schedule(
    problem: &Problem,
    circuit: &Circuit,
    max_qubits: usize,
) -> crate::error::Result<DistanceReport> {
    let verifier = Verifier {
        max_qubits,
        max_diagonal_qubits: max_qubits,
    };
    if problem.num_qubits() > max_qubits {
        return Err(Error::ResourceLimit {
            qubits: problem.num_qubits(),
            cap: max_qubits,
        });
    }
    if let Some(got) = verifier.circuit_diagonal(circuit, Some(&problem.resource))? {
        let edges: Vec<_> = match &problem.target {
            Target::Ata(g) => g.edges().map(|(e, w)| (e, w * problem.t_f)).collect(),
            Target::Nn(a) => a.iter().enumerate().map(|(j, &x)| ((j, j + 1), x)).collect(),
        };
        let want = verifier.zz_diagonal(&edges, problem.num_qubits())?;
        return diagonal_distance(&want, &got);
    }
    let want = verifier.target_unitary(&problem.target, problem.t_f)?;
    let got = verifier.circuit_unitary(circuit, Some(&problem.resource))?;
    phase_distance(&want, &got)
}

fn cmd_verify(
    input: &Path,
    schedule: &Path,
    tol: f64,
    max_qubits: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let (problem, hash) = load_problem(input)?;
    if problem.num_qubits() > max_qubits {
        return Err(Error::ResourceLimit {
            qubits: problem.num_qubits(),
            cap: max_qubits,
        }
        .into());
    }
    let (file, circuit) = load_schedule(schedule, &problem)?;
    warn_on_hash(&file, &hash, err);
    let report = verify_schedule(&problem, &circuit, max_qubits)?;
    let pass = report.distance < tol;
    let _ = writeln!(out, "distance: {:.6e}", report.distance);
    let _ = writeln!(out, "phase: {:.6e}", report.phase);
    let _ = writeln!(out, "tolerance: {tol:.6e}");
    let _ = writeln!(out, "{}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { EXIT_OK } else { EXIT_VERIFY_FAIL })
}

fn cmd_stats(input: &Path, schedule: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let (problem, hash) = load_problem(input)?;
    let (file, circuit) = load_schedule(schedule, &problem)?;
    warn_on_hash(&file, &hash, err);
    let recorded: ScheduleStats = file.metadata.stats.into();
    let mut s = stats(&circuit);
    // Request and iSWAP-layer counts describe earlier stages; only the file knows them.
    s.analog_request_count = recorded.analog_request_count;
    s.iswap_layer_count = recorded.iswap_layer_count;
    let reference = if problem.is_even_ata() {
        reference_block_count(problem.num_qubits())
    } else {
        None
    };

    let _ = writeln!(out, "num_qubits: {}", problem.num_qubits());
    let _ = writeln!(out, "analog_block_count: {}", s.analog_block_count);
    let _ = writeln!(out, "analog_request_count: {}", s.analog_request_count);
    let _ = writeln!(out, "total_analog_time: {:.16e}", s.total_analog_time);
    let _ = writeln!(out, "sqr_count: {}", s.sqr_count);
    let _ = writeln!(out, "iswap_layer_count: {}", s.iswap_layer_count);
    if let Some(r) = reference {
        let _ = writeln!(out, "reference_block_count_5l_minus_12: {r}");
    }
    let json = serde_json::json!({
        "num_qubits": problem.num_qubits(),
        "analog_block_count": s.analog_block_count,
        "analog_request_count": s.analog_request_count,
        "total_analog_time": s.total_analog_time,
        "sqr_count": s.sqr_count,
        "iswap_layer_count": s.iswap_layer_count,
        "reference_block_count": reference,
    });
    let _ = writeln!(out, "{json}");
    Ok(())
}

/// Runs the command line in `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_PARSE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Compile {
            input,
            output,
            epsilon,
        } => cmd_compile(&input, &output, epsilon, out).map(|_| EXIT_OK),
        Command::Verify {
            input,
            schedule,
            tol,
            max_qubits,
        } => cmd_verify(&input, &schedule, tol, max_qubits, out, err),
        Command::Stats { input, schedule } => cmd_stats(&input, &schedule, out, err).map(|_| EXIT_OK),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
