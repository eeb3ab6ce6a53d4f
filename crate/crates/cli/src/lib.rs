//! `mcsynth`: synthesize, verify, benchmark and export multi-controlled gate circuits.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod gate;

use bench_harness::{check, run_family, synthesize, write_csv, BenchError, BenchParams, Family};
use circuit_ir::{export, parse_json, AncillaRole, Circuit, DecompReport, Format, Mat2f};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mcsynth", version, about = "Multi-controlled gate synthesis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a circuit on stdout and its resource report on stderr
    Synth {
        #[command(subcommand)]
        target: Target,
        #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
        format: FormatArg,
    },
    /// Re-synthesize and check against the simulator
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// CSV of counts and depths over a range of control counts
    Bench(BenchArgs),
    /// Convert a JSON circuit to another format
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Qasm3)]
        format: FormatArg,
    },
}

#[derive(Subcommand, Debug, Clone)]
enum Target {
    Mcx {
        #[arg(long)]
        controls: usize,
        #[arg(long, value_enum, default_value_t = AncillaArg::Clean)]
        ancilla: AncillaArg,
    },
    McmtX {
        #[arg(long)]
        controls: usize,
        #[arg(long)]
        targets: usize,
    },
    McmtSu2 {
        #[arg(long)]
        controls: usize,
        #[arg(long)]
        targets: usize,
        #[arg(long, value_parser = gate::parse_gate)]
        gate: Mat2f,
    },
    ApproxU {
        #[arg(long)]
        controls: usize,
        #[arg(long, value_parser = gate::parse_gate)]
        gate: Mat2f,
        #[arg(long)]
        epsilon: f64,
    },
}

#[derive(clap::Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    step: usize,
    #[arg(long, default_value_t = 1)]
    targets: usize,
    #[arg(long, value_parser = gate::parse_gate, default_value = "x")]
    gate: Mat2f,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FormatArg {
    Qasm2,
    Qasm3,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
enum AncillaArg {
    Clean,
    Dirty,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verify(String),
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Verification { .. } => Failure::Verify(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

impl Target {
    fn family(&self) -> (Family, usize, BenchParams) {
        let d = BenchParams::default();
        match *self {
            Target::Mcx { controls, ancilla } => {
                let f = if ancilla == AncillaArg::Clean { Family::McxClean } else { Family::McxDirty };
                (f, controls, d)
            }
            Target::McmtX { controls, targets } => (Family::McmtX, controls, BenchParams { m: targets, ..d }),
            Target::McmtSu2 { controls, targets, gate } => {
                (Family::McmtSu2, controls, BenchParams { m: targets, gate, ..d })
            }
            Target::ApproxU { controls, gate, epsilon } => {
                (Family::ApproxU, controls, BenchParams { gate, epsilon, ..d })
            }
        }
    }
}

fn report_line(r: &DecompReport) -> String {
    let kind = match (r.ancillas, r.ancilla_kind) {
        (0, _) => "none",
        (_, Some(AncillaRole::Clean)) => "clean",
        (_, Some(AncillaRole::Dirty)) => "dirty",
        (_, None) => "mixed",
    };
    format!(
        "cnot={} gates={} depth={} qubits={} ancillas={} ancilla_kind={kind}",
        r.cx, r.gates, r.depth, r.qubits, r.ancillas
    )
}

fn emit(c: &Circuit, f: FormatArg) -> Result<String, Failure> {
    let text = match f {
        FormatArg::Json => export(c, Format::Json),
        FormatArg::Qasm2 => export(&c.lower(), Format::Qasm2),
        FormatArg::Qasm3 => export(&c.lower(), Format::Qasm3),
    };
    text.map_err(usage)
}

fn synth(target: &Target, format: FormatArg, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let (family, n, p) = target.family();
    let (circuit, extra) = if family == Family::ApproxU {
        let s = approx_u2::approx_mcu(n, &p.gate, p.epsilon).map_err(usage)?;
        let q = s.params;
        let extra =
            format!(" n_b={} n_e={} theta={:.6} alpha={:.6} epsilon={}", q.n_b, q.n_e, q.theta, q.alpha, q.epsilon);
        (s.circuit, extra)
    } else {
        (synthesize(family, n, &p)?, String::new())
    };
    let text = emit(&circuit, format)?;
    writeln!(out, "{}", text.trim_end()).map_err(usage)?;
    writeln!(err, "{}{extra}", report_line(&circuit.report())).map_err(usage)?;
    Ok(())
}

fn verify(target: &Target, out: &mut dyn Write) -> Result<(), Failure> {
    let (family, n, p) = target.family();
    let r = check(family, n, &p)?;
    let line = format!("{family} n={n} distance={:e} tol={:e}", r.distance, r.tol);
    if r.passed {
        writeln!(out, "pass {line}").map_err(usage)?;
        Ok(())
    } else {
        Err(Failure::Verify(format!("fail {line}")))
    }
}

fn bench(a: &BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let family: Family = a.family.parse()?;
    if a.step == 0 {
        return Err(usage("--step must be positive"));
    }
    if a.n_min > a.n_max {
        return Err(BenchError::EmptyRange(a.n_min, a.n_max).into());
    }
    let ns: Vec<usize> = (a.n_min..=a.n_max).step_by(a.step).collect();
    let p = BenchParams { m: a.targets, gate: a.gate, epsilon: a.epsilon, verify: a.verify };
    let rows = run_family(family, &ns, &p)?;
    match &a.out {
        Some(path) => write_csv(std::fs::File::create(path).map_err(usage)?, &rows)?,
        None => write_csv(out, &rows)?,
    }
    Ok(())
}

fn convert(input: &PathBuf, format: FormatArg, out: &mut dyn Write) -> Result<(), Failure> {
    let text = std::fs::read_to_string(input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    let c = parse_json(&text).map_err(usage)?;
    writeln!(out, "{}", emit(&c, format)?.trim_end()).map_err(usage)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return e.exit_code();
        }
    };
    let res = match &cli.command {
        Command::Synth { target, format } => synth(target, *format, out, err),
        Command::Verify { target } => verify(target, out),
        Command::Bench(a) => bench(a, out),
        Command::Export { input, format } => convert(input, *format, out),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify(m)) => {
            let _ = writeln!(err, "{m}");
            EXIT_VERIFY
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
    }
}
