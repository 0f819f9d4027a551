//! Command-line front end. Every subcommand prints a JSON report on
//! stdout and exits 0 on pass, 1 on fail, 2 on bad input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lietorus::involutions::{
    decide_chevalley_existence, oracle_search_pre_chevalley, synthesize_chevalley, verify_chevalley,
    CoordinateDescriptor, InvolutionJson, OracleOutcome,
};
use lietorus::scalars::{format_rational, QuantumMatrixJson};
use lietorus::verify::{
    verify_coordinate_recovery, verify_division, verify_lie_torus, verify_root_grading, verify_torus_axioms,
};
use lietorus::{Check, CheckReport, Error, OctonionTorus, QuantumMatrix, QuantumTorus, Result};

#[derive(Parser)]
#[command(name = "lietorus", version, about = "Chevalley involutions and axiom checks for type-A Lie tori")]
struct Cli {
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree window [-W, W]^n; each suite has its own default.
    #[arg(long, global = true)]
    window: Option<i64>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a quantum matrix and report whether it is elementary.
    CheckMatrix { q: PathBuf },
    /// Decide whether the Lie torus admits a Chevalley involution.
    Decide {
        #[arg(required_unless_present = "octonion", conflicts_with = "octonion")]
        q: Option<PathBuf>,
        /// Use the octonion torus of this rank instead of a quantum torus.
        #[arg(long)]
        octonion: Option<usize>,
        #[arg(long, default_value_t = 2)]
        ell: usize,
    },
    /// Write the Chevalley involution X ↦ −(X̄)ᵀ of sl_{ℓ+1}(K_q).
    Synthesize {
        q: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check the six Chevalley-involution properties of a synthesized file.
    VerifyInvolution { involution: PathBuf },
    /// Run the axiom suites.
    VerifyAxioms {
        #[arg(required_unless_present = "octonion")]
        q: Option<PathBuf>,
        /// Check the octonion torus of this rank (torus suite only).
        #[arg(long, conflicts_with = "q")]
        octonion: Option<usize>,
        #[arg(long, default_value_t = 2)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Recover the multiplication and anti-involution from Lie brackets.
    ExtractCoordinates {
        q: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Number of seeded monomial pairs.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Brute-force search for a pre-Chevalley anti-involution.
    Oracle { q: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Rg,
    Div,
    Lie,
    Torus,
    All,
}

fn read_matrix_json(path: &Path) -> Result<QuantumMatrixJson> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn read_matrix(path: &Path) -> Result<QuantumMatrix> {
    read_matrix_json(path)?.to_matrix()
}

fn check_matrix(path: &Path) -> Result<CheckReport> {
    let started = Instant::now();
    let raw = read_matrix_json(path)?;
    let entries = raw.parse_entries()?;
    let mut report = CheckReport::new("check-matrix", None);
    match QuantumMatrix::new(entries) {
        Ok(q) => {
            report.push(Check::passed("constraints", q.n() * q.n()));
            report.reason = Some(match q.first_non_elementary() {
                None => "elementary".into(),
                Some((i, j)) => {
                    format!("not elementary: q_{}{} = {} is not ±1", i + 1, j + 1, format_rational(q.entry(i, j)))
                }
            });
        }
        Err(Error::ConstraintViolation(msg)) => {
            report.push(Check::failed("constraints", raw.n * raw.n, msg, Some(serde_json::to_value(&raw)?)));
        }
        Err(e) => return Err(e),
    }
    Ok(report.finish(started))
}

fn decide(q: Option<&Path>, octonion: Option<usize>, ell: usize) -> Result<CheckReport> {
    let started = Instant::now();
    let coords = match (q, octonion) {
        (_, Some(rank)) => CoordinateDescriptor::Octonion { rank },
        (Some(path), None) => CoordinateDescriptor::Quantum(read_matrix(path)?),
        (None, None) => return Err(Error::InvalidInput("a matrix file or --octonion is required".into())),
    };
    let decision = decide_chevalley_existence(&coords, ell)?;
    let mut report = CheckReport::new("decide", None);
    report.exists = Some(decision.exists);
    report.reason = Some(decision.reason);
    Ok(report.finish(started))
}

fn synthesize(q: &Path, ell: usize, output: &Path, window: i64) -> Result<CheckReport> {
    let started = Instant::now();
    let q = read_matrix(q)?;
    let mut report = CheckReport::new("synthesize", Some(window));
    match synthesize_chevalley(ell, &q) {
        Ok(desc) => {
            // Brackets of window elements reach degrees up to 2W.
            let file = InvolutionJson::from_descriptor(&desc, Some(2 * window))?;
            fs::write(output, serde_json::to_string_pretty(&file)?)?;
            report.exists = Some(true);
            report.reason = Some(format!("wrote {}", output.display()));
        }
        Err(Error::NotElementary { i, j, value }) => {
            report.exists = Some(false);
            report.reason = Some(format!("q_{i}{j} = {value} is not ±1"));
        }
        Err(e) => return Err(e),
    }
    Ok(report.finish(started))
}

fn verify_involution(path: &Path, window: i64) -> Result<CheckReport> {
    let file: InvolutionJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    let desc = file.to_descriptor()?;
    verify_chevalley(&desc, &desc.lie, window)
}

fn verify_axioms(
    q: Option<&Path>,
    octonion: Option<usize>,
    ell: usize,
    suite: Suite,
    window: Option<i64>,
    seed: u64,
) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = CheckReport::new("verify-axioms", window);
    if let Some(rank) = octonion {
        if !matches!(suite, Suite::Torus | Suite::All) {
            return Err(Error::InvalidInput("--octonion only supports the torus suite".into()));
        }
        report.extend(verify_torus_axioms(&OctonionTorus::new(rank)?, window.unwrap_or(2), seed)?);
        return Ok(report.finish(started));
    }
    let path = q.ok_or_else(|| Error::InvalidInput("a matrix file is required".into()))?;
    let q = read_matrix(path)?;
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Rg) {
        report.extend(verify_root_grading(ell, &q, window.unwrap_or(1))?);
    }
    if wants(Suite::Div) {
        report.extend(verify_division(ell, &q, window.unwrap_or(2))?);
    }
    if wants(Suite::Lie) {
        report.extend(verify_lie_torus(ell, &q, window.unwrap_or(1), seed)?);
    }
    if wants(Suite::Torus) {
        report.extend(verify_torus_axioms(&QuantumTorus::new(q), window.unwrap_or(2), seed)?);
    }
    Ok(report.finish(started))
}

fn oracle(path: &Path, window: i64) -> Result<CheckReport> {
    let started = Instant::now();
    let q = read_matrix(path)?;
    let mut report = CheckReport::new("oracle", Some(window));
    let outcome = oracle_search_pre_chevalley(&q, window)?;
    let found = outcome.table().is_some();
    report.exists = Some(found);
    report.reason = Some(match &outcome {
        OracleOutcome::Found(_) => format!("a solution exists on [-{window}, {window}]^{}", q.n()),
        OracleOutcome::NoSolution { lhs, rhs } => {
            format!("t(λ,μ) s(λ+μ) = s(λ) s(μ) t(μ,λ) has no solution at λ = {lhs}, μ = {rhs}")
        }
    });
    let check = if found == q.is_elementary() {
        Check::passed("agrees_with_decision", 1)
    } else {
        Check::failed(
            "agrees_with_decision",
            1,
            format!("oracle found={found} but elementary={}", q.is_elementary()),
            Some(json!({ "q": q })),
        )
    };
    report.push(check);
    Ok(report.finish(started))
}

fn run(cli: Cli) -> Result<CheckReport> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    let window = cli.window;
    match &cli.command {
        Command::CheckMatrix { q } => check_matrix(q),
        Command::Decide { q, octonion, ell } => decide(q.as_deref(), *octonion, *ell),
        Command::Synthesize { q, ell, output } => synthesize(q, *ell, output, window.unwrap_or(2)),
        Command::VerifyInvolution { involution } => verify_involution(involution, window.unwrap_or(2)),
        Command::VerifyAxioms { q, octonion, ell, suite } => {
            verify_axioms(q.as_deref(), *octonion, *ell, *suite, window, cli.seed)
        }
        Command::ExtractCoordinates { q, ell, samples } => {
            verify_coordinate_recovery(*ell, &read_matrix(q)?, window.unwrap_or(2), cli.seed, *samples)
        }
        Command::Oracle { q } => oracle(q, window.unwrap_or(2)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.window.is_some_and(|w| w < 0) {
        eprintln!("error: --window must be nonnegative");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(report) => {
            let written = serde_json::to_string_pretty(&report)
                .map_err(Error::from)
                .and_then(|text| Ok(writeln!(std::io::stdout(), "{text}")?));
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
