//! Command-line front end for `golden-secant`.
//!
//! Every subcommand is a pure function from validated options to a text
//! report (and, for `sweep` and `diagram`, a file). [`run`] parses argv,
//! dispatches, and maps failures onto [`ExitStatus`].

pub mod curve;
pub mod diagram;

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use golden_secant::exact_field::{
    fib_ratio, fibonacci, golden_identity_check, phi_constant, FieldError, QuadExt,
};
use golden_secant::geometry::{
    measure_chords, realize, theorem_check, GeometryError, TangentSecantConfig,
};
use golden_secant::solver::{self, RhoParam, SolverError};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus(pub i32);

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus(0);
    /// Domain or precondition failure, including I/O.
    pub const FAILURE: ExitStatus = ExitStatus(1);
    /// Malformed command line.
    pub const USAGE: ExitStatus = ExitStatus(2);
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{0}")]
    Domain(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("curve file: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "golden-secant",
    version,
    about = "Golden-ratio tools and the tangent-secant golden scene"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Print φ exactly and check φ² − φ − 1 = 0
    Phi,
    /// Print F(n) and the ratio F(n+1)/F(n)
    Fib {
        #[arg(long)]
        n: u32,
    },
    /// Solve for the golden-scene angles at a chord/diameter ratio
    Solve {
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        /// Report angles in radians instead of degrees
        #[arg(long)]
        radians: bool,
        #[arg(long, default_value_t = solver::DEFAULT_TOL, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Check that chord = tangent and tangent/outside = φ agree for a scene
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[arg(long, default_value_t = VERIFY_DEFAULT_TOL, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Write the β₁/β₂ curves to a comma-separated file
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw the golden scene as SVG
    Diagram {
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Relative tolerance for `verify`: command-line lengths are typed to a
/// handful of digits, so the library's 1e-9 would reject `0.618034`.
pub const VERIFY_DEFAULT_TOL: f64 = 1e-6;

/// Parses argv (including the program name) into a [`Command`].
pub fn parse_command<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv).map(|cli| cli.command)
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(CliError::Domain(format!(
            "invalid tolerance {tol} (must be positive)"
        )))
    }
}

/// Checks every numeric option against the preconditions of the operation
/// it feeds.
pub fn validate(cmd: &Command) -> Result<(), CliError> {
    match *cmd {
        Command::Phi | Command::Fib { .. } => Ok(()),
        Command::Solve { rho, tol, .. } => {
            RhoParam::new(rho)?;
            check_tol(tol)
        }
        Command::Verify { b, c, r, tol } => {
            TangentSecantConfig::new(b, c, r)?;
            check_tol(tol)
        }
        Command::Sweep { rho, n, .. } => {
            RhoParam::new(rho)?;
            if n < 2 {
                return Err(SolverError::TooFewPoints(n.max(0) as usize).into());
            }
            Ok(())
        }
        Command::Diagram { rho, .. } => RhoParam::new(rho).map(|_| ()).map_err(Into::into),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleUnit {
    Degrees,
    Radians,
}

pub fn run_phi() -> String {
    let phi = phi_constant();
    let mut out = String::new();
    writeln!(out, "phi = (1+√5)/2").unwrap();
    writeln!(out, "phi = {phi}").unwrap();
    writeln!(out, "phi ≈ {:.15}", phi.to_f64()).unwrap();
    if golden_identity_check(&phi) {
        writeln!(out, "phi^2 - phi - 1 = 0 (exact)").unwrap();
    } else {
        writeln!(out, "phi^2 - phi - 1 != 0").unwrap();
    }
    let inv = phi.inverse().expect("phi is nonzero");
    if inv == &phi - &QuadExt::one() {
        writeln!(out, "1/phi = phi - 1 (exact)").unwrap();
    }
    out
}

pub fn run_fib(n: u32) -> Result<String, CliError> {
    let mut out = String::new();
    writeln!(out, "F({n}) = {}", fibonacci(n)?).unwrap();
    if n == 0 {
        writeln!(out, "F(1)/F(0) undefined").unwrap();
    } else {
        let ratio = fib_ratio(n)?;
        writeln!(
            out,
            "F({})/F({n}) = {ratio} = {:.10}",
            n + 1,
            ratio.to_f64()
        )
        .unwrap();
    }
    Ok(out)
}

/// Solves at `rho` and reports the angles together with the lengths of the
/// scene scaled so that the tangent (and chord) is 1.
pub fn run_solve(rho: f64, unit: AngleUnit, tol: f64) -> Result<String, CliError> {
    check_tol(tol)?;
    let rho = RhoParam::new(rho)?;
    let res = solver::solve_alpha(rho, tol)?;

    let chord = 1.0;
    let scene = TangentSecantConfig::golden(chord, chord / (2.0 * rho.value()))?;
    let chords = measure_chords(&realize(&scene));

    let mut out = String::new();
    writeln!(out, "rho={}", rho.value()).unwrap();
    match unit {
        AngleUnit::Degrees => {
            writeln!(out, "alpha_deg={:.3}", res.alpha.to_degrees()).unwrap();
            writeln!(out, "beta_deg={:.3}", res.beta.to_degrees()).unwrap();
            writeln!(out, "gamma_deg={:.3}", res.gamma.to_degrees()).unwrap();
        }
        AngleUnit::Radians => {
            writeln!(out, "alpha={:.5}", res.alpha).unwrap();
            writeln!(out, "beta={:.5}", res.beta).unwrap();
            writeln!(out, "gamma={:.5}", res.gamma).unwrap();
        }
    }
    for (name, value) in [
        ("a", scene.tangent()),
        ("b", scene.outside_secant()),
        ("c", scene.chord()),
        ("s", scene.secant()),
        ("r", scene.radius()),
        ("m", chords.m),
        ("n", chords.n),
        ("a/b", scene.tangent() / scene.outside_secant()),
        ("s/a", scene.secant() / scene.tangent()),
    ] {
        writeln!(out, "{name}={value:.9}").unwrap();
    }
    writeln!(out, "phi_residual={:.3e}", res.phi_residual).unwrap();
    writeln!(out, "curve_gap={:.3e}", res.curve_gap).unwrap();
    writeln!(out, "power_residual={:.3e}", scene.power_residual()).unwrap();
    writeln!(out, "iterations={}", res.iterations).unwrap();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub text: String,
    pub agrees: bool,
}

pub fn run_verify(b: f64, c: f64, r: f64, tol: f64) -> Result<VerifyReport, CliError> {
    check_tol(tol)?;
    let cfg = TangentSecantConfig::new(b, c, r)?;
    let check = theorem_check(&cfg, tol);
    let mut text = String::new();
    for (name, value) in [
        ("a", cfg.tangent()),
        ("s", cfg.secant()),
        ("a/b", cfg.tangent() / cfg.outside_secant()),
    ] {
        writeln!(text, "{name}={value:.9}").unwrap();
    }
    writeln!(text, "chord_equals_tangent={}", check.chord_equals_tangent).unwrap();
    writeln!(text, "ratio_is_golden={}", check.ratio_is_golden).unwrap();
    if check.agrees() {
        writeln!(text, "golden={}", check.ratio_is_golden).unwrap();
    }
    writeln!(text, "power_residual={:.3e}", cfg.power_residual()).unwrap();
    writeln!(text, "tol={tol:e}").unwrap();
    Ok(VerifyReport {
        text,
        agrees: check.agrees(),
    })
}

/// Writes the curve file and reports the sign-change bracket as re-read
/// from the file itself.
pub fn run_sweep(rho: f64, n: i64, out_path: &Path) -> Result<String, CliError> {
    let rho = RhoParam::new(rho)?;
    if n < 2 {
        return Err(SolverError::TooFewPoints(n.max(0) as usize).into());
    }
    let series = solver::sweep(rho, n as usize)?;
    {
        let mut file = BufWriter::new(File::create(out_path)?);
        curve::write_curve(&series, &mut file)?;
        file.flush()?;
    }
    let rows = curve::read_curve(File::open(out_path)?)?;

    let mut out = String::new();
    writeln!(out, "wrote {} rows to {}", rows.len(), out_path.display()).unwrap();
    let changes = curve::rows_sign_changes(&rows);
    writeln!(out, "sign_changes={changes}").unwrap();
    match curve::rows_bracket(&rows) {
        Some((lo, hi)) => {
            writeln!(
                out,
                "bracket_deg={},{}",
                curve::format_significant(lo, curve::SIGNIFICANT_DIGITS),
                curve::format_significant(hi, curve::SIGNIFICANT_DIGITS)
            )
            .unwrap();
            Ok(out)
        }
        None => Err(CliError::Domain(format!(
            "expected exactly one sign change of beta1 - beta2, found {changes}"
        ))),
    }
}

pub fn run_diagram(rho: f64, out_path: &Path) -> Result<String, CliError> {
    let rho = RhoParam::new(rho)?;
    let radius = 1.0;
    let scene = TangentSecantConfig::golden(2.0 * radius * rho.value(), radius)?;
    let svg = diagram::render_svg(&realize(&scene));
    std::fs::write(out_path, svg.as_bytes())?;
    Ok(format!("wrote {}\n", out_path.display()))
}

fn dispatch(cmd: &Command, err: &mut dyn Write) -> Result<(String, ExitStatus), CliError> {
    validate(cmd)?;
    let text = match cmd {
        Command::Phi => run_phi(),
        Command::Fib { n } => run_fib(*n)?,
        Command::Solve { rho, radians, tol } => {
            let unit = if *radians {
                AngleUnit::Radians
            } else {
                AngleUnit::Degrees
            };
            run_solve(*rho, unit, *tol)?
        }
        Command::Verify { b, c, r, tol } => {
            let report = run_verify(*b, *c, *r, *tol)?;
            if !report.agrees {
                writeln!(
                    err,
                    "error: theorem equivalence violated: chord = tangent and a/b = phi disagree"
                )?;
                return Ok((report.text, ExitStatus::FAILURE));
            }
            report.text
        }
        Command::Sweep { rho, n, out } => run_sweep(*rho, *n, out)?,
        Command::Diagram { rho, out } => run_diagram(*rho, out)?,
    };
    Ok((text, ExitStatus::SUCCESS))
}

/// Runs a full invocation: reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cmd = match parse_command(argv) {
        Ok(cmd) => cmd,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return if e.exit_code() == 0 {
                ExitStatus::SUCCESS
            } else {
                ExitStatus::USAGE
            };
        }
    };
    match dispatch(&cmd, err) {
        Ok((text, status)) => {
            if let Err(e) = out.write_all(text.as_bytes()) {
                let _ = writeln!(err, "error: {e}");
                return ExitStatus::FAILURE;
            }
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::FAILURE
        }
    }
}
