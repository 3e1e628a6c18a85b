//! Locating the golden configuration by angle.
//!
//! For a chord-to-diameter ratio `ρ = c/2r` the angle `β` of a golden scene
//! can be written two ways as a function of `α`:
//!
//! * from the inscribed triangle, `β₁ = (arcsin ρ − α)/2`;
//! * from the upper triangle with `a/b = φ`, `sin²β₂ = (ρ/φ)·sin α`.
//!
//! The golden `α` is where the two curves cross. [`solve_alpha`] brackets
//! that crossing on `[0, arcsin ρ]` and bisects; [`alpha_oracle`] gives the
//! same angle in closed form from the constructed scene.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

use crate::geometry::PHI;

/// Default bisection tolerance on `α`, in radians.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Hard cap on bisection steps.
pub const MAX_ITERATIONS: u32 = 200;

/// Inset from the bracket ends used by [`sweep`], in radians.
pub const SWEEP_EPSILON: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("chord exceeds diameter: c/2r = {0} > 1")]
    ChordExceedsDiameter(f64),
    #[error("invalid chord/diameter ratio {0} (must be in (0, 1])")]
    InvalidRatio(f64),
    #[error("invalid tolerance {0} (must be positive)")]
    InvalidTolerance(f64),
    #[error("empty bracket: alpha = {alpha} outside [0, arcsin(rho)] = [0, {limit}]")]
    EmptyBracket { alpha: f64, limit: f64 },
    #[error("outside domain: {0}")]
    OutsideDomain(String),
    #[error("division by zero sine")]
    ZeroSine,
    #[error("no golden configuration found: no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),
}

/// Chord-to-diameter ratio in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RhoParam(f64);

impl RhoParam {
    pub fn new(rho: f64) -> Result<Self, SolverError> {
        if rho.is_nan() || rho <= 0.0 {
            return Err(SolverError::InvalidRatio(rho));
        }
        if rho > 1.0 {
            return Err(SolverError::ChordExceedsDiameter(rho));
        }
        Ok(RhoParam(rho))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Upper end of the `α` bracket, `arcsin ρ`.
    pub fn alpha_limit(self) -> f64 {
        self.0.asin()
    }
}

/// `β₁ = (arcsin ρ − α)/2`, valid for `0 ≤ α ≤ arcsin ρ`.
pub fn beta1(alpha: f64, rho: RhoParam) -> Result<f64, SolverError> {
    let limit = rho.alpha_limit();
    if !(0.0..=limit).contains(&alpha) {
        return Err(SolverError::EmptyBracket { alpha, limit });
    }
    Ok(0.5 * (limit - alpha))
}

/// `β₂ = arcsin √((ρ/φ)·sin α)`, principal branch.
pub fn beta2(alpha: f64, rho: RhoParam) -> Result<f64, SolverError> {
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(SolverError::OutsideDomain(format!(
            "alpha = {alpha} outside [0, pi/2]"
        )));
    }
    let arg = rho.value() / PHI * alpha.sin();
    if arg > 1.0 {
        return Err(SolverError::OutsideDomain(format!(
            "radical argument {arg} > 1"
        )));
    }
    Ok(arg.sqrt().asin())
}

/// `sin(α + β)/sin β − φ`; zero for a golden scene.
pub fn phi_residual(alpha: f64, beta: f64) -> Result<f64, SolverError> {
    let denom = beta.sin();
    if denom == 0.0 {
        return Err(SolverError::ZeroSine);
    }
    Ok((alpha + beta).sin() / denom - PHI)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenSolveResult {
    pub rho: RhoParam,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub iterations: u32,
    /// `|β₁ − β₂|` at the returned `α`.
    pub curve_gap: f64,
    pub phi_residual: f64,
}

fn curve_gap(alpha: f64, rho: RhoParam) -> Result<f64, SolverError> {
    Ok(beta1(alpha, rho)? - beta2(alpha, rho)?)
}

pub fn solve_alpha(rho: RhoParam, tol: f64) -> Result<GoldenSolveResult, SolverError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(SolverError::InvalidTolerance(tol));
    }
    let (mut lo, mut hi) = (0.0, rho.alpha_limit());
    let g_lo = curve_gap(lo, rho)?;
    let g_hi = curve_gap(hi, rho)?;
    if g_lo.signum() == g_hi.signum() || g_lo == 0.0 || g_hi == 0.0 {
        return Err(SolverError::NoSignChange { lo, hi });
    }

    // stop once the bracket and the curve gap are both within tolerance
    let mut iterations = 0;
    let mut alpha = 0.5 * (lo + hi);
    let mut gap = curve_gap(alpha, rho)?;
    while (0.5 * (hi - lo) > tol || gap.abs() > tol) && iterations < MAX_ITERATIONS {
        if gap == 0.0 {
            break;
        }
        if gap.signum() == g_lo.signum() {
            lo = alpha;
        } else {
            hi = alpha;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        alpha = mid;
        gap = curve_gap(alpha, rho)?;
    }

    let beta = beta1(alpha, rho)?;
    Ok(GoldenSolveResult {
        rho,
        alpha,
        beta,
        gamma: std::f64::consts::PI - alpha - beta,
        iterations,
        curve_gap: gap.abs(),
        phi_residual: phi_residual(alpha, beta)?,
    })
}

/// Closed-form golden `α` from the constructed scene.
///
/// With `c = a = 2rρ` the centre sits at distance `d = r·√(1 + 4ρ²)` from
/// `p` and height `h = r·√(1 − ρ²)` above the secant; the tangent makes
/// angle `arcsin(r/d)` with `pw`, and `pw` makes `arcsin(h/d)` with the
/// secant. The radius cancels.
pub fn alpha_oracle(rho: RhoParam) -> f64 {
    let rho = rho.value();
    let d = (1.0 + 4.0 * rho * rho).sqrt();
    let h = (1.0 - rho * rho).max(0.0).sqrt();
    (1.0 / d).asin() - (h / d).asin()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSample {
    pub alpha: f64,
    pub beta1: f64,
    /// `None` where `β₂` is outside its domain.
    pub beta2: Option<f64>,
}

impl SweepSample {
    pub fn gap(&self) -> Option<f64> {
        self.beta2.map(|b2| self.beta1 - b2)
    }
}

/// Uniform samples of both `β` curves across the open bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSeries {
    pub rho: RhoParam,
    pub samples: Vec<SweepSample>,
}

impl SweepSeries {
    /// Index pairs `(i, j)` of consecutive nonzero gaps with opposite sign;
    /// samples with a zero or missing gap in between are skipped over.
    pub fn sign_changes(&self) -> Vec<(usize, usize)> {
        sign_change_indices(self.samples.iter().map(SweepSample::gap))
    }

    /// The `α` interval of the sign change, when there is exactly one.
    pub fn bracket(&self) -> Option<(f64, f64)> {
        match self.sign_changes().as_slice() {
            [(i, j)] => Some((self.samples[*i].alpha, self.samples[*j].alpha)),
            _ => None,
        }
    }
}

/// Sign-change scan shared by in-memory sweeps and curve files read back
/// from disk.
pub fn sign_change_indices(gaps: impl IntoIterator<Item = Option<f64>>) -> Vec<(usize, usize)> {
    let mut changes = Vec::new();
    let mut last: Option<(usize, f64)> = None;
    for (i, gap) in gaps.into_iter().enumerate() {
        let Some(g) = gap.filter(|g| *g != 0.0 && !g.is_nan()) else {
            continue;
        };
        if let Some((j, prev)) = last {
            if prev.signum() != g.signum() {
                changes.push((j, i));
            }
        }
        last = Some((i, g));
    }
    changes
}

pub fn sweep(rho: RhoParam, n_points: usize) -> Result<SweepSeries, SolverError> {
    if n_points < 2 {
        return Err(SolverError::TooFewPoints(n_points));
    }
    let lo = SWEEP_EPSILON;
    let hi = rho.alpha_limit() - SWEEP_EPSILON;
    if hi <= lo {
        return Err(SolverError::EmptyBracket {
            alpha: lo,
            limit: rho.alpha_limit(),
        });
    }
    let step = (hi - lo) / (n_points - 1) as f64;
    let samples = (0..n_points)
        .map(|i| {
            let alpha = if i == n_points - 1 {
                hi
            } else {
                lo + step * i as f64
            };
            let beta1 = beta1(alpha, rho)?;
            Ok(SweepSample {
                alpha,
                beta1,
                beta2: beta2(alpha, rho).ok(),
            })
        })
        .collect::<Result<Vec<_>, SolverError>>()?;
    Ok(SweepSeries { rho, samples })
}
