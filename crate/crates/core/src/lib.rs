//! Golden-ratio arithmetic and the tangent–secant scene.
//!
//! When a tangent and a secant leave the same external point and the
//! tangent is as long as the chord the secant cuts, the tangent-to-outside
//! and secant-to-tangent ratios are both the golden ratio, and conversely.
//! This crate provides:
//!
//! * [`exact_field`]: exact rationals and Q(√5), φ, a sum/product quadratic
//!   solver, Fibonacci ratios and continued-fraction convergents;
//! * [`geometry`]: the scene itself, its coordinates, and measured angles;
//! * [`solver`]: the angle relations of the golden scene and a bracketed
//!   solver for `α` given the chord-to-diameter ratio.

pub mod exact_field;
pub mod geometry;
pub mod solver;

pub use exact_field::{phi_constant, FieldError, QuadExt, Rational};
pub use geometry::{
    measure_angles, measure_chords, realize, theorem_check, AngleTriple, GeometryError,
    Realization, TangentSecantConfig, TheoremCheck, PHI,
};
pub use solver::{
    alpha_oracle, solve_alpha, sweep, GoldenSolveResult, RhoParam, SolverError, SweepSeries,
};
