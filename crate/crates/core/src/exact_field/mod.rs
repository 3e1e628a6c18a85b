//! Exact arithmetic over the rationals and over Q(√5).
//!
//! Everything here is exact: the golden-ratio identities are checked by
//! structural equality, never by tolerance.

mod quad;
mod quadratic;
mod rational;
mod sequence;

pub use quad::QuadExt;
pub use quadratic::{solve_quadratic_loh, QuadraticError, QuadraticRoots};
pub use rational::Rational;
pub use sequence::{cf_convergent, fib_ratio, fibonacci, MAX_FIB_INDEX};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("fibonacci overflow: F({index}) exceeds the supported range (index <= {max})", max = MAX_FIB_INDEX)]
    FibonacciOverflow { index: u32 },
    #[error("fibonacci ratio needs n >= 1")]
    RatioIndexZero,
}

/// The golden ratio `(1 + √5)/2`.
pub fn phi_constant() -> QuadExt {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    QuadExt::new(half.clone(), half)
}

/// True iff `x² − x − 1 = 0` holds exactly.
pub fn golden_identity_check(x: &QuadExt) -> bool {
    (x.square() - x - QuadExt::one()).is_zero()
}
