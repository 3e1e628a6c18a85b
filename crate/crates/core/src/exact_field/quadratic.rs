use thiserror::Error;

use super::{QuadExt, Rational};

/// Roots of a monic quadratic written as `symmetry_point ± offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticRoots {
    /// Midpoint of the two roots, `−lin/2`.
    pub symmetry_point: Rational,
    /// Square of the half-distance between the roots.
    pub offset_squared: Rational,
    /// Nonnegative half-distance between the roots.
    pub offset: QuadExt,
    /// `(symmetry_point + offset, symmetry_point − offset)`; larger root first.
    pub roots: (QuadExt, QuadExt),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("no real roots (offset squared {offset_squared} is negative)")]
    NoRealRoots { offset_squared: Rational },
    #[error("root outside supported field: offset squared {offset_squared} is neither k² nor 5k²")]
    OutsideField { offset_squared: Rational },
}

/// Solves `x² + lin·x + constant = 0` by sum/product symmetry.
///
/// The roots are `u ± v` with `u = −lin/2` fixed by their sum, and the
/// product `(u + v)(u − v) = constant` gives `v² = u² − constant`. Only
/// offsets in Q(√5) are representable, so `v²` must be `k²` or `5k²`.
pub fn solve_quadratic_loh(
    lin: &Rational,
    constant: &Rational,
) -> Result<QuadraticRoots, QuadraticError> {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    let symmetry_point = -(lin * &half);
    let offset_squared = symmetry_point.square() - constant;

    if offset_squared.is_negative() {
        return Err(QuadraticError::NoRealRoots { offset_squared });
    }

    let offset = if let Some(k) = offset_squared.sqrt_exact() {
        QuadExt::from_rational(k)
    } else {
        let fifth = offset_squared
            .checked_div(&Rational::from_integer(5))
            .expect("nonzero divisor");
        match fifth.sqrt_exact() {
            Some(k) => QuadExt::new(Rational::zero(), k),
            None => return Err(QuadraticError::OutsideField { offset_squared }),
        }
    };

    let centre = QuadExt::from_rational(symmetry_point.clone());
    let roots = (&centre + &offset, &centre - &offset);
    Ok(QuadraticRoots {
        symmetry_point,
        offset_squared,
        offset,
        roots,
    })
}
