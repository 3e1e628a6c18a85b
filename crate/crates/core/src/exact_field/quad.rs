use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldError, Rational};

/// An element `rat_part + root_coeff·√5` of the field Q(√5).
///
/// √5 is irrational, so the pair of rational coordinates is unique and the
/// derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    rat_part: Rational,
    root_coeff: Rational,
}

impl QuadExt {
    pub fn new(rat_part: Rational, root_coeff: Rational) -> Self {
        QuadExt {
            rat_part,
            root_coeff,
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadExt::new(r, Rational::zero())
    }

    pub fn zero() -> Self {
        QuadExt::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        QuadExt::from_rational(Rational::one())
    }

    /// √5 itself.
    pub fn sqrt5() -> Self {
        QuadExt::new(Rational::zero(), Rational::one())
    }

    pub fn rat_part(&self) -> &Rational {
        &self.rat_part
    }

    pub fn root_coeff(&self) -> &Rational {
        &self.root_coeff
    }

    pub fn is_zero(&self) -> bool {
        self.rat_part.is_zero() && self.root_coeff.is_zero()
    }

    /// `p − q·√5`, the image under the nontrivial automorphism.
    pub fn conjugate(&self) -> Self {
        QuadExt::new(self.rat_part.clone(), -&self.root_coeff)
    }

    /// Field norm `p² − 5q²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        self.rat_part.square() - Rational::from_integer(5) * self.root_coeff.square()
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let conj = self.conjugate();
        Ok(QuadExt::new(
            conj.rat_part.checked_div(&norm)?,
            conj.root_coeff.checked_div(&norm)?,
        ))
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<Self, FieldError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(QuadExt::one(), |acc, _| &acc * self)
    }

    /// Exact sign of the real number this element denotes.
    pub fn signum(&self) -> i32 {
        let (ps, qs) = (self.rat_part.signum(), self.root_coeff.signum());
        if ps == 0 || qs == 0 || ps == qs {
            return if ps != 0 { ps } else { qs };
        }
        // Opposite signs: the larger of p² and 5q² wins.
        match self
            .rat_part
            .square()
            .cmp(&(Rational::from_integer(5) * self.root_coeff.square()))
        {
            Ordering::Greater => ps,
            Ordering::Less => qs,
            Ordering::Equal => unreachable!("√5 is irrational"),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// `p + q·√5` with √5 taken as the nearest `f64`. Inexact.
    pub fn to_f64(&self) -> f64 {
        self.rat_part.to_f64() + self.root_coeff.to_f64() * 5f64.sqrt()
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::from_rational(r)
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat_part.is_zero(), self.root_coeff.is_zero()) {
            (_, true) => write!(f, "{}", self.rat_part),
            (true, false) => write!(f, "({})·√5", self.root_coeff),
            (false, false) => write!(f, "{} + ({})·√5", self.rat_part, self.root_coeff),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({}, {})", self.rat_part, self.root_coeff)
    }
}

impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(
            &self.rat_part + &rhs.rat_part,
            &self.root_coeff + &rhs.root_coeff,
        )
    }
}

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(
            &self.rat_part - &rhs.rat_part,
            &self.root_coeff - &rhs.root_coeff,
        )
    }
}

impl Mul<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        // (p + q√5)(r + s√5) = (pr + 5qs) + (ps + qr)√5
        let five = Rational::from_integer(5);
        QuadExt::new(
            &self.rat_part * &rhs.rat_part + five * (&self.root_coeff * &rhs.root_coeff),
            &self.rat_part * &rhs.root_coeff + &self.root_coeff * &rhs.rat_part,
        )
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                $trait::$method(&self, &rhs)
            }
        }

        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.rat_part, -&self.root_coeff)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}
