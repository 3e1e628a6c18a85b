//! The tangent–secant scene: an external point `p`, a circle centred at
//! `w`, a tangent touching at `t`, and a secant cutting the circle at `x`
//! (near) and `y` (far).
//!
//! Lengths follow the usual labels: tangent `a = |pt|`, outside secant
//! `b = |px|`, chord `c = |xy|`, secant `s = |py| = b + c`, plus the two
//! chords from the tangent point `m = |tx|` and `n = |ty|`. All geometry is
//! `f64`; angles are radians.

use std::ops::{Add, Mul, Sub};

use thiserror::Error;

/// The golden ratio as the nearest `f64`.
pub const PHI: f64 = 1.618_033_988_749_895;

/// Relative tolerance used by [`theorem_check`] unless the caller has a
/// better one.
pub const DEFAULT_THEOREM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("invalid length: {name} = {value} (must be positive and finite)")]
    InvalidLength { name: &'static str, value: f64 },
    #[error("chord exceeds diameter: c = {chord} > 2r = {diameter}")]
    ChordExceedsDiameter { chord: f64, diameter: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, rhs: Point2) -> Point2 {
        Point2::new(self * rhs.x, self * rhs.y)
    }
}

/// Unsigned angle between two vectors, in `[0, π]`.
pub fn angle_between(u: Point2, v: Point2) -> f64 {
    u.cross(v).abs().atan2(u.dot(v))
}

/// Scalar description of a tangent–secant scene.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentSecantConfig {
    radius_r: f64,
    outside_b: f64,
    chord_c: f64,
    tangent_a: f64,
    secant_s: f64,
    center_dist_d: f64,
}

fn check_length(name: &'static str, value: f64) -> Result<(), GeometryError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(GeometryError::InvalidLength { name, value })
    }
}

impl TangentSecantConfig {
    /// Builds the scene from the outside secant `b`, chord `c` and radius
    /// `r`; the tangent comes from the power of the point, `a² = b·(b + c)`.
    pub fn new(outside_b: f64, chord_c: f64, radius_r: f64) -> Result<Self, GeometryError> {
        check_length("b", outside_b)?;
        check_length("c", chord_c)?;
        check_length("r", radius_r)?;
        let diameter = 2.0 * radius_r;
        if chord_c > diameter {
            return Err(GeometryError::ChordExceedsDiameter {
                chord: chord_c,
                diameter,
            });
        }
        let secant_s = outside_b + chord_c;
        let tangent_a = (outside_b * secant_s).sqrt();
        let center_dist_d = tangent_a.hypot(radius_r);
        Ok(TangentSecantConfig {
            radius_r,
            outside_b,
            chord_c,
            tangent_a,
            secant_s,
            center_dist_d,
        })
    }

    /// The scene whose tangent equals its chord: `b = c/φ`, so that
    /// `a = c` and `s = φ·c`.
    pub fn golden(chord_c: f64, radius_r: f64) -> Result<Self, GeometryError> {
        check_length("c", chord_c)?;
        TangentSecantConfig::new(chord_c / PHI, chord_c, radius_r)
    }

    pub fn radius(&self) -> f64 {
        self.radius_r
    }

    pub fn outside_secant(&self) -> f64 {
        self.outside_b
    }

    pub fn chord(&self) -> f64 {
        self.chord_c
    }

    pub fn tangent(&self) -> f64 {
        self.tangent_a
    }

    pub fn secant(&self) -> f64 {
        self.secant_s
    }

    pub fn center_distance(&self) -> f64 {
        self.center_dist_d
    }

    /// Chord-to-diameter ratio `c/2r`.
    pub fn rho(&self) -> f64 {
        self.chord_c / (2.0 * self.radius_r)
    }

    /// `|a² − b·s| / a²`.
    pub fn power_residual(&self) -> f64 {
        let a2 = self.tangent_a * self.tangent_a;
        (a2 - self.outside_b * self.secant_s).abs() / a2
    }

    pub fn scaled(&self, k: f64) -> Result<Self, GeometryError> {
        TangentSecantConfig::new(k * self.outside_b, k * self.chord_c, k * self.radius_r)
    }
}

/// Both sides of the chord-equals-tangent / golden-ratio equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCheck {
    pub chord_equals_tangent: bool,
    pub ratio_is_golden: bool,
}

impl TheoremCheck {
    pub fn agrees(&self) -> bool {
        self.chord_equals_tangent == self.ratio_is_golden
    }
}

pub fn theorem_check(cfg: &TangentSecantConfig, tol: f64) -> TheoremCheck {
    let a = cfg.tangent();
    let ratio = a / cfg.outside_secant();
    TheoremCheck {
        chord_equals_tangent: (cfg.chord() - a).abs() / a <= tol,
        ratio_is_golden: (ratio - PHI).abs() / PHI <= tol,
    }
}

/// Plane coordinates of a scene.
///
/// `p` sits at the origin with the secant along `+x`, so `x = (b, 0)` and
/// `y = (b + c, 0)`. The centre is at `(b + c/2, h)` with
/// `h = √(r² − (c/2)²) ≥ 0`. Of the two tangent points, `t` is the one on
/// the arc cut off below the secant (the side away from the centre); when
/// the chord is a diameter the arcs are mirror images and `t` is taken
/// above the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Realization {
    pub config: TangentSecantConfig,
    pub p: Point2,
    pub x: Point2,
    pub y: Point2,
    pub w: Point2,
    pub t: Point2,
    /// Height of the centre above the secant line.
    pub h: f64,
    /// `|tx|`.
    pub chord_m: f64,
    /// `|ty|`.
    pub chord_n: f64,
}

pub fn realize(cfg: &TangentSecantConfig) -> Realization {
    let (b, c, r) = (cfg.outside_secant(), cfg.chord(), cfg.radius());
    let a = cfg.tangent();
    let half_chord = 0.5 * c;
    let h = (r * r - half_chord * half_chord).max(0.0).sqrt();

    let p = Point2::ORIGIN;
    let x = Point2::new(b, 0.0);
    let y = Point2::new(b + c, 0.0);
    let w = Point2::new(b + half_chord, h);

    let d = w.norm();
    let unit = (1.0 / d) * w;
    let side = if h > 0.0 { -1.0 } else { 1.0 };
    // t − w = (r/d)·(−r·û ± a·û⊥), which keeps |wt| = r to rounding
    let t = w + (r / d) * ((-r) * unit + (side * a) * unit.perp());

    Realization {
        config: *cfg,
        p,
        x,
        y,
        w,
        t,
        h,
        chord_m: t.dist(x),
        chord_n: t.dist(y),
    }
}

/// Angles of the triangle `p`, `y`, `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTriple {
    /// At `p`, between the tangent and the secant.
    pub alpha: f64,
    /// `∠pyt`, equal to `∠ptx`.
    pub beta: f64,
    /// `∠pty`, equal to `∠pxt`.
    pub gamma: f64,
}

impl AngleTriple {
    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma
    }

    pub fn degrees(&self) -> (f64, f64, f64) {
        (
            self.alpha.to_degrees(),
            self.beta.to_degrees(),
            self.gamma.to_degrees(),
        )
    }
}

pub fn measure_angles(real: &Realization) -> AngleTriple {
    let (p, t, y) = (real.p, real.t, real.y);
    AngleTriple {
        alpha: angle_between(t - p, y - p),
        beta: angle_between(p - y, t - y),
        gamma: angle_between(p - t, y - t),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chords {
    pub m: f64,
    pub n: f64,
}

pub fn measure_chords(real: &Realization) -> Chords {
    Chords {
        m: real.t.dist(real.x),
        n: real.t.dist(real.y),
    }
}

/// Relative residuals of the two law-of-sines chains.
///
/// Inscribed triangle `t, x, y`: `m/sin β`, `n/sin(α+β)` and `c/sin(γ−β)`
/// against the diameter `2r`. Upper triangle `p, x, t`: `a/sin γ`,
/// `b/sin β` and `m/sin α` against their mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LawOfSinesResiduals {
    pub inscribed: [f64; 3],
    pub upper: [f64; 3],
}

impl LawOfSinesResiduals {
    pub fn max(&self) -> f64 {
        self.inscribed
            .iter()
            .chain(self.upper.iter())
            .fold(0.0, |acc, v| acc.max(*v))
    }
}

pub fn law_of_sines_residuals(real: &Realization, angles: &AngleTriple) -> LawOfSinesResiduals {
    let cfg = &real.config;
    let AngleTriple { alpha, beta, gamma } = *angles;
    let diameter = 2.0 * cfg.radius();
    let rel = |v: f64, reference: f64| (v - reference).abs() / reference.abs();

    let inscribed = [
        rel(real.chord_m / beta.sin(), diameter),
        rel(real.chord_n / (alpha + beta).sin(), diameter),
        rel(cfg.chord() / (gamma - beta).sin(), diameter),
    ];

    let ratios = [
        cfg.tangent() / gamma.sin(),
        cfg.outside_secant() / beta.sin(),
        real.chord_m / alpha.sin(),
    ];
    let mean = ratios.iter().sum::<f64>() / 3.0;
    LawOfSinesResiduals {
        inscribed,
        upper: ratios.map(|v| rel(v, mean)),
    }
}
