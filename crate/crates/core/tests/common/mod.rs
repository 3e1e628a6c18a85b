use golden_secant::TangentSecantConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// Valid scenes with log-uniform radius, chord/diameter ratio and outside
/// secant (the secant scaled to the radius).
///
/// `|xy|` is realized as `(b + c) − b`, which loses about `log10(b/c)`
/// digits, so the ranges keep `b/c ≤ 500`.
pub fn random_configs(seed: u64, count: usize) -> Vec<TangentSecantConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = log_uniform(&mut rng, 0.1, 10.0);
            let rho = log_uniform(&mut rng, 1e-2, 1.0);
            let b = r * log_uniform(&mut rng, 1e-2, 10.0);
            TangentSecantConfig::new(b, 2.0 * r * rho, r).expect("sampled scene is valid")
        })
        .collect()
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
