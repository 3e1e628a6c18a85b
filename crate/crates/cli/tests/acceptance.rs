//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use golden_secant::exact_field::{fib_ratio, phi_constant, solve_quadratic_loh, QuadExt, Rational};
use golden_secant::geometry::{
    law_of_sines_residuals, measure_angles, realize, theorem_check, TangentSecantConfig,
    DEFAULT_THEOREM_TOL, PHI,
};
use golden_secant::solver::{alpha_oracle, solve_alpha, RhoParam, DEFAULT_TOL};
use golden_secant_cli::curve::{read_curve, rows_bracket, rows_sign_changes};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BIN: &str = env!("CARGO_BIN_EXE_golden-secant");

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo.ln()..hi.ln()).exp()
}

/// Seeded random valid scenes, `b/c ≤ 500` so realized coordinates keep
/// their relative precision.
fn random_configs(seed: u64, count: usize) -> Vec<TangentSecantConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = log_uniform(&mut rng, 0.1, 10.0);
            let rho = log_uniform(&mut rng, 1e-2, 1.0);
            let b = r * log_uniform(&mut rng, 1e-2, 10.0);
            TangentSecantConfig::new(b, 2.0 * r * rho, r).unwrap()
        })
        .collect()
}

/// Random scenes followed by the golden scene on each one's chord and radius.
fn theorem_configs() -> Vec<TangentSecantConfig> {
    let random = random_configs(2024, 1000);
    let golden: Vec<_> = random
        .iter()
        .map(|c| TangentSecantConfig::golden(c.chord(), c.radius()).unwrap())
        .collect();
    random.into_iter().chain(golden).collect()
}

fn report_value(report: &str, key: &str) -> Result<f64, String> {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
        .ok_or_else(|| format!("report has no {key}"))?
        .parse()
        .map_err(|e| format!("{key}: {e}"))
}

fn unit_rho_report() -> Verdict {
    let start = Instant::now();
    let out = Command::new(BIN)
        .args(["solve", "--rho", "1.0"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || {
        format!("exit {:?}", out.status.code())
    })?;
    let report = String::from_utf8_lossy(&out.stdout).into_owned();

    for (key, expected, tol) in [
        ("alpha_deg", 26.565, 1e-3),
        ("beta_deg", 31.717, 1e-3),
        ("gamma_deg", 121.717, 1e-3),
        ("a", 1.0, 1e-3),
        ("s", 1.618, 1e-3),
        ("b", 0.618, 1e-3),
        ("n", 0.851, 1e-3),
        ("m", 0.526, 1e-3),
    ] {
        let got = report_value(&report, key)?;
        ensure((got - expected).abs() <= tol, || {
            format!("{key} = {got}, expected {expected} ± {tol}")
        })?;
    }
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("angles and lengths match, {elapsed:?}"))
}

fn exact_identities() -> Verdict {
    let phi = phi_constant();
    let quad = phi.square() - &phi - QuadExt::one();
    ensure(quad.is_zero(), || format!("phi^2 - phi - 1 = {quad}"))?;
    let recip = phi.inverse().map_err(|e| e.to_string())? - (&phi - &QuadExt::one());
    ensure(recip.is_zero(), || format!("1/phi - (phi - 1) = {recip}"))?;

    let q = |n, d| Rational::new(n, d).unwrap();
    let sol = solve_quadratic_loh(&q(-1, 1), &q(-1, 1)).map_err(|e| e.to_string())?;
    ensure(sol.symmetry_point == q(1, 2), || {
        format!("symmetry {}", sol.symmetry_point)
    })?;
    ensure(sol.offset_squared == q(5, 4), || {
        format!("offset² {}", sol.offset_squared)
    })?;
    Ok("exact zeros; symmetry 1/2, offset² 5/4".into())
}

fn fibonacci_table() -> Verdict {
    let truncate = |x: f64, places: i32| (x * 10f64.powi(places)).floor() / 10f64.powi(places);
    for (n, num, den, printed, places) in [
        (7, 21, 13, 1.615, 3),
        (8, 34, 21, 1.619, 3),
        (10, 89, 55, 1.6181, 4),
    ] {
        let ratio = fib_ratio(n).map_err(|e| e.to_string())?;
        ensure(ratio == Rational::new(num, den).unwrap(), || {
            format!("fib_ratio({n}) = {ratio}")
        })?;
        let shown = truncate(ratio.to_f64(), places);
        ensure((shown - printed).abs() < 1e-12, || {
            format!("{num}/{den} -> {shown}, printed {printed}")
        })?;
    }

    let phi = phi_constant();
    let mut prev: Option<QuadExt> = None;
    for n in 2..=25 {
        let dist = (QuadExt::from(fib_ratio(n).map_err(|e| e.to_string())?) - &phi).abs();
        if let Some(p) = &prev {
            ensure(dist < *p, || {
                format!("|F({})/F({n}) - phi| did not decrease", n + 1)
            })?;
        }
        prev = Some(dist);
    }
    Ok("21/13, 34/21, 89/55 match; distance decreasing for n = 2..25".into())
}

fn theorem_equivalence() -> Verdict {
    let start = Instant::now();
    let configs = theorem_configs();
    for cfg in &configs {
        let check = theorem_check(cfg, DEFAULT_THEOREM_TOL);
        ensure(check.agrees(), || format!("{cfg:?}: {check:?}"))?;
    }
    for cfg in &configs[1000..] {
        let ratio = cfg.tangent() / cfg.outside_secant();
        ensure((ratio - PHI).abs() <= 1e-12 * PHI, || {
            format!("a/b = {ratio} for {cfg:?}")
        })?;
    }
    for cfg in &configs[..1000] {
        let a = cfg.tangent();
        let b = a / PHI;
        let c = a * a / b - b;
        ensure((c - a).abs() <= 1e-12 * a, || {
            format!("converse: a = {a}, c = {c}")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "2000 scenes agree, forward and converse hold, {elapsed:?}"
    ))
}

fn power_of_point() -> Verdict {
    let worst = theorem_configs()
        .iter()
        .map(TangentSecantConfig::power_residual)
        .fold(0.0, f64::max);
    ensure(worst <= 1e-12, || format!("max |a² − b·s|/a² = {worst:e}"))?;
    Ok(format!("max relative residual {worst:.1e}"))
}

fn triple_agreement() -> Verdict {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for k in 1..=100 {
        let rho = RhoParam::new(k as f64 / 100.0).unwrap();
        let res = solve_alpha(rho, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let oracle = alpha_oracle(rho);
        let scene =
            TangentSecantConfig::golden(2.0 * rho.value(), 1.0).map_err(|e| e.to_string())?;
        let measured = measure_angles(&realize(&scene)).alpha;
        for (x, y) in [
            (res.alpha, oracle),
            (res.alpha, measured),
            (oracle, measured),
        ] {
            worst = worst.max((x - y).abs());
        }
        let ratio_res = ((res.alpha + res.beta).sin() / res.beta.sin() - PHI).abs();
        let sine_res = (res.beta.sin().powi(2) - rho.value() / PHI * res.alpha.sin()).abs();
        ensure(ratio_res <= 1e-9 && sine_res <= 1e-9, || {
            format!(
                "rho {}: ratio_res {ratio_res:e}, sine_res {sine_res:e}",
                rho.value()
            )
        })?;
    }
    ensure(worst <= 1e-9, || {
        format!("max pairwise disagreement {worst:e} rad")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("max pairwise gap {worst:.1e} rad, {elapsed:?}"))
}

fn sweep_files() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for rho in [0.1, 0.5, 1.0] {
        let path = dir.path().join(format!("sweep_{rho}.csv"));
        let out = Command::new(BIN)
            .args(["sweep", "--rho", &rho.to_string(), "--n", "100", "--out"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("rho {rho}: exit {:?}", out.status.code())
        })?;
        let file = std::fs::File::open(&path).map_err(|e| e.to_string())?;
        let rows = read_curve(file).map_err(|e| e.to_string())?;
        let changes = rows_sign_changes(&rows);
        ensure(changes == 1, || {
            format!("rho {rho}: {changes} sign changes")
        })?;
        let (lo, hi) = rows_bracket(&rows).ok_or("no bracket")?;
        let alpha = solve_alpha(RhoParam::new(rho).unwrap(), DEFAULT_TOL)
            .map_err(|e| e.to_string())?
            .alpha
            .to_degrees();
        ensure(lo <= alpha && alpha <= hi, || {
            format!("rho {rho}: {alpha} ∉ [{lo}, {hi}]")
        })?;
        notes.push(format!("ρ={rho}: [{lo:.3}°, {hi:.3}°]"));
    }
    Ok(notes.join(", "))
}

fn law_of_sines() -> Verdict {
    let mut worst = 0.0f64;
    for cfg in random_configs(500, 500) {
        let real = realize(&cfg);
        let residuals = law_of_sines_residuals(&real, &measure_angles(&real));
        worst = worst.max(residuals.max());
    }
    ensure(worst <= 1e-9, || format!("max relative residual {worst:e}"))?;
    Ok(format!(
        "500 realizations, max relative residual {worst:.1e}"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 golden scene at rho = 1 via `solve --rho 1.0`",
            unit_rho_report,
        ),
        ("2 exact golden identities", exact_identities),
        ("3 Fibonacci convergence table", fibonacci_table),
        ("4 theorem equivalence suite", theorem_equivalence),
        ("5 power of a point", power_of_point),
        ("6 solver/oracle/geometry agreement", triple_agreement),
        ("7 sweep-file sign change", sweep_files),
        ("8 law-of-sines residuals", law_of_sines),
    ];

    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
