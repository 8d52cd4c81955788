//! Machine-readable reports: the JSON and CSV payloads emitted by the
//! command-line front end. JSON objects are built through `serde_json`
//! values, whose maps are ordered, so identical inputs give identical bytes.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::characters::{boundedness_scan, ds_numerator};
use crate::error::Error;
use crate::half::HalfInt;
use crate::oracle::{
    circle_quadrature, omega_bound_table, run_schedule, OmegaRow,
};
use crate::perm::all_permutations;
use crate::roots::{build_root_system, sample_regular_point};
use crate::sweep::{run_verify, VerifyRow};
use crate::theta::HCParameter;
use crate::torus::TorusPoint;
use crate::transfer::{cauchy_circle_integral, transfer_bruteforce, transfer_closed_form};
use crate::weight::Weight;

/// Default sampling seed; override with the `CHC_SEED` environment variable.
pub const DEFAULT_SEED: u64 = 0xC4C0_2024;

/// Reads `CHC_SEED` (decimal `u64`) or falls back to the default.
pub fn env_seed() -> u64 {
    std::env::var("CHC_SEED")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// The full single-parameter pipeline: validation, theta data, both transfer
/// routes (normalized) and the match verdict.
pub fn transfer_report(p: usize, q: usize, raw: &Weight) -> Result<Value, Error> {
    let lambda = HCParameter::new(raw.clone(), p, q)?;
    let target = lambda.theta_signature();
    let tau = lambda.tau_permutation(target)?;
    let brute = transfer_bruteforce(&lambda, target)?;
    let closed = transfer_closed_form(&lambda, target);
    let lifted = ds_numerator(&lambda.theta_lift());
    let match_ok =
        brute.equal_up_to_constant(&closed) && brute.equal_up_to_constant(lifted.numerator());
    Ok(json!({
        "p": p,
        "q": q,
        "a": lambda.a(),
        "b": lambda.b(),
        "r": target.r,
        "s": target.s,
        "lambda": raw.coord_strings(),
        "lambda_prime": lambda.theta_parameter().coord_strings(),
        "tau": tau.one_line(),
        "closed_form_numerator": closed.normalize()?.to_json(),
        "bruteforce_numerator": brute.normalize()?.to_json(),
        "match": match_ok,
    }))
}

/// One row of the pointwise evaluation table.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalRow {
    pub theta: Vec<f64>,
    pub re: f64,
    pub im: f64,
    /// `|D|^{1/2} |Θ|`, the quantity whose sup defines boundedness.
    pub weighted_abs: f64,
}

pub const EVAL_CSV_HEADER: &str = "theta,re,im,weighted_abs";

impl EvalRow {
    pub fn to_csv_line(&self) -> String {
        let theta = self
            .theta
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(";");
        format!("{},{},{},{}", theta, self.re, self.im, self.weighted_abs)
    }
}

/// Evaluates the discrete series character at the given points; fails on a
/// singular point.
pub fn eval_rows(lambda: &HCParameter, points: &[TorusPoint]) -> Result<Vec<EvalRow>, Error> {
    let character = ds_numerator(lambda);
    let mut rows = Vec::with_capacity(points.len());
    for theta in points {
        let value = character.evaluate(theta)?;
        let weighted = character.roots().weyl_d_sqrt(theta) * value.norm();
        rows.push(EvalRow {
            theta: theta.angles().to_vec(),
            re: value.re,
            im: value.im,
            weighted_abs: weighted,
        });
    }
    Ok(rows)
}

/// Random regular points for a scan, reproducible from the seed.
pub fn scan_points(lambda: &HCParameter, count: usize, seed: u64) -> Vec<TorusPoint> {
    let rs = build_root_system(lambda.p(), lambda.q()).expect("n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample_regular_point(&rs, &mut rng)).collect()
}

/// Full verify sweep rendered as CSV; returns `(csv, all_ok)`.
pub fn verify_csv(max_n: usize, max_abs: HalfInt, jobs: usize) -> (String, bool) {
    let rows = run_verify(max_n, max_abs, jobs);
    let ok = rows.iter().all(VerifyRow::all_ok);
    let mut out = String::from(VerifyRow::csv_header());
    out.push('\n');
    for row in &rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    (out, ok)
}

fn grid_phases(count: usize) -> Vec<f64> {
    (0..count).map(|t| std::f64::consts::TAU * t as f64 / count as f64).collect()
}

/// Max absolute error of the circle quadrature against the closed form over
/// the grid `k ∈ [-6, 6]`, `|a| ∈ {0.5, 0.9, 1.1, 2}`, 8 phases.
pub fn residue_grid_max_error(n_samples: usize) -> f64 {
    let mut max_err = 0.0f64;
    for k in -6..=6 {
        for &modulus in &[0.5, 0.9, 1.1, 2.0] {
            for &phase in &grid_phases(8) {
                let a = Complex64::from_polar(modulus, phase);
                let quad = circle_quadrature(k, a, n_samples).expect("off-contour grid");
                let exact = cauchy_circle_integral(k, a).expect("off-contour grid");
                max_err = max_err.max((quad - exact).norm());
            }
        }
    }
    max_err
}

/// Small parameters driving the transfer-quadrature comparison. The
/// deviation of each sigma-slice from its unit-torus limit is `y^D` in
/// `y = e^{-X}` with `D = Σ|λ_i + 1/2|`; these cases keep `D <= 2` so the
/// three-point schedule extrapolates exactly.
pub fn quadrature_cases() -> Vec<HCParameter> {
    [
        ("1/2", 0, 1),
        ("-3/2", 0, 1),
        ("1/2,-3/2", 0, 2),
        ("1/2,-1/2", 1, 1),
        ("-1/2,3/2", 1, 1),
    ]
    .into_iter()
    .map(|(s, p, q)| {
        HCParameter::new(Weight::parse_list(s).expect("literal"), p, q).expect("literal")
    })
    .collect()
}

/// Error summary of the torus-quadrature comparison over the small-rank
/// cases: worst relative extrapolation error, worst finite-deformation
/// quadrature error, and the worst distance to the limit per schedule
/// magnitude (which decays as the magnitudes shrink).
pub struct QuadratureErrors {
    pub worst_extrapolation: f64,
    pub worst_deformed: f64,
    pub residual_per_magnitude: Vec<f64>,
}

pub fn transfer_quadrature_errors(
    schedule: &[f64],
    n_per_axis: usize,
    points_per_case: usize,
    seed: u64,
) -> Result<QuadratureErrors, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_extrapolation = 0.0f64;
    let mut worst_deformed = 0.0f64;
    let mut residual_per_magnitude = vec![0.0f64; schedule.len()];
    for lambda in quadrature_cases() {
        let target = lambda.theta_signature();
        let roots = build_root_system(target.r, target.s).expect("n >= 1");
        for sigma in all_permutations(lambda.n()) {
            for _ in 0..points_per_case {
                let theta_prime = sample_regular_point(&roots, &mut rng);
                let run =
                    run_schedule(&lambda, target, &sigma, &theta_prime, schedule, n_per_axis)?;
                for (slot, &(_, quad, symbolic)) in
                    residual_per_magnitude.iter_mut().zip(&run.samples)
                {
                    worst_deformed = worst_deformed.max((quad - symbolic).norm());
                    *slot = slot.max((quad - run.limit).norm());
                }
                let scale = run.limit.norm().max(1.0);
                worst_extrapolation =
                    worst_extrapolation.max((run.extrapolated - run.limit).norm() / scale);
            }
        }
    }
    Ok(QuadratureErrors { worst_extrapolation, worst_deformed, residual_per_magnitude })
}

fn omega_rows_json(rows: &[OmegaRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                json!({
                    "p": row.p,
                    "n": row.n,
                    "samples": row.samples,
                    "measured_constant": row.measured_constant,
                    "slack_constant": row.slack_constant,
                    "naive_failures": row.naive_failures,
                    "all_within_slack": row.all_within_slack,
                })
            })
            .collect(),
    )
}

/// The oracle report: residue grid, transfer-quadrature schedule and the
/// hyperbolic bound table. Returns `(report, all_pass)`.
pub fn oracle_report(
    circle_samples: usize,
    schedule: &[f64],
    transfer_samples: usize,
    seed: u64,
) -> Result<(Value, bool), Error> {
    let residue_err = residue_grid_max_error(circle_samples);
    let residue_pass = residue_err <= 1e-8;

    let errors = transfer_quadrature_errors(schedule, transfer_samples, 3, seed)?;
    let transfer_pass = errors.worst_extrapolation <= 1e-6;

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let omega_rows = omega_bound_table(200, &mut rng);
    let omega_pass = omega_rows
        .iter()
        .all(|r| r.measured_constant.is_finite() && r.all_within_slack);

    let pass = residue_pass && transfer_pass && omega_pass;
    let report = json!({
        "residue": {
            "samples": circle_samples,
            "max_abs_error": residue_err,
            "tolerance": 1e-8,
            "pass": residue_pass,
        },
        "transfer": {
            "schedule": schedule,
            "samples_per_axis": transfer_samples,
            "max_relative_extrapolation_error": errors.worst_extrapolation,
            "max_deformed_error": errors.worst_deformed,
            "residual_per_magnitude": errors.residual_per_magnitude,
            "tolerance": 1e-6,
            "pass": transfer_pass,
        },
        "omega": {
            "rows": omega_rows_json(&omega_rows),
            "pass": omega_pass,
        },
        "pass": pass,
    });
    Ok((report, pass))
}

/// Boundedness summary for one parameter: the scan sup and its bound.
pub fn scan_summary(lambda: &HCParameter, samples: usize, seed: u64) -> (f64, f64) {
    let character = ds_numerator(lambda);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sup = boundedness_scan(character.numerator(), samples, &mut rng);
    (sup, character.numerator().coefficient_abs_sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transfer_report_shape() {
        let raw = Weight::parse_list("1/2,-1/2").unwrap();
        let report = transfer_report(1, 1, &raw).unwrap();
        assert_eq!(report["r"], json!(2));
        assert_eq!(report["s"], json!(0));
        assert_eq!(report["match"], json!(true));
        assert_eq!(report["tau"], json!([1, 2]));
        assert_eq!(report["lambda_prime"], json!(["1/2", "-1/2"]));

        let bad = Weight::parse_list("1,-1").unwrap();
        let err = transfer_report(1, 1, &bad).unwrap_err();
        assert!(matches!(err, Error::Param(_)));
    }

    #[test]
    fn transfer_report_bytes_are_stable() {
        let raw = Weight::parse_list("-3/2,5/2").unwrap();
        let a = serde_json::to_string(&transfer_report(1, 1, &raw).unwrap()).unwrap();
        let b = serde_json::to_string(&transfer_report(1, 1, &raw).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn eval_rows_example() {
        let lambda =
            HCParameter::new(Weight::parse_list("1/2,-1/2").unwrap(), 1, 1).unwrap();
        let rows =
            eval_rows(&lambda, &[TorusPoint::new(vec![std::f64::consts::PI, 0.0])]).unwrap();
        assert!((rows[0].re + 0.5).abs() < 1e-13);
        assert!(rows[0].im.abs() < 1e-13);
        assert!((rows[0].weighted_abs - 1.0).abs() < 1e-12);

        let singular = TorusPoint::new(vec![0.2, 0.2]);
        assert_eq!(eval_rows(&lambda, &[singular]), Err(Error::SingularPoint));
    }

    #[test]
    fn residue_grid_is_tight() {
        assert!(residue_grid_max_error(2048) <= 1e-8);
    }

    #[test]
    fn verify_csv_small() {
        let (csv, ok) = verify_csv(2, HalfInt::from_twice(3), 2);
        assert!(ok);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), VerifyRow::csv_header());
        assert!(csv.lines().count() > 1);
        assert!(csv.ends_with('\n'));
    }
}
