//! Independent floating-point oracles.
//!
//! Nothing here shares code with the symbolic residue path: the contour
//! integral is re-done by trapezoid quadrature on the circle, the transfer
//! integrand is re-done by product quadrature on the torus at finite
//! deformation and extrapolated to the unit torus, and the hyperbolic bound
//! behind the growth estimate is checked on random samples with an explicit
//! slack constant.

use num_complex::Complex64;
use rand::Rng;

use crate::characters::ds_numerator;
use crate::error::Error;
use crate::perm::Permutation;
use crate::roots::{build_root_system, REGULARITY_TOL};
use crate::theta::{HCParameter, SignaturePair};
use crate::torus::{Deformation, TorusPoint};
use crate::transfer::{cauchy_circle_integral, e_sigma_pattern, weil_kernel_det};
use crate::weight::Weight;

/// Poles closer to the contour than this (in `|log|a||`) are rejected.
pub const CONTOUR_GUARD: f64 = 0.05;

/// Trapezoid rule for `(1/2πi) ∮ z^k / (z - a) dz` on `N` equispaced nodes;
/// spectrally accurate, with geometric convergence in `N`.
pub fn circle_quadrature(k: i64, a: Complex64, n_samples: usize) -> Result<Complex64, Error> {
    if n_samples < 64 {
        return Err(Error::TooFewSamples { got: n_samples, min: 64 });
    }
    let log_mod = a.norm().ln();
    if !log_mod.is_finite() || log_mod.abs() < CONTOUR_GUARD {
        return Err(Error::ContourTooClose(log_mod.abs()));
    }
    // dz = iz dθ turns the integral into (1/N) Σ z_m^{k+1} / (z_m - a).
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 0..n_samples {
        let z = Complex64::from_polar(1.0, std::f64::consts::TAU * m as f64 / n_samples as f64);
        acc += z.powi((k + 1) as i32) / (z - a);
    }
    Ok(acc / n_samples as f64)
}

/// Product trapezoid quadrature of the transfer integrand for one `σ`:
/// `(2π)^{-n} ∫ (Θ_Π·Δ_Ψ)(θ) e^{iΣθ_j/2} / det(1 - p(h) r p(h'))_{σ} dθ`
/// at a fixed radial deformation. Accumulation is axis-major so results are
/// reproducible bit for bit.
pub fn transfer_quadrature(
    lambda: &HCParameter,
    target: SignaturePair,
    theta_prime: &TorusPoint,
    sigma: &Permutation,
    d: &Deformation,
    n_per_axis: usize,
) -> Result<Complex64, Error> {
    let n = lambda.n();
    if target.n() != n {
        return Err(Error::TargetSize { r: target.r, s: target.s, n });
    }
    if n_per_axis < 8 {
        return Err(Error::TooFewSamples { got: n_per_axis, min: 8 });
    }
    let target_roots = build_root_system(target.r, target.s).expect("n >= 1");
    if target_roots.weyl_d_sqrt(theta_prime) <= REGULARITY_TOL {
        return Err(Error::SingularPoint);
    }

    let character = ds_numerator(lambda);
    let xi = Weight::from_twice(&vec![1i64; n]);
    let step = std::f64::consts::TAU / n_per_axis as f64;
    let total = n_per_axis.pow(n as u32);

    let mut acc = Complex64::new(0.0, 0.0);
    let mut digits = vec![0usize; n];
    let mut angles = vec![0.0f64; n];
    for flat in 0..total {
        let mut rem = flat;
        for axis in (0..n).rev() {
            digits[axis] = rem % n_per_axis;
            rem /= n_per_axis;
        }
        for axis in 0..n {
            angles[axis] = step * digits[axis] as f64;
        }
        let theta = TorusPoint::new(angles.clone());
        let numerator = character.global_sign() as f64
            * character.numerator().eval(&theta)
            * theta.char_value(&xi);
        acc += numerator / weil_kernel_det(&theta, theta_prime, sigma, d);
    }
    Ok(acc / total as f64)
}

/// The same `σ`-slice evaluated symbolically at finite deformation, factor
/// by factor through the circle-integral branch rules.
pub fn sigma_slice_deformed(
    lambda: &HCParameter,
    sigma: &Permutation,
    theta_prime: &TorusPoint,
    d: &Deformation,
) -> Complex64 {
    let n = lambda.n();
    let character_sign = if (lambda.p() * lambda.q()).is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut acc = Complex64::new(0.0, 0.0);
    for beta in crate::perm::block_permutations(lambda.p(), lambda.q()) {
        let beta_inv = beta.inverse();
        let mut term = Complex64::new(beta.sign() as f64, 0.0);
        for m in 0..n {
            let j = sigma.apply(m);
            let pole = Complex64::from_polar((-d.log_radius(j)).exp(), theta_prime.get(j));
            let k = (lambda.entry(beta_inv.apply(m)) - crate::half::HalfInt::HALF)
                .as_int()
                .expect("genuine parameters have integer k");
            term *= -pole
                * cauchy_circle_integral(k, pole)
                    .expect("deformed poles are off the contour");
        }
        acc += term;
    }
    character_sign * acc
}

/// The limit of `sigma_slice_deformed` as the radii return to the unit
/// torus from inside the deformation region of `σ`.
pub fn sigma_slice_limit(
    lambda: &HCParameter,
    target: SignaturePair,
    sigma: &Permutation,
    theta_prime: &TorusPoint,
) -> Complex64 {
    let n = lambda.n();
    let pattern = e_sigma_pattern(sigma, lambda.p(), lambda.q(), target.r, target.s);
    let character_sign = if (lambda.p() * lambda.q()).is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut acc = Complex64::new(0.0, 0.0);
    for beta in crate::perm::block_permutations(lambda.p(), lambda.q()) {
        let beta_inv = beta.inverse();
        let mut term = Complex64::new(beta.sign() as f64, 0.0);
        let mut dead = false;
        for m in 0..n {
            let j = sigma.apply(m);
            let entry = lambda.entry(beta_inv.apply(m));
            let k = (entry - crate::half::HalfInt::HALF).as_int().expect("integer k");
            // -a·a^k -> -h'^{k+1} on the inside branch, +h'^{k+1} outside.
            let branch_sign = if k >= 0 && pattern[j] > 0 {
                -1.0
            } else if k < 0 && pattern[j] < 0 {
                1.0
            } else {
                dead = true;
                break;
            };
            term *= branch_sign
                * Complex64::from_polar(1.0, (k + 1) as f64 * theta_prime.get(j));
        }
        if !dead {
            acc += term;
        }
    }
    character_sign * acc
}

/// Lagrange extrapolation of `(X, value)` samples to the unit torus, in the
/// variable `y = e^{-X}` at `y = 1`. Exact whenever the deviation is a
/// polynomial of degree below the sample count, which is the case for the
/// transfer slices of small parameters.
pub fn extrapolate_to_unit(points: &[(f64, Complex64)]) -> Complex64 {
    assert!(!points.is_empty(), "need at least one sample");
    let ys: Vec<f64> = points.iter().map(|(x, _)| (-x).exp()).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, &(_, vj)) in points.iter().enumerate() {
        let mut weight = 1.0;
        for (m, &ym) in ys.iter().enumerate() {
            if m != j {
                weight *= (1.0 - ym) / (ys[j] - ym);
            }
        }
        acc += vj * weight;
    }
    acc
}

/// Quadrature values along a deformation schedule together with their
/// extrapolation and the symbolic limit they should reproduce.
#[derive(Clone, Debug)]
pub struct ScheduleRun {
    /// `(X, quadrature value, symbolic value at the same X)` per magnitude.
    pub samples: Vec<(f64, Complex64, Complex64)>,
    pub extrapolated: Complex64,
    pub limit: Complex64,
}

/// Runs `transfer_quadrature` over `schedule` magnitudes with the radial
/// sides prescribed by the region of `σ`, then extrapolates.
pub fn run_schedule(
    lambda: &HCParameter,
    target: SignaturePair,
    sigma: &Permutation,
    theta_prime: &TorusPoint,
    schedule: &[f64],
    n_per_axis: usize,
) -> Result<ScheduleRun, Error> {
    let pattern = e_sigma_pattern(sigma, lambda.p(), lambda.q(), target.r, target.s);
    let mut samples = Vec::with_capacity(schedule.len());
    for &magnitude in schedule {
        let d = Deformation::from_signs(&pattern, magnitude)?;
        let quad = transfer_quadrature(lambda, target, theta_prime, sigma, &d, n_per_axis)?;
        let symbolic = sigma_slice_deformed(lambda, sigma, theta_prime, &d);
        samples.push((magnitude, quad, symbolic));
    }
    let extrapolated =
        extrapolate_to_unit(&samples.iter().map(|&(x, v, _)| (x, v)).collect::<Vec<_>>());
    let limit = sigma_slice_limit(lambda, target, sigma, theta_prime);
    Ok(ScheduleRun { samples, extrapolated, limit })
}

/// One sample of the hyperbolic bound `Π ch(X_k)^{-n} ≤ C · Π e^{-2p X_k}`.
#[derive(Clone, Copy, Debug)]
pub struct OmegaSample {
    /// `Π e^{2p X_k} / ch(X_k)^n`, the constant this sample requires.
    pub ratio: f64,
    /// Whether the ratio stays under the provable slack `2^{np}`.
    pub within_slack: bool,
    /// Whether the slack-free inequality holds at this sample.
    pub naive_holds: bool,
}

/// Checks one sample; requires `n >= 2p` and strictly positive `X`.
pub fn omega_bound_check(p: usize, n: usize, x: &[f64]) -> Result<OmegaSample, Error> {
    if n < 2 * p {
        return Err(Error::OmegaRank { n, p });
    }
    if x.len() != p {
        return Err(Error::Invalid(format!("expected {p} coordinates, got {}", x.len())));
    }
    if x.iter().any(|&v| v <= 0.0 || !v.is_finite()) {
        return Err(Error::Invalid("X coordinates must be strictly positive".into()));
    }
    let log_ratio: f64 = x
        .iter()
        .map(|&v| 2.0 * p as f64 * v - n as f64 * v.cosh().ln())
        .sum();
    let ratio = log_ratio.exp();
    let slack = 2f64.powi((n * p) as i32);
    Ok(OmegaSample {
        ratio,
        within_slack: ratio <= slack,
        naive_holds: ratio <= 1.0,
    })
}

/// Aggregated bound measurements for one `(p, n)` pair.
#[derive(Clone, Debug)]
pub struct OmegaRow {
    pub p: usize,
    pub n: usize,
    pub samples: usize,
    /// Max ratio over the samples: the measured minimal constant.
    pub measured_constant: f64,
    pub slack_constant: f64,
    /// Samples where the slack-free inequality fails.
    pub naive_failures: usize,
    pub all_within_slack: bool,
}

/// Sweeps `X ∈ (0, 5]^p` for `p ≤ 3` and representative ranks `n ≥ 2p`.
pub fn omega_bound_table<R: Rng>(samples_per_row: usize, rng: &mut R) -> Vec<OmegaRow> {
    let configs = [(1, 2), (1, 4), (2, 4), (2, 6), (3, 6), (3, 8)];
    configs
        .iter()
        .map(|&(p, n)| {
            let mut measured: f64 = 0.0;
            let mut naive_failures = 0usize;
            let mut all_within = true;
            for _ in 0..samples_per_row {
                let x: Vec<f64> = (0..p).map(|_| rng.gen_range(f64::MIN_POSITIVE..=5.0)).collect();
                let sample = omega_bound_check(p, n, &x).expect("valid configuration");
                measured = measured.max(sample.ratio);
                if !sample.naive_holds {
                    naive_failures += 1;
                }
                all_within &= sample.within_slack;
            }
            OmegaRow {
                p,
                n,
                samples: samples_per_row,
                measured_constant: measured,
                slack_constant: 2f64.powi((n * p) as i32),
                naive_failures,
                all_within_slack: all_within,
            }
        })
        .collect()
}
