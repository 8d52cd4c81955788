//! The character transfer on the compact Cartan, by two independent routes.
//!
//! The brute-force route expands the transfer as a double sum over
//! `σ ∈ S_{r+s}` and `β ∈ S_p × S_q`, takes every factor-wise circle integral
//! symbolically through the residue branch rules (the radial side of each
//! pole is read off the deformation region of `σ`), and accumulates the
//! surviving exponentials with exact integer coefficients. The closed-form
//! route is a single alternating sum over `S_r × S_s` of the interchanged
//! parameter. Both are "up to one global nonzero constant"; the matching
//! predicate compares them after normalization.

use num_complex::Complex64;

use crate::characters::ds_numerator;
use crate::error::Error;
use crate::expsum::SignedExpSum;
use crate::half::HalfInt;
use crate::perm::{all_permutations, block_permutations, Permutation};
use crate::theta::{HCParameter, SignaturePair};
use crate::torus::{Deformation, TorusPoint};
use crate::weight::Weight;

/// `(1/2πi) ∮ z^k / (z - a) dz` over the unit circle:
/// `a^k` for `k ≥ 0, |a| < 1`; `-a^k` for `k < 0, |a| > 1`; `0` otherwise.
/// Fails when `|a|` is within `1e-12` of the circle.
pub fn cauchy_circle_integral(k: i64, a: Complex64) -> Result<Complex64, Error> {
    let modulus = a.norm();
    if (modulus - 1.0).abs() <= 1e-12 {
        return Err(Error::PoleOnContour);
    }
    if k < 0 && modulus == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let value = if k >= 0 && modulus < 1.0 {
        a.powi(k as i32)
    } else if k < 0 && modulus > 1.0 {
        -a.powi(k as i32)
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(value)
}

/// Required sign of each `X_j` on the deformation region of `σ`: entry `j`
/// is `+1` when the radius `r_j = e^{-X_j}` must sit inside the unit circle
/// and `-1` when outside. Position `j = σ(i)` gets `+1` exactly when `i`
/// and `j` fall on matching sides of the splits `(p, q)` and `(r, s)`.
pub fn e_sigma_pattern(sigma: &Permutation, p: usize, q: usize, r: usize, s: usize) -> Vec<i8> {
    let n = p + q;
    assert_eq!(r + s, n, "signatures must have equal size");
    assert_eq!(sigma.len(), n, "permutation size mismatch");
    let mut signs = vec![0i8; n];
    for i in 0..n {
        let j = sigma.apply(i);
        signs[j] = if (i < p) == (j < r) { 1 } else { -1 };
    }
    signs
}

/// Whether the residue product for `g = σ ∘ β⁻¹` survives: every positive
/// entry of the first block must land in `{1..r}`, every negative one in
/// `{r+1..n}`, and the opposite for the second block.
pub fn residue_support_predicate(
    g: &Permutation,
    lambda: &HCParameter,
    target: SignaturePair,
) -> bool {
    let p = lambda.p();
    let r = target.r;
    (0..lambda.n()).all(|i| {
        let positive = lambda.entry(i).is_positive();
        positive == ((i < p) == (g.apply(i) < r))
    })
}

/// One surviving term of the brute-force expansion.
#[derive(Clone, Debug)]
pub struct ResidueTerm {
    pub sigma: Permutation,
    pub beta: Permutation,
    /// The exponent on the target torus: `(σβ⁻¹)·λ` (the `ξ`-shift from the
    /// metaplectic half-powers cancels against the `det^{1/2}` prefactor).
    pub weight: Weight,
    /// `ε(σ)ε(β)` times the orientation signs of the negative-exponent
    /// residues.
    pub sign: i64,
}

/// Evaluates the factor-wise residue branches for one `(σ, β)` pair.
/// Returns `None` when some factor falls in the vanishing branch.
pub fn residue_term(
    sigma: &Permutation,
    beta: &Permutation,
    lambda: &HCParameter,
    target: SignaturePair,
) -> Option<ResidueTerm> {
    let pattern = e_sigma_pattern(sigma, lambda.p(), lambda.q(), target.r, target.s);
    let beta_inv = beta.inverse();
    let raw = term_against_pattern(
        sigma.images(),
        &pattern,
        beta_inv.images(),
        lambda,
        sigma.sign() * beta.sign(),
    )?;
    Some(ResidueTerm {
        sigma: sigma.clone(),
        beta: beta.clone(),
        weight: raw.0,
        sign: raw.1,
    })
}

/// Shared core of `residue_term` and the brute-force accumulation: factor
/// `i` contributes `h'^{λ_i - 1/2}` at position `σ(β⁻¹(i))` when the branch
/// rules of the circle integral keep it alive, with a minus sign for each
/// negative exponent.
fn term_against_pattern(
    sigma_images: &[usize],
    pattern: &[i8],
    beta_inv_images: &[usize],
    lambda: &HCParameter,
    base_sign: i64,
) -> Option<(Weight, i64)> {
    let n = lambda.n();
    let mut coords = vec![HalfInt::ZERO; n];
    let mut sign = base_sign;
    for i in 0..n {
        let entry = lambda.entry(i);
        debug_assert!(entry.is_strict_half(), "validated parameters are genuine");
        let j = sigma_images[beta_inv_images[i]];
        // k = λ_i - 1/2 and |a| = e^{-X_j}: k ≥ 0 needs X_j > 0, k < 0 needs
        // X_j < 0; anything else is the zero branch of the circle integral.
        if entry.is_positive() {
            if pattern[j] < 0 {
                return None;
            }
        } else {
            if pattern[j] > 0 {
                return None;
            }
            sign = -sign;
        }
        coords[j] = entry;
    }
    Some((Weight::new(coords), sign))
}

/// The transfer of the discrete series with parameter `λ` to the group of
/// signature `target`, by exhaustive residue summation. The (unknown) global
/// constant is dropped; the empty sum encodes the vanishing transfer.
pub fn transfer_bruteforce(
    lambda: &HCParameter,
    target: SignaturePair,
) -> Result<SignedExpSum, Error> {
    let n = lambda.n();
    if target.n() != n {
        return Err(Error::TargetSize { r: target.r, s: target.s, n });
    }
    let sigmas: Vec<(Permutation, i64, Vec<i8>)> = all_permutations(n)
        .into_iter()
        .map(|sigma| {
            let sign = sigma.sign();
            let pattern = e_sigma_pattern(&sigma, lambda.p(), lambda.q(), target.r, target.s);
            (sigma, sign, pattern)
        })
        .collect();
    let betas: Vec<(Permutation, i64)> = block_permutations(lambda.p(), lambda.q())
        .into_iter()
        .map(|beta| {
            let inv = beta.inverse();
            let sign = beta.sign();
            (inv, sign)
        })
        .collect();

    let mut acc: std::collections::BTreeMap<Weight, i64> = std::collections::BTreeMap::new();
    for (sigma, sigma_sign, pattern) in &sigmas {
        for (beta_inv, beta_sign) in &betas {
            if let Some((weight, sign)) = term_against_pattern(
                sigma.images(),
                pattern,
                beta_inv.images(),
                lambda,
                sigma_sign * beta_sign,
            ) {
                *acc.entry(weight).or_insert(0) += sign;
            }
        }
    }
    Ok(SignedExpSum::from_integer_terms(acc))
}

/// The closed form of the same transfer: `Σ_{σ ∈ S_r×S_s} ε(σ) e^{σ(τλ)}`
/// when `target` is the theta signature of `λ`, and the empty sum otherwise.
pub fn transfer_closed_form(lambda: &HCParameter, target: SignaturePair) -> SignedExpSum {
    if target != lambda.theta_signature() {
        return SignedExpSum::new();
    }
    let tau = lambda
        .tau_permutation(target)
        .expect("target equals the theta signature");
    let moved = tau.act_weight(lambda.entries());
    let mut sum = SignedExpSum::new();
    for sigma in block_permutations(target.r, target.s) {
        sum.add_integer_term(sigma.act_weight(&moved), sigma.sign());
    }
    sum
}

/// `det(1 - p(h) r p(h'))` on the `σ`-twisted diagonal:
/// `Π_i (1 - h_i (rh')⁻¹_{σ(i)})` with `h_i = e^{iθ_i}` and
/// `(rh')_j = e^{-X_j + iθ'_j}`. Never zero off the unit torus.
pub fn weil_kernel_det(
    theta: &TorusPoint,
    theta_prime: &TorusPoint,
    sigma: &Permutation,
    d: &Deformation,
) -> Complex64 {
    let n = theta.len();
    assert_eq!(theta_prime.len(), n, "torus dimension mismatch");
    assert_eq!(sigma.len(), n, "permutation size mismatch");
    assert_eq!(d.len(), n, "deformation size mismatch");
    let mut acc = Complex64::new(1.0, 0.0);
    for i in 0..n {
        let j = sigma.apply(i);
        let pole_inv = Complex64::from_polar(d.log_radius(j).exp(), -theta_prime.get(j));
        let h = Complex64::from_polar(1.0, theta.get(i));
        acc *= Complex64::new(1.0, 0.0) - h * pole_inv;
    }
    acc
}

/// The headline matching predicate: the brute-force transfer to the theta
/// signature agrees, up to one constant, with both the closed form and the
/// discrete series numerator of the lifted parameter.
pub fn transfer_matches_theta_lift(lambda: &HCParameter) -> bool {
    let target = lambda.theta_signature();
    let brute = transfer_bruteforce(lambda, target).expect("theta signature has the right size");
    let closed = transfer_closed_form(lambda, target);
    let lifted = ds_numerator(&lambda.theta_lift());
    brute.equal_up_to_constant(&closed) && brute.equal_up_to_constant(lifted.numerator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Weight;

    fn param(s: &str, p: usize, q: usize) -> HCParameter {
        HCParameter::new(Weight::parse_list(s).unwrap(), p, q).unwrap()
    }

    #[test]
    fn cauchy_branches() {
        let half = Complex64::new(0.5, 0.0);
        let two = Complex64::new(2.0, 0.0);
        assert_eq!(cauchy_circle_integral(0, half).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(cauchy_circle_integral(-1, two).unwrap(), Complex64::new(-0.5, 0.0));
        assert_eq!(cauchy_circle_integral(3, two).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(cauchy_circle_integral(-2, half).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(
            cauchy_circle_integral(1, Complex64::from_polar(1.0, 0.3)),
            Err(Error::PoleOnContour)
        );
    }

    #[test]
    fn pattern_examples() {
        let id1 = Permutation::identity(1);
        assert_eq!(e_sigma_pattern(&id1, 0, 1, 0, 1), vec![1]);
        assert_eq!(e_sigma_pattern(&id1, 0, 1, 1, 0), vec![-1]);
        let id2 = Permutation::identity(2);
        assert_eq!(e_sigma_pattern(&id2, 1, 1, 1, 1), vec![1, 1]);
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(e_sigma_pattern(&swap, 1, 1, 1, 1), vec![-1, -1]);
    }

    #[test]
    fn support_predicate_examples() {
        let lam = param("1/2", 0, 1);
        let id = Permutation::identity(1);
        assert!(residue_support_predicate(&id, &lam, SignaturePair::new(0, 1)));
        assert!(!residue_support_predicate(&id, &lam, SignaturePair::new(1, 0)));
    }

    /// A canonical parameter with the prescribed sign profile `(a, b)`.
    fn profile_param(p: usize, q: usize, a: usize, b: usize) -> HCParameter {
        let block = |len: usize, positives: usize| -> Vec<HalfInt> {
            (0..len)
                .map(|i| {
                    if i < positives {
                        HalfInt::from_twice(2 * (positives - i) as i64 - 1)
                    } else {
                        HalfInt::from_twice(-(2 * (i - positives) as i64 + 1))
                    }
                })
                .collect()
        };
        let mut coords = block(p, a);
        // Shift the second block by an even amount so all entries differ.
        let shift = HalfInt::from_int(2 * (p + q) as i64);
        coords.extend(block(q, b).into_iter().map(|c| {
            if c.is_positive() {
                c + shift
            } else {
                c - shift
            }
        }));
        HCParameter::new(Weight::new(coords), p, q).unwrap()
    }

    #[test]
    fn term_level_oracle_exhaustive() {
        // Product of circle-integral factors is nonzero iff the support
        // predicate holds for σ∘β⁻¹. Both sides depend on λ only through
        // its sign profile, so one parameter per (a, b) makes the sweep
        // over p+q <= 5, all targets and all (σ, β) exhaustive.
        for n in 1..=5usize {
            for p in 0..=n / 2 {
                let q = n - p;
                let sigmas = all_permutations(n);
                let betas = block_permutations(p, q);
                for a in 0..=p {
                    for b in 0..=q {
                        let lam = profile_param(p, q, a, b);
                        for r in 0..=n {
                            let target = SignaturePair::new(r, n - r);
                            for sigma in &sigmas {
                                for beta in &betas {
                                    let g = sigma.compose(&beta.inverse());
                                    let alive =
                                        residue_term(sigma, beta, &lam, target).is_some();
                                    assert_eq!(
                                        alive,
                                        residue_support_predicate(&g, &lam, target),
                                        "profile (p,q,a,b)=({p},{q},{a},{b}), target ({r},{})",
                                        n - r
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn residue_term_weight_and_sign() {
        let lam = param("1/2,-1/2", 1, 1);
        let target = SignaturePair::new(2, 0);
        let sigma = Permutation::identity(2);
        let beta = Permutation::identity(2);
        let t = residue_term(&sigma, &beta, &lam, target).unwrap();
        assert_eq!(t.weight, Weight::parse_list("1/2,-1/2").unwrap());
        // One negative exponent flips the sign once.
        assert_eq!(t.sign, -1);
        // weight = (σβ⁻¹)·λ in general.
        let g = t.sigma.compose(&t.beta.inverse());
        assert_eq!(t.weight, g.act_weight(lam.entries()));
    }

    #[test]
    fn bruteforce_examples() {
        let lam = param("1/2", 0, 1);
        let sum = transfer_bruteforce(&lam, SignaturePair::new(0, 1)).unwrap();
        assert_eq!(sum.len(), 1);
        let w = Weight::parse_list("1/2").unwrap();
        assert_eq!(sum.coefficient(&w).unwrap().numer().abs(), 1);

        let zero = transfer_bruteforce(&lam, SignaturePair::new(1, 0)).unwrap();
        assert!(zero.is_empty());

        assert!(matches!(
            transfer_bruteforce(&lam, SignaturePair::new(2, 1)),
            Err(Error::TargetSize { .. })
        ));

        let lam = param("1/2,-1/2", 1, 1);
        let brute = transfer_bruteforce(&lam, SignaturePair::new(2, 0)).unwrap();
        let closed = transfer_closed_form(&lam, SignaturePair::new(2, 0));
        assert!(brute.equal_up_to_constant(&closed));
        assert_eq!(closed.len(), 2);
    }

    #[test]
    fn closed_form_examples() {
        let lam = param("1/2", 0, 1);
        let sum = transfer_closed_form(&lam, SignaturePair::new(0, 1));
        assert_eq!(sum.len(), 1);
        assert_eq!(
            sum.coefficient(&Weight::parse_list("1/2").unwrap()),
            Some(num_rational::Rational64::from_integer(1))
        );

        let wrong = transfer_closed_form(&lam, SignaturePair::new(1, 0));
        assert!(wrong.is_empty());

        let lam = param("1/2,-1/2", 1, 1);
        let sum = transfer_closed_form(&lam, SignaturePair::new(2, 0));
        assert_eq!(
            sum.coefficient(&Weight::parse_list("1/2,-1/2").unwrap()),
            Some(num_rational::Rational64::from_integer(1))
        );
        assert_eq!(
            sum.coefficient(&Weight::parse_list("-1/2,1/2").unwrap()),
            Some(num_rational::Rational64::from_integer(-1))
        );
    }

    #[test]
    fn kernel_det_examples() {
        // n=1, θ=0, θ'=0, X=ln2: 1 - 1/(1/2) = -1.
        let theta = TorusPoint::zero(1);
        let d = Deformation::new(vec![2.0f64.ln()]).unwrap();
        let v = weil_kernel_det(&theta, &theta, &Permutation::identity(1), &d);
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-14);

        // |h (rh')⁻¹| = e^{X}, so the kernel degenerates to 1 as X -> -inf.
        let d = Deformation::new(vec![-40.0]).unwrap();
        let v = weil_kernel_det(&theta, &theta, &Permutation::identity(1), &d);
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);

        // Never zero off the unit torus: |h (rh')⁻¹| = e^{X} != 1.
        let theta = TorusPoint::new(vec![0.3, -0.8]);
        let tp = TorusPoint::new(vec![1.1, 0.2]);
        let d = Deformation::new(vec![0.2, -0.4]).unwrap();
        for sigma in all_permutations(2) {
            assert!(weil_kernel_det(&theta, &tp, &sigma, &d).norm() > 1e-6);
        }
    }

    #[test]
    fn transfer_is_antisymmetric_under_target_weyl_group() {
        let lam = param("3/2,-1/2,5/2,-5/2", 2, 2);
        let target = lam.theta_signature();
        let brute = transfer_bruteforce(&lam, target).unwrap();
        for w in block_permutations(target.r, target.s) {
            let permuted = brute.permuted(&w);
            let scaled = brute.scaled(num_rational::Rational64::from_integer(w.sign()));
            assert_eq!(permuted, scaled);
        }
    }

    #[test]
    fn matches_theta_lift_examples() {
        assert!(transfer_matches_theta_lift(&param("1/2", 0, 1)));
        assert!(transfer_matches_theta_lift(&param("1/2,-1/2", 1, 1)));
        assert!(transfer_matches_theta_lift(&param("-3/2,5/2", 1, 1)));
        assert!(transfer_matches_theta_lift(&param("3/2,-1/2,5/2,-5/2", 2, 2)));
        assert!(transfer_matches_theta_lift(&param("1/2,5/2,3/2,-7/2", 1, 3)));
    }
}
