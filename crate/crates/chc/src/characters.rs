//! Discrete series characters on the compact Cartan: the alternating-sum
//! numerator over the compact Weyl group, pointwise evaluation against the
//! Weyl denominator, and boundedness scans.

use num_complex::Complex64;
use rand::Rng;

use crate::error::Error;
use crate::expsum::SignedExpSum;
use crate::perm::block_permutations;
use crate::roots::{build_root_system, sample_regular_point, RootSystem, REGULARITY_TOL};
use crate::theta::HCParameter;
use crate::torus::TorusPoint;

/// A discrete series character restricted to the regular compact Cartan:
/// `Θ_λ(θ) = global_sign · numerator(θ) / Δ_Ψ(θ)`.
#[derive(Clone, Debug)]
pub struct DSCharacter {
    numerator: SignedExpSum,
    global_sign: i64,
    roots: RootSystem,
}

/// `numerator = Σ_{w ∈ S_p×S_q} ε(w) e^{wλ}`, `global_sign = (-1)^{pq}`.
pub fn ds_numerator(lambda: &HCParameter) -> DSCharacter {
    let (p, q) = (lambda.p(), lambda.q());
    let mut numerator = SignedExpSum::new();
    for w in block_permutations(p, q) {
        numerator.add_integer_term(w.act_weight(lambda.entries()), w.sign());
    }
    let global_sign = if (p * q) % 2 == 0 { 1 } else { -1 };
    DSCharacter {
        numerator,
        global_sign,
        roots: build_root_system(p, q).expect("validated parameter has n >= 1"),
    }
}

impl DSCharacter {
    pub fn numerator(&self) -> &SignedExpSum {
        &self.numerator
    }

    pub fn global_sign(&self) -> i64 {
        self.global_sign
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// Character value at a regular point; fails on singular `θ`.
    pub fn evaluate(&self, theta: &TorusPoint) -> Result<Complex64, Error> {
        let denom = self.roots.delta_psi(theta);
        if denom.norm() <= REGULARITY_TOL {
            return Err(Error::SingularPoint);
        }
        Ok(self.global_sign as f64 * self.numerator.eval(theta) / denom)
    }
}

/// Max of `|D|^{1/2} |numerator/Δ_Ψ| = |numerator(θ)|` over sampled regular
/// points. Always bounded by `numerator.coefficient_abs_sum()`.
pub fn boundedness_scan<R: Rng>(num: &SignedExpSum, samples: usize, rng: &mut R) -> f64 {
    let n = num.max_weight().expect("scan needs a nonempty sum").len();
    let rs = build_root_system(0, n).expect("n >= 1");
    let mut sup = 0.0f64;
    for _ in 0..samples {
        let theta = sample_regular_point(&rs, rng);
        sup = sup.max(num.eval(&theta).norm());
    }
    sup
}
