//! Exhaustive parameter sweeps: enumeration of Harish-Chandra parameters
//! within a box, and the per-parameter verification row combining the
//! matching, vanishing and orbit checks.

use itertools::Itertools;

use crate::characters::ds_numerator;
use crate::half::HalfInt;
use crate::theta::{weyl_orbit_equal, HCParameter, SignaturePair, WeylOrbit};
use crate::transfer::{transfer_bruteforce, transfer_closed_form};
use crate::weight::Weight;

/// All strict half-integers `v` with `0 < |v| <= max_abs`, descending.
pub fn half_integer_range(max_abs: HalfInt) -> Vec<HalfInt> {
    let top = max_abs.twice();
    let mut vals: Vec<HalfInt> = (1..=top)
        .filter(|t| t % 2 != 0)
        .flat_map(|t| [HalfInt::from_twice(t), HalfInt::from_twice(-t)])
        .collect();
    vals.sort();
    vals.reverse();
    vals
}

/// Every valid parameter for `U(p, q)` with entries bounded by `max_abs`:
/// all ways to pick two disjoint entry sets, each block sorted decreasingly.
pub fn enumerate_parameters(p: usize, q: usize, max_abs: HalfInt) -> Vec<HCParameter> {
    let values = half_integer_range(max_abs);
    let mut out = Vec::new();
    for first in values.iter().copied().combinations(p) {
        let rest: Vec<HalfInt> = values.iter().copied().filter(|v| !first.contains(v)).collect();
        for second in rest.iter().copied().combinations(q) {
            let mut coords = first.clone();
            coords.extend_from_slice(&second);
            let lam = HCParameter::new(Weight::new(coords), p, q)
                .expect("descending disjoint blocks are valid");
            out.push(lam);
        }
    }
    out
}

/// The signature splits `(p, q)` with `p <= q` and `1 <= p+q <= max_n`,
/// ordered by size then by `p`.
pub fn signature_splits(max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for p in 0..=n / 2 {
            out.push((p, n - p));
        }
    }
    out
}

/// Result of the three per-parameter checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub p: usize,
    pub q: usize,
    pub a: usize,
    pub b: usize,
    pub r: usize,
    pub s: usize,
    /// Term count of the brute-force transfer numerator.
    pub terms: usize,
    /// Brute force = closed form = lifted discrete series numerator,
    /// up to one constant.
    pub match_ok: bool,
    /// Brute force vanishes at every other signature of the same size.
    pub zero_elsewhere: bool,
    /// `τλ` and `λ'` agree as `S_r × S_s` block multisets.
    pub orbit_ok: bool,
}

impl VerifyRow {
    pub fn all_ok(&self) -> bool {
        self.match_ok && self.zero_elsewhere && self.orbit_ok
    }

    pub fn csv_header() -> &'static str {
        "p,q,a,b,r,s,terms,match,zero_elsewhere,orbit_ok"
    }

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.p,
            self.q,
            self.a,
            self.b,
            self.r,
            self.s,
            self.terms,
            self.match_ok,
            self.zero_elsewhere,
            self.orbit_ok
        )
    }
}

/// Runs the matching, vanishing and orbit checks for one parameter.
pub fn verify_parameter(lambda: &HCParameter) -> VerifyRow {
    let n = lambda.n();
    let target = lambda.theta_signature();
    let brute = transfer_bruteforce(lambda, target).expect("theta signature has the right size");
    let closed = transfer_closed_form(lambda, target);
    let lifted = ds_numerator(&lambda.theta_lift());
    let match_ok =
        brute.equal_up_to_constant(&closed) && brute.equal_up_to_constant(lifted.numerator());

    let mut zero_elsewhere = true;
    for r in 0..=n {
        let other = SignaturePair::new(r, n - r);
        if other == target {
            continue;
        }
        if !transfer_bruteforce(lambda, other)
            .expect("same size")
            .is_empty()
        {
            zero_elsewhere = false;
        }
    }

    let tau = lambda.tau_permutation(target).expect("target is the theta signature");
    let orbit_ok = weyl_orbit_equal(
        &tau.act_weight(lambda.entries()),
        &lambda.theta_parameter(),
        WeylOrbit::Block(target.r),
    );

    VerifyRow {
        p: lambda.p(),
        q: lambda.q(),
        a: lambda.a(),
        b: lambda.b(),
        r: target.r,
        s: target.s,
        terms: brute.len(),
        match_ok,
        zero_elsewhere,
        orbit_ok,
    }
}

/// The full sweep over `p <= q, p+q <= max_n, |λ_i| <= max_abs`, optionally
/// split across `jobs` worker threads. Rows come back in enumeration order
/// regardless of the worker count.
pub fn run_verify(max_n: usize, max_abs: HalfInt, jobs: usize) -> Vec<VerifyRow> {
    let mut params = Vec::new();
    for (p, q) in signature_splits(max_n) {
        params.extend(enumerate_parameters(p, q, max_abs));
    }
    let jobs = jobs.max(1);
    if jobs == 1 || params.len() < 2 {
        return params.iter().map(verify_parameter).collect();
    }

    let mut rows: Vec<Option<VerifyRow>> = vec![None; params.len()];
    let chunk = params.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        for (slot_chunk, param_chunk) in rows.chunks_mut(chunk).zip(params.chunks(chunk)) {
            scope.spawn(move || {
                for (slot, lam) in slot_chunk.iter_mut().zip(param_chunk) {
                    *slot = Some(verify_parameter(lam));
                }
            });
        }
    });
    rows.into_iter().map(|r| r.expect("every slot filled")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_range_is_symmetric_and_descending() {
        let vals = half_integer_range(HalfInt::from_twice(5));
        assert_eq!(
            vals,
            [5, 3, 1, -1, -3, -5].map(HalfInt::from_twice).to_vec()
        );
    }

    #[test]
    fn enumeration_counts() {
        // C(4,1) * C(3,1) ordered block choices for U(1,1) with |λ| <= 3/2.
        assert_eq!(enumerate_parameters(1, 1, HalfInt::from_twice(3)).len(), 12);
        assert_eq!(enumerate_parameters(0, 2, HalfInt::from_twice(3)).len(), 6);
        // Every enumerated parameter validates and respects the bound.
        for lam in enumerate_parameters(2, 1, HalfInt::from_twice(5)) {
            assert!(lam.entries().iter().all(|c| c.abs() <= HalfInt::from_twice(5)));
        }
    }

    #[test]
    fn splits_are_ordered() {
        assert_eq!(
            signature_splits(3),
            vec![(0, 1), (0, 2), (1, 1), (0, 3), (1, 2)]
        );
    }

    #[test]
    fn verify_rows_pass_on_small_box() {
        for (p, q) in signature_splits(3) {
            for lam in enumerate_parameters(p, q, HalfInt::from_twice(5)) {
                let row = verify_parameter(&lam);
                assert!(row.all_ok(), "failed for {lam}: {row:?}");
                assert_eq!(
                    row.terms,
                    crate::perm::factorial(row.r) * crate::perm::factorial(row.s)
                );
            }
        }
    }

    #[test]
    fn parallel_sweep_matches_serial() {
        let serial = run_verify(2, HalfInt::from_twice(3), 1);
        let parallel = run_verify(2, HalfInt::from_twice(3), 4);
        assert_eq!(serial, parallel);
        assert!(serial.iter().all(VerifyRow::all_ok));
    }
}
