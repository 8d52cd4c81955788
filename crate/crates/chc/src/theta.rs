//! Harish-Chandra parameters for the double cover of `U(p,q)` and the theta
//! correspondence on them: the target signature `(r, s)`, the transferred
//! parameter, and the interchange permutation between the two.

use std::fmt;

use crate::error::{Error, ParamError};
use crate::half::HalfInt;
use crate::perm::Permutation;
use crate::roots::build_root_system;
use crate::weight::Weight;

/// The signature `(r, s)` of the group receiving the transfer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignaturePair {
    pub r: usize,
    pub s: usize,
}

impl SignaturePair {
    pub fn new(r: usize, s: usize) -> Self {
        SignaturePair { r, s }
    }

    pub fn n(&self) -> usize {
        self.r + self.s
    }
}

/// A validated Harish-Chandra parameter `λ_{a,b}` for `U(p, q)`.
///
/// The entries split as `(α_1..α_a, β_1..β_{p-a} | γ_1..γ_b, δ_1..δ_{q-b})`:
/// strictly decreasing half-integer blocks of lengths `p` and `q`, each with
/// its positive entries first, no zeros, and no repeats anywhere.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HCParameter {
    p: usize,
    q: usize,
    entries: Weight,
    a: usize,
    b: usize,
}

impl HCParameter {
    /// Validates a raw weight as a parameter for `U(p, q)`.
    pub fn new(raw: Weight, p: usize, q: usize) -> Result<Self, Error> {
        let n = p + q;
        if n == 0 {
            return Err(Error::Invalid("parameter needs p + q >= 1".into()));
        }
        if raw.len() != n {
            return Err(ParamError::LengthMismatch { expected: n, got: raw.len() }.into());
        }
        for (i, c) in raw.iter().enumerate() {
            if c.is_zero() {
                return Err(ParamError::ZeroEntry { index: i }.into());
            }
            if !c.is_strict_half() {
                return Err(ParamError::NonHalfInteger { index: i }.into());
            }
        }
        for (block, range) in [(1usize, 0..p), (2usize, p..n)] {
            let coords = &raw.coords()[range];
            for (k, pair) in coords.windows(2).enumerate() {
                if pair[0] <= pair[1] {
                    return Err(ParamError::NotDecreasing { block, index: k + 1 }.into());
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if raw.get(i) == raw.get(j) {
                    return Err(ParamError::Duplicate { first: i, second: j }.into());
                }
            }
        }
        let a = raw.coords()[..p].iter().filter(|c| c.is_positive()).count();
        let b = raw.coords()[p..].iter().filter(|c| c.is_positive()).count();
        Ok(HCParameter { p, q, entries: raw, a, b })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Number of positive entries in the first block.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Number of positive entries in the second block.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn entries(&self) -> &Weight {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> HalfInt {
        self.entries.get(i)
    }

    /// `(r, s) = (a + q - b, b + p - a)`.
    pub fn theta_signature(&self) -> SignaturePair {
        SignaturePair::new(self.a + self.q - self.b, self.b + self.p - self.a)
    }

    /// The transferred parameter `λ'_{a,b} = (α.., δ.., γ.., β..)`, a valid
    /// parameter for the signature `theta_signature()`.
    pub fn theta_parameter(&self) -> Weight {
        let (p, n) = (self.p, self.n());
        let coords = self.entries.coords();
        let alphas = &coords[..self.a];
        let betas = &coords[self.a..p];
        let gammas = &coords[p..p + self.b];
        let deltas = &coords[p + self.b..n];
        let mut out = Vec::with_capacity(n);
        out.extend_from_slice(alphas);
        out.extend_from_slice(deltas);
        out.extend_from_slice(gammas);
        out.extend_from_slice(betas);
        Weight::new(out)
    }

    /// The transferred parameter validated in its own signature.
    pub fn theta_lift(&self) -> HCParameter {
        let sig = self.theta_signature();
        HCParameter::new(self.theta_parameter(), sig.r, sig.s)
            .expect("theta parameter is a valid Harish-Chandra parameter")
    }

    /// The interchange permutation `τ_{a,b}` carrying `λ_{a,b}` into the
    /// `S_r × S_s`-orbit of `λ'_{a,b}`.
    ///
    /// The defining cases (`r ≤ p`, `p < r ≤ p+b`, `r > p+b`) all amount to
    /// the order-preserving swap of the index ranges `[a+1, min(r, p+b)]` and
    /// `[max(r, p+b)+1, n]`; the freedom on the stabilized blocks is pinned
    /// to the identity.
    pub fn tau_permutation(&self, target: SignaturePair) -> Result<Permutation, Error> {
        if target != self.theta_signature() {
            return Err(Error::TargetMismatch);
        }
        let n = self.n();
        let a = self.a;
        let cut = self.p + self.b;
        let r = target.r;
        let lo = r.min(cut);
        let hi = r.max(cut);
        debug_assert_eq!(lo - a, n - hi);
        let mut images: Vec<usize> = (0..n).collect();
        for t in 0..lo - a {
            images[a + t] = hi + t;
            images[hi + t] = a + t;
        }
        Ok(Permutation::from_images(images).expect("interval swap is a bijection"))
    }

    /// Highest weight `λ + ρ - 2ρ(k)` of the lowest K-type.
    pub fn lowest_k_type(&self) -> Weight {
        let rs = build_root_system(self.p, self.q).expect("n >= 1");
        let two_rho_k = rs.rho_compact().add(rs.rho_compact());
        self.entries.add(rs.rho()).add(&two_rho_k.neg())
    }
}

impl fmt::Display for HCParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.entries.coord_strings();
        write!(
            f,
            "U({},{}): ({} | {})",
            self.p,
            self.q,
            coords[..self.p].join(","),
            coords[self.p..].join(",")
        )
    }
}

impl fmt::Debug for HCParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How to compare weights as Weyl orbits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeylOrbit {
    /// Orbits of the full symmetric group: multiset equality.
    Full,
    /// Orbits of `S_r × S_{n-r}`: blockwise multiset equality.
    Block(usize),
}

/// Whether `mu` and `nu` lie in the same Weyl orbit.
pub fn weyl_orbit_equal(mu: &Weight, nu: &Weight, mode: WeylOrbit) -> bool {
    if mu.len() != nu.len() {
        return false;
    }
    let sorted = |c: &[HalfInt]| {
        let mut v = c.to_vec();
        v.sort();
        v
    };
    match mode {
        WeylOrbit::Full => sorted(mu.coords()) == sorted(nu.coords()),
        WeylOrbit::Block(r) => {
            assert!(r <= mu.len(), "block size exceeds weight length");
            sorted(&mu.coords()[..r]) == sorted(&nu.coords()[..r])
                && sorted(&mu.coords()[r..]) == sorted(&nu.coords()[r..])
        }
    }
}
