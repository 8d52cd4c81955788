//! Root data for `u(p,q)`: positive roots, compact/noncompact split,
//! Weyl denominators, regularity, strongly orthogonal root sets and the
//! shapes of the associated Cartan subgroups.

use num_complex::Complex64;
use rand::Rng;

use crate::error::Error;
use crate::half::HalfInt;
use crate::torus::TorusPoint;
use crate::weight::Weight;

/// A point counts as regular when the Weyl denominator modulus exceeds this.
pub const REGULARITY_TOL: f64 = 1e-9;

/// Rejection threshold used by random scans, stricter than `REGULARITY_TOL`
/// to keep sampled denominators tame.
pub const SCAN_REJECT_TOL: f64 = 1e-6;

/// Positive roots `e_i - e_j` (`i < j`) of `gl(n)` with the compact subset
/// determined by the signature split `(p, q)`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    n: usize,
    p: usize,
    q: usize,
    positive_roots: Vec<(usize, usize)>,
    compact_flags: Vec<bool>,
    rho: Weight,
    rho_compact: Weight,
}

/// Builds the root system of `u(p, q)`; requires `p + q >= 1`.
pub fn build_root_system(p: usize, q: usize) -> Result<RootSystem, Error> {
    let n = p + q;
    if n == 0 {
        return Err(Error::Invalid("root system needs p + q >= 1".into()));
    }
    let mut positive_roots = Vec::with_capacity(n * (n - 1) / 2);
    let mut compact_flags = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            positive_roots.push((i, j));
            compact_flags.push(j < p || i >= p);
        }
    }
    // rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2)
    let rho = Weight::from_twice(
        &(0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect::<Vec<_>>(),
    );
    let mut rho_c = vec![HalfInt::ZERO; n];
    for (&(i, j), &compact) in positive_roots.iter().zip(&compact_flags) {
        if compact {
            rho_c[i] += HalfInt::HALF;
            rho_c[j] -= HalfInt::HALF;
        }
    }
    Ok(RootSystem {
        n,
        p,
        q,
        positive_roots,
        compact_flags,
        rho,
        rho_compact: Weight::new(rho_c),
    })
}

impl RootSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn split(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn positive_roots(&self) -> &[(usize, usize)] {
        &self.positive_roots
    }

    pub fn compact_flags(&self) -> &[bool] {
        &self.compact_flags
    }

    pub fn is_compact(&self, k: usize) -> bool {
        self.compact_flags[k]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rho_compact(&self) -> &Weight {
        &self.rho_compact
    }

    /// `Δ_Ψ(θ) = Π_{α>0} (e^{iα(θ)/2} - e^{-iα(θ)/2}) = Π 2i sin(α(θ)/2)`.
    pub fn delta_psi(&self, theta: &TorusPoint) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for &(i, j) in &self.positive_roots {
            let half = 0.5 * (theta.get(i) - theta.get(j));
            acc *= Complex64::new(0.0, 2.0 * half.sin());
        }
        acc
    }

    /// The opposite-system denominator `Δ_Φ` for `Φ = -Ψ`.
    pub fn delta_phi(&self, theta: &TorusPoint) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for &(i, j) in &self.positive_roots {
            let half = 0.5 * (theta.get(i) - theta.get(j));
            acc *= Complex64::new(0.0, -2.0 * half.sin());
        }
        acc
    }

    /// `Π_{α>0} |1 - e^{iα(θ)}|²`, which equals `Δ_Ψ·Δ_Φ` and the modulus of
    /// `det(Id - Ad(h))` on `g/h`.
    pub fn abs_delta_squared(&self, theta: &TorusPoint) -> f64 {
        let mut acc = 1.0;
        for &(i, j) in &self.positive_roots {
            let half = 0.5 * (theta.get(i) - theta.get(j));
            let s = half.sin();
            acc *= 4.0 * s * s;
        }
        acc
    }

    /// `|D(h)|^{1/2} = Π_{α>0} |1 - e^{iα(θ)}| = |Δ_Ψ(θ)|`.
    pub fn weyl_d_sqrt(&self, theta: &TorusPoint) -> f64 {
        let mut acc = 1.0;
        for &(i, j) in &self.positive_roots {
            let half = 0.5 * (theta.get(i) - theta.get(j));
            acc *= 2.0 * half.sin().abs();
        }
        acc
    }

    pub fn is_regular(&self, theta: &TorusPoint) -> bool {
        self.weyl_d_sqrt(theta) > REGULARITY_TOL
    }
}

/// Draws uniform points on `[0, 2π)^n`, rejecting near-singular ones.
pub fn sample_regular_point<R: Rng>(rs: &RootSystem, rng: &mut R) -> TorusPoint {
    loop {
        let theta = TorusPoint::new(
            (0..rs.n()).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect(),
        );
        if rs.weyl_d_sqrt(&theta) > SCAN_REJECT_TOL {
            return theta;
        }
    }
}

/// A nested set `S_i` of strongly orthogonal noncompact roots; each pair
/// `(t, u)` is the root `e_{t+1} - e_{u+1}` in 1-based terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyOrthogonalSet {
    pub index: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// The chain `S_0 = ∅ ⊂ S_1 ⊂ ... ⊂ S_min(p,q)` indexing the conjugacy
/// classes of Cartan subgroups; `S_i` pairs `e_t` with `e_{m+t}` for
/// `t = 1..i`, where `m = min(p, q)`.
pub fn strongly_orthogonal_sets(p: usize, q: usize) -> Vec<StronglyOrthogonalSet> {
    let m = p.min(q);
    (0..=m)
        .map(|i| StronglyOrthogonalSet {
            index: i,
            pairs: (0..i).map(|t| (t, m + t)).collect(),
        })
        .collect()
}

/// The `T·A` shape of the Cartan subgroup attached to a strongly orthogonal
/// set: `|s|` hyperbolic pairs and `n - 2|s|` compact circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanShape {
    pub compact_circles: usize,
    pub hyperbolic_pairs: usize,
}

pub fn cartan_shape(s: &StronglyOrthogonalSet, n: usize) -> CartanShape {
    let k = s.pairs.len();
    assert!(2 * k <= n, "strongly orthogonal set too large for rank {n}");
    CartanShape { compact_circles: n - 2 * k, hyperbolic_pairs: k }
}

/// `det(Id - Ad(h))` on the nilradical attached to `S_k`, evaluated on the
/// diagonal coordinates `(e^{iθ_1-X_1}, ..., e^{iθ_k-X_k}, t_1, ...,
/// t_{n-2k}, e^{iθ_1+X_1}, ..., e^{iθ_k+X_k})` with `S_k` placed at
/// `{e_1 - e_{n-k+1}, ...}`. The product runs over the explicit root list
/// `{e_i - e_j : i ≤ k < j ≤ n-k} ∪ {e_i - e_j : k < i ≤ n-k < j}`, whose
/// factors pair into `|1 - z|²` terms; the value is real and positive on
/// regular points.
///
/// Returns the real value; fails if the imaginary part survives the pairing
/// or the product degenerates to zero (singular input).
pub fn eta_positivity(
    k: usize,
    r: usize,
    s: usize,
    theta: &[f64],
    x: &[f64],
    circle_angles: &[f64],
) -> Result<f64, Error> {
    if k > r.min(s) {
        return Err(Error::SetTooLarge { k, r, s });
    }
    let acc = eta_nilradical_product(k, r + s, theta, x, circle_angles);
    let scale = acc.norm().max(1.0);
    if acc.im.abs() > 1e-10 * scale {
        return Err(Error::NonRealProduct { im: acc.im });
    }
    if acc.re <= 1e-12 * scale {
        return Err(Error::SingularPoint);
    }
    Ok(acc.re)
}

/// The raw complex product behind `eta_positivity`, before the reality and
/// positivity checks.
pub fn eta_nilradical_product(
    k: usize,
    n: usize,
    theta: &[f64],
    x: &[f64],
    circle_angles: &[f64],
) -> Complex64 {
    assert!(2 * k <= n, "need n >= 2k");
    assert_eq!(theta.len(), k, "need one theta per hyperbolic pair");
    assert_eq!(x.len(), k, "need one X per hyperbolic pair");
    assert_eq!(circle_angles.len(), n - 2 * k, "need n - 2k circle angles");

    let mut h = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..k {
        h[i] = Complex64::from_polar((-x[i]).exp(), theta[i]);
        h[n - k + i] = Complex64::from_polar(x[i].exp(), theta[i]);
    }
    for (j, &phi) in circle_angles.iter().enumerate() {
        h[k + j] = Complex64::from_polar(1.0, phi);
    }

    let mut acc = Complex64::new(1.0, 0.0);
    for i in 0..k {
        for j in k..n - k {
            // 1 - h^{-(e_i - e_j)} = 1 - h_i^{-1} h_j
            acc *= Complex64::new(1.0, 0.0) - h[j] / h[i];
        }
    }
    for i in k..n - k {
        for j in n - k..n {
            acc *= Complex64::new(1.0, 0.0) - h[j] / h[i];
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn build_examples() {
        let rs = build_root_system(1, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[(0, 1)]);
        assert_eq!(rs.compact_flags(), &[false]);
        assert_eq!(rs.rho(), &Weight::from_twice(&[1, -1]));

        let rs = build_root_system(2, 0).unwrap();
        assert_eq!(rs.positive_roots().len(), 1);
        assert!(rs.is_compact(0));

        let rs = build_root_system(2, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(rs.compact_flags(), &[true, false, false]);
        assert_eq!(rs.rho(), &Weight::from_ints(&[1, 0, -1]));

        assert!(build_root_system(0, 0).is_err());
    }

    #[test]
    fn rho_is_strictly_decreasing() {
        for (p, q) in [(1, 1), (2, 2), (1, 4), (3, 3)] {
            let rs = build_root_system(p, q).unwrap();
            let coords = rs.rho().coords();
            for w in coords.windows(2) {
                assert!(w[0] > w[1]);
            }
        }
    }

    #[test]
    fn delta_psi_examples() {
        let rs = build_root_system(1, 1).unwrap();
        let t = TorusPoint::new(vec![PI, 0.0]);
        let d = rs.delta_psi(&t);
        assert!((d - Complex64::new(0.0, 2.0)).norm() < 1e-14);

        // Singular point: all angles equal.
        let sing = TorusPoint::new(vec![0.7, 0.7]);
        assert!(rs.delta_psi(&sing).norm() < 1e-15);
        assert!(!rs.is_regular(&sing));

        let t2 = TorusPoint::new(vec![PI / 2.0, -PI / 2.0]);
        let prod = rs.delta_psi(&t2) * rs.delta_phi(&t2);
        assert!((prod - Complex64::new(4.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn denominator_identities_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for (p, q) in [(0, 2), (1, 1), (1, 2), (2, 2), (0, 4), (3, 3)] {
            let rs = build_root_system(p, q).unwrap();
            for _ in 0..100 {
                let theta = sample_regular_point(&rs, &mut rng);
                let lhs = rs.delta_psi(&theta) * rs.delta_phi(&theta);
                let rhs = rs.abs_delta_squared(&theta);
                assert!((lhs - Complex64::new(rhs, 0.0)).norm() <= 1e-12 * rhs.abs().max(1e-300));
                let d = rs.weyl_d_sqrt(&theta);
                assert!((d - rhs.sqrt()).abs() <= 1e-12 * d.max(1e-300));
                assert!((d - rs.delta_psi(&theta).norm()).abs() <= 1e-12 * d);
            }
        }
    }

    #[test]
    fn delta_psi_alternates_under_compact_weyl_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (p, q) in [(2, 1), (2, 2), (1, 3)] {
            let rs = build_root_system(p, q).unwrap();
            for w in crate::perm::block_permutations(p, q) {
                for _ in 0..10 {
                    let theta = sample_regular_point(&rs, &mut rng);
                    let lhs = rs.delta_psi(&w.act_angles(&theta));
                    let rhs = rs.delta_psi(&theta) * w.sign() as f64;
                    assert!((lhs - rhs).norm() < 1e-10 * lhs.norm().max(1.0));
                }
            }
        }
    }

    #[test]
    fn strongly_orthogonal_set_examples() {
        let sets = strongly_orthogonal_sets(1, 1);
        assert_eq!(sets.len(), 2);
        assert!(sets[0].pairs.is_empty());
        assert_eq!(sets[1].pairs, vec![(0, 1)]);

        assert_eq!(strongly_orthogonal_sets(0, 3).len(), 1);

        let sets = strongly_orthogonal_sets(2, 2);
        assert_eq!(sets.len(), 3);
        assert_eq!(sets[2].pairs, vec![(0, 2), (1, 3)]);
        // Nested with disjoint index support.
        for s in &sets {
            let mut support: Vec<usize> = Vec::new();
            for &(a, b) in &s.pairs {
                assert!(!support.contains(&a) && !support.contains(&b));
                support.push(a);
                support.push(b);
            }
        }
    }

    #[test]
    fn cartan_shape_examples() {
        let sets = strongly_orthogonal_sets(2, 2);
        assert_eq!(
            cartan_shape(&sets[0], 4),
            CartanShape { compact_circles: 4, hyperbolic_pairs: 0 }
        );
        assert_eq!(
            cartan_shape(&sets[1], 4),
            CartanShape { compact_circles: 2, hyperbolic_pairs: 1 }
        );
        assert_eq!(
            cartan_shape(&sets[2], 4),
            CartanShape { compact_circles: 0, hyperbolic_pairs: 2 }
        );
    }

    #[test]
    fn eta_positivity_examples() {
        // k=1 on U(1,2): one |1 - z|^2 pair.
        let v = eta_positivity(1, 1, 2, &[0.8], &[0.4], &[1.3]).unwrap();
        let z = Complex64::new(1.0, 0.0)
            - Complex64::from_polar((0.4f64).exp(), -0.8) * Complex64::from_polar(1.0, 1.3);
        assert!((v - z.norm_sqr()).abs() < 1e-12 * v.max(1.0));

        // X = 0 is rejected at the Deformation level, but the product itself
        // reduces to compact-torus |1 - e^{iφ}|² factors and stays positive.
        let v = eta_positivity(1, 2, 2, &[0.5], &[0.0], &[2.0, -1.0]).unwrap();
        assert!(v > 0.0);

        // Degenerate circle angle equal to a pair angle at X=0 is singular.
        assert_eq!(
            eta_positivity(1, 1, 2, &[0.5], &[0.0], &[0.5]),
            Err(Error::SingularPoint)
        );

        assert!(matches!(
            eta_positivity(2, 1, 2, &[0.1, 0.2], &[0.3, 0.4], &[]),
            Err(Error::SetTooLarge { .. })
        ));
    }

    #[test]
    fn eta_positivity_random_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let n = rng.gen_range(2..=5usize);
            let k_max = (n / 2).min(2);
            let k = rng.gen_range(1..=k_max);
            let r = k;
            let s = n - k;
            let theta: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
            let x: Vec<f64> = (0..k).map(|_| rng.gen_range(0.05..1.0)).collect();
            let circles: Vec<f64> =
                (0..n - 2 * k).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
            let v = eta_positivity(k, r, s, &theta, &x, &circles).unwrap();
            assert!(v > 0.0);
        }
    }
}
