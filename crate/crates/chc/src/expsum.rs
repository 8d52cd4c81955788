//! Formal finite sums `Σ c_w e^{i w·θ}` with exact coefficients.
//!
//! This is the carrier for character numerators and transfer results. Raw
//! sums are built with integer coefficients; normalization divides through by
//! the coefficient of the lexicographically greatest weight, producing exact
//! rational coefficients so that "equal up to a nonzero constant" is a
//! bit-exact comparison.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::Error;
use crate::perm::Permutation;
use crate::torus::TorusPoint;
use crate::weight::Weight;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SignedExpSum {
    terms: BTreeMap<Weight, Rational64>,
}

impl SignedExpSum {
    pub fn new() -> Self {
        SignedExpSum { terms: BTreeMap::new() }
    }

    pub fn from_integer_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, i64)>,
    {
        let mut sum = SignedExpSum::new();
        for (w, c) in terms {
            sum.add_integer_term(w, c);
        }
        sum
    }

    /// Adds `c · e^{i w·θ}`, combining like weights and dropping zeros.
    pub fn add_term(&mut self, w: Weight, c: Rational64) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let next = *o.get() + c;
                if next.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = next;
                }
            }
        }
    }

    pub fn add_integer_term(&mut self, w: Weight, c: i64) {
        self.add_term(w, Rational64::from_integer(c));
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending lexicographic) weight order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Rational64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Weight) -> Option<Rational64> {
        self.terms.get(w).copied()
    }

    pub fn max_weight(&self) -> Option<&Weight> {
        self.terms.keys().next_back()
    }

    /// Evaluation at a torus point: `Σ c_w exp(i w·θ)`.
    pub fn eval(&self, theta: &TorusPoint) -> Complex64 {
        self.terms
            .iter()
            .map(|(w, c)| ratio_to_f64(*c) * theta.char_value(w))
            .sum()
    }

    /// Divides by the coefficient of the greatest weight, making it `1`.
    pub fn normalize(&self) -> Result<SignedExpSum, Error> {
        let pivot = *self.terms.values().next_back().ok_or(Error::EmptySum)?;
        Ok(self.scaled(pivot.recip()))
    }

    pub fn scaled(&self, c: Rational64) -> SignedExpSum {
        let mut out = SignedExpSum::new();
        for (w, coeff) in &self.terms {
            out.add_term(w.clone(), *coeff * c);
        }
        out
    }

    /// True iff the two sums agree after normalization (or are both empty).
    pub fn equal_up_to_constant(&self, other: &SignedExpSum) -> bool {
        match (self.is_empty(), other.is_empty()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            (false, false) => {
                self.normalize().expect("nonempty") == other.normalize().expect("nonempty")
            }
        }
    }

    /// Applies a permutation to every weight.
    pub fn permuted(&self, p: &Permutation) -> SignedExpSum {
        let mut out = SignedExpSum::new();
        for (w, c) in &self.terms {
            out.add_term(p.act_weight(w), *c);
        }
        out
    }

    /// `Σ |c_w|`, the triangle-inequality bound for `|eval|`.
    pub fn coefficient_abs_sum(&self) -> f64 {
        self.terms.values().map(|c| ratio_to_f64(c.abs())).sum()
    }

    /// JSON form: an array of `{"weight": [...], "coeff": "..."}` objects in
    /// canonical weight order, coordinates and coefficients as exact strings.
    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                json!({
                    "weight": w.coord_strings(),
                    "coeff": ratio_string(*c),
                })
            })
            .collect();
        Value::Array(items)
    }
}

fn ratio_to_f64(c: Rational64) -> f64 {
    *c.numer() as f64 / *c.denom() as f64
}

fn ratio_string(c: Rational64) -> String {
    if *c.denom() == 1 {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Debug for SignedExpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·e^{}", ratio_string(*c), w)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample_sum(rng: &mut ChaCha8Rng, n: usize) -> SignedExpSum {
        let mut s = SignedExpSum::new();
        for _ in 0..rng.gen_range(1..=5) {
            let coords: Vec<i64> = (0..n).map(|_| rng.gen_range(-7..=7)).collect();
            s.add_integer_term(Weight::from_twice(&coords), rng.gen_range(-4..=4));
        }
        s
    }

    #[test]
    fn normalization_examples() {
        let w1 = Weight::from_twice(&[3, 1]);
        let w2 = Weight::from_twice(&[1, 3]);
        let s = SignedExpSum::from_integer_terms([(w1.clone(), 3), (w2.clone(), -3)]);
        let n = s.normalize().unwrap();
        assert_eq!(n.coefficient(&w1), Some(Rational64::from_integer(1)));
        assert_eq!(n.coefficient(&w2), Some(Rational64::from_integer(-1)));

        let single = SignedExpSum::from_integer_terms([(w2.clone(), -2)]);
        let n = single.normalize().unwrap();
        assert_eq!(n.coefficient(&w2), Some(Rational64::from_integer(1)));

        assert_eq!(SignedExpSum::new().normalize(), Err(Error::EmptySum));
    }

    #[test]
    fn normalize_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let s = sample_sum(&mut rng, 3);
            if s.is_empty() {
                continue;
            }
            let n1 = s.normalize().unwrap();
            let n2 = n1.normalize().unwrap();
            assert_eq!(n1, n2);
        }
    }

    #[test]
    fn equal_up_to_constant_is_an_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = sample_sum(&mut rng, 2);
        let scaled = s.scaled(Rational64::new(5, 1));
        assert!(s.equal_up_to_constant(&scaled));
        assert!(scaled.equal_up_to_constant(&s));
        assert!(s.equal_up_to_constant(&s));

        // Shifting one weight breaks equality.
        if let Some((w, c)) = s.terms().next().map(|(w, c)| (w.clone(), *c)) {
            let mut shifted = s.clone();
            shifted.add_term(w.clone(), -c);
            let mut wp = w.coords().to_vec();
            wp[0] += crate::half::HalfInt::from_int(1);
            shifted.add_term(Weight::new(wp), c);
            assert!(!s.equal_up_to_constant(&shifted));
        }

        // Transitivity on a chain of scalings.
        let t = s.scaled(Rational64::new(-7, 3));
        assert!(scaled.equal_up_to_constant(&t));
        assert!(s.equal_up_to_constant(&t));
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let w = Weight::from_twice(&[1]);
        let mut s = SignedExpSum::new();
        s.add_integer_term(w.clone(), 2);
        s.add_integer_term(w.clone(), -2);
        assert!(s.is_empty());
        s.add_integer_term(w, 0);
        assert!(s.is_empty());
    }

    #[test]
    fn eval_commutes_with_permutation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let s = sample_sum(&mut rng, n);
            let mut imgs: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(&mut imgs[..], &mut rng);
            let p = Permutation::from_images(imgs).unwrap();
            let theta = TorusPoint::new((0..n).map(|_| rng.gen_range(-3.0..3.0)).collect());
            let lhs = s.permuted(&p).eval(&theta);
            let rhs = s.eval(&p.inverse().act_angles(&theta));
            assert!((lhs - rhs).norm() < 1e-12, "lhs={lhs} rhs={rhs}");
        }
    }

    #[test]
    fn json_shape_is_sorted_and_exact() {
        let s = SignedExpSum::from_integer_terms([
            (Weight::from_twice(&[1, -3]), 2),
            (Weight::from_twice(&[-1, 3]), -1),
        ]);
        let v = s.to_json();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["weight"], json!(["-1/2", "3/2"]));
        assert_eq!(arr[0]["coeff"], json!("-1"));
        assert_eq!(arr[1]["weight"], json!(["1/2", "-3/2"]));
        assert_eq!(arr[1]["coeff"], json!("2"));

        let n = s.normalize().unwrap();
        assert_eq!(n.to_json()[0]["coeff"], json!("-1/2"));
    }
}
