//! Weights: integral and half-integral linear forms on the Cartan subalgebra.

use std::fmt;

use crate::error::Error;
use crate::half::HalfInt;

/// A linear form `sum_i c_i e_i` with exact half-integer coordinates.
///
/// The derived ordering is lexicographic on the doubled coordinates; it is the
/// canonical order used for serialization and for the normalization pivot of
/// exponential sums.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<HalfInt>,
}

impl Weight {
    pub fn new(coords: Vec<HalfInt>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![HalfInt::ZERO; n] }
    }

    /// Builds a weight from doubled coordinates.
    pub fn from_twice(twice: &[i64]) -> Self {
        Weight { coords: twice.iter().map(|&t| HalfInt::from_twice(t)).collect() }
    }

    pub fn from_ints(ints: &[i64]) -> Self {
        Weight { coords: ints.iter().map(|&v| HalfInt::from_int(v)).collect() }
    }

    /// Parses a comma-separated list such as `"1/2,-3/2"`.
    pub fn parse_list(s: &str) -> Result<Self, Error> {
        let coords = s
            .split(',')
            .map(|part| part.parse::<HalfInt>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Weight { coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[HalfInt] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> HalfInt {
        self.coords[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.coords.iter().copied()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len(), "weight length mismatch");
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight { coords: self.coords.iter().map(|&c| -c).collect() }
    }

    /// Pairing with a vector of angles: `sum_i c_i theta_i`.
    pub fn dot_angles(&self, theta: &[f64]) -> f64 {
        assert_eq!(self.len(), theta.len(), "weight/angle length mismatch");
        self.coords
            .iter()
            .zip(theta)
            .map(|(c, &t)| c.to_f64() * t)
            .sum()
    }

    /// Coordinate strings, for report serialization.
    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order_on_doubled_coords() {
        let a = Weight::from_twice(&[1, -3]);
        let b = Weight::from_twice(&[1, -1]);
        let c = Weight::from_twice(&[3, -5]);
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn parse_list_round_trip() {
        let w = Weight::parse_list("1/2,-3/2,2").unwrap();
        assert_eq!(w.coords(), &[
            HalfInt::from_twice(1),
            HalfInt::from_twice(-3),
            HalfInt::from_int(2)
        ]);
    }

    #[test]
    fn dot_angles_is_linear() {
        let w = Weight::from_twice(&[1, 7]);
        let theta = [std::f64::consts::PI, 0.0];
        assert!((w.dot_angles(&theta) - std::f64::consts::PI / 2.0).abs() < 1e-15);
    }
}
