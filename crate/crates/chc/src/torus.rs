//! Points of the compact Cartan torus and radial deformations off it.

use num_complex::Complex64;

use crate::error::Error;
use crate::weight::Weight;

/// A point of the double cover of the compact torus, as an angle vector.
///
/// Storing angles rather than complex coordinates makes `h^λ = exp(i λ·θ)`
/// single-valued for every half-integer weight `λ`; the covering maps are
/// absorbed into this convention.
#[derive(Clone, PartialEq, Debug)]
pub struct TorusPoint {
    theta: Vec<f64>,
}

impl TorusPoint {
    pub fn new(theta: Vec<f64>) -> Self {
        TorusPoint { theta }
    }

    pub fn zero(n: usize) -> Self {
        TorusPoint { theta: vec![0.0; n] }
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.theta[i]
    }

    pub fn angles(&self) -> &[f64] {
        &self.theta
    }

    /// The character value `h^w = exp(i w·θ)`; always of modulus one.
    pub fn char_value(&self, w: &Weight) -> Complex64 {
        Complex64::from_polar(1.0, w.dot_angles(&self.theta))
    }
}

/// Radii `r_j = e^{-X_j}` strictly off the unit torus, stored as the `X_j`.
#[derive(Clone, PartialEq, Debug)]
pub struct Deformation {
    log_radii: Vec<f64>,
}

impl Deformation {
    /// Every `X_j` must be nonzero.
    pub fn new(log_radii: Vec<f64>) -> Result<Self, Error> {
        if log_radii.iter().any(|&x| x == 0.0 || !x.is_finite()) {
            return Err(Error::UnitTorusDeformation);
        }
        Ok(Deformation { log_radii })
    }

    /// Deformation with `X_j = signs[j] * magnitude`.
    pub fn from_signs(signs: &[i8], magnitude: f64) -> Result<Self, Error> {
        Self::new(signs.iter().map(|&s| f64::from(s) * magnitude).collect())
    }

    pub fn len(&self) -> usize {
        self.log_radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log_radii.is_empty()
    }

    pub fn log_radius(&self, j: usize) -> f64 {
        self.log_radii[j]
    }

    pub fn log_radii(&self) -> &[f64] {
        &self.log_radii
    }

    pub fn radius(&self, j: usize) -> f64 {
        (-self.log_radii[j]).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn char_value_examples() {
        let w = Weight::from_twice(&[1, 7]); // (1/2, 7/2)
        let origin = TorusPoint::zero(2);
        assert!((origin.char_value(&w) - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        // theta = (pi, 0): exp(i pi / 2) = i
        let t = TorusPoint::new(vec![PI, 0.0]);
        assert!((t.char_value(&w) - Complex64::new(0.0, 1.0)).norm() < 1e-15);

        // Double-cover sign: theta = (2pi, 0) with w = (1/2, 0) gives -1.
        let t2 = TorusPoint::new(vec![2.0 * PI, 0.0]);
        let w2 = Weight::from_twice(&[1, 0]);
        assert!((t2.char_value(&w2) - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn char_value_is_multiplicative_in_the_weight() {
        let t = TorusPoint::new(vec![0.3, -1.2, 2.5]);
        let w1 = Weight::from_twice(&[1, -3, 5]);
        let w2 = Weight::from_twice(&[-7, 1, 2]);
        let lhs = t.char_value(&w1.add(&w2));
        let rhs = t.char_value(&w1) * t.char_value(&w2);
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn deformation_rejects_unit_torus() {
        assert!(Deformation::new(vec![0.5, 0.0]).is_err());
        let d = Deformation::from_signs(&[1, -1], 0.25).unwrap();
        assert!((d.radius(0) - (-0.25f64).exp()).abs() < 1e-15);
        assert!((d.radius(1) - (0.25f64).exp()).abs() < 1e-15);
    }
}
