//! Permutations of `{1, ..., n}` in one-line notation, with sign.

use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::torus::TorusPoint;
use crate::weight::Weight;

/// A bijection of `{0, ..., n-1}`; `images[i]` is the image of `i`.
///
/// Constructors taking one-line notation are 1-based, matching the usual
/// written form; everything internal is 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || seen[j] {
                return Err(Error::Invalid(format!("{images:?} is not a bijection")));
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_line(line: &[usize]) -> Result<Self, Error> {
        if line.contains(&0) {
            return Err(Error::Invalid("one-line notation is 1-based".into()));
        }
        Self::from_images(line.iter().map(|&v| v - 1).collect())
    }

    /// The transposition `(i j)` (0-based) inside the identity on `n` points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&j| j + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(-1)^{inversion count}`.
    pub fn sign(&self) -> i64 {
        let mut inversions = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation size mismatch");
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    /// The action on weights: `(p·w)[p(i)] = w[i]`, so `(p·w)(θ) = w(p⁻¹·θ)`.
    pub fn act_weight(&self, w: &Weight) -> Weight {
        assert_eq!(self.len(), w.len(), "permutation/weight length mismatch");
        let mut coords = vec![crate::half::HalfInt::ZERO; w.len()];
        for (i, &j) in self.images.iter().enumerate() {
            coords[j] = w.get(i);
        }
        Weight::new(coords)
    }

    /// The same action on angle vectors.
    pub fn act_angles(&self, t: &TorusPoint) -> TorusPoint {
        assert_eq!(self.len(), t.len(), "permutation/angle length mismatch");
        let mut out = vec![0.0; t.len()];
        for (i, &j) in self.images.iter().enumerate() {
            out[j] = t.get(i);
        }
        TorusPoint::new(out)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// All of `S_n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (0..n)
        .permutations(n)
        .map(|images| Permutation { images })
        .collect()
}

/// The block subgroup `S_p × S_q` inside `S_{p+q}`, lexicographically ordered.
pub fn block_permutations(p: usize, q: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(factorial(p) * factorial(q));
    for first in (0..p).permutations(p) {
        for second in (p..p + q).permutations(q) {
            let mut images = Vec::with_capacity(p + q);
            images.extend_from_slice(&first);
            images.extend_from_slice(&second);
            out.push(Permutation { images });
        }
    }
    out
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
