//! Exact character calculus for discrete series of metaplectic covers of
//! `U(p, q)`, built around the transfer of characters to `U(r, s)` with
//! `p + q = r + s`.
//!
//! The transfer of a discrete series character to the compact Cartan of the
//! receiving group is computed by two independent routes and compared
//! exactly, up to one global constant:
//!
//! * brute force: expand the transfer integral into a double sum over
//!   `S_{r+s} × (S_p × S_q)`, resolve every factor through the residue
//!   branch rules of the circle integral with the radial sides dictated by
//!   the deformation region, and collect the surviving exponentials with
//!   exact integer coefficients ([`transfer::transfer_bruteforce`]);
//! * closed form: a single alternating sum over `S_r × S_s` of the
//!   interchanged parameter ([`transfer::transfer_closed_form`]).
//!
//! Both must reproduce the discrete series numerator attached to the
//! transferred Harish-Chandra parameter ([`theta::HCParameter::theta_lift`]),
//! and must vanish at every other signature of the same size. Floating-point
//! quadrature oracles ([`oracle`]) validate the residue calculus and the
//! torus integrand independently of the symbolic path.
//!
//! Start with the `examples/` directory: each example is a runnable tour of
//! one capability. The `chc` binary wraps the same library calls behind
//! `transfer`, `verify`, `eval` and `oracle` subcommands.

pub mod characters;
pub mod error;
pub mod expsum;
pub mod half;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod roots;
pub mod sweep;
pub mod theta;
pub mod torus;
pub mod transfer;
pub mod weight;

pub use characters::{boundedness_scan, ds_numerator, DSCharacter};
pub use error::{Error, ParamError, Result};
pub use expsum::SignedExpSum;
pub use half::HalfInt;
pub use perm::Permutation;
pub use roots::{build_root_system, cartan_shape, strongly_orthogonal_sets, RootSystem};
pub use theta::{weyl_orbit_equal, HCParameter, SignaturePair, WeylOrbit};
pub use torus::{Deformation, TorusPoint};
pub use transfer::{
    cauchy_circle_integral, transfer_bruteforce, transfer_closed_form,
    transfer_matches_theta_lift,
};
pub use weight::Weight;
