//! The circle integral `(1/2πi) ∮ z^k/(z-a) dz` two ways: closed-form
//! residue branches against trapezoid quadrature on the contour.
//!
//! ```bash
//! cargo run --example residue_calculus
//! ```

use num_complex::Complex64;

use chc::oracle::circle_quadrature;
use chc::transfer::cauchy_circle_integral;

fn main() {
    println!("   k      a            closed form              quadrature        |error|");
    for &(k, a) in &[
        (0i64, Complex64::new(0.5, 0.0)),
        (-1, Complex64::new(2.0, 0.0)),
        (3, Complex64::new(2.0, 0.0)),
        (2, Complex64::new(0.3, -0.4)),
        (-4, Complex64::new(-1.2, 0.9)),
        (5, Complex64::from_polar(0.9, 1.0)),
    ] {
        let exact = cauchy_circle_integral(k, a).unwrap();
        let quad = circle_quadrature(k, a, 2048).unwrap();
        println!(
            "{k:>4}  {a:>11.4}  {:>23}  {:>23}  {:.3e}",
            format!("{:.6}", exact),
            format!("{:.6}", quad),
            (quad - exact).norm()
        );
    }

    // Geometric convergence in the node count.
    println!("\nconvergence at k = 2, a = 0.9:");
    let a = Complex64::new(0.9, 0.0);
    let exact = cauchy_circle_integral(2, a).unwrap();
    for n in [64usize, 128, 256, 512] {
        let err = (circle_quadrature(2, a, n).unwrap() - exact).norm();
        println!("  N = {n:>4}: error {err:.3e}");
    }
}
