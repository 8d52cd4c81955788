//! The transfer integrand on the torus: product trapezoid quadrature at a
//! schedule of radial deformations, extrapolated back to the unit torus and
//! compared with the symbolic sigma-slice.
//!
//! ```bash
//! cargo run --example torus_quadrature
//! ```

use chc::oracle::run_schedule;
use chc::perm::all_permutations;
use chc::theta::HCParameter;
use chc::torus::TorusPoint;
use chc::weight::Weight;

fn main() {
    let lambda = HCParameter::new(Weight::parse_list("1/2,-1/2").unwrap(), 1, 1).unwrap();
    let target = lambda.theta_signature();
    let theta_prime = TorusPoint::new(vec![1.1, 0.4]);
    println!("parameter {lambda}, target U({},{}), θ' = {:?}", target.r, target.s,
        theta_prime.angles());

    for sigma in all_permutations(lambda.n()) {
        println!("\nsigma = {:?}", sigma.one_line());
        let run = run_schedule(&lambda, target, &sigma, &theta_prime, &[0.5, 0.25, 0.125], 256)
            .unwrap();
        println!("     X        quadrature                symbolic at X           |diff|");
        for &(x, quad, symbolic) in &run.samples {
            println!(
                "  {x:>5.3}  {:>24}  {:>24}  {:.2e}",
                format!("{:.8}", quad),
                format!("{:.8}", symbolic),
                (quad - symbolic).norm()
            );
        }
        println!("  extrapolated to the unit torus: {:.8}", run.extrapolated);
        println!("  symbolic limit:                 {:.8}", run.limit);
        println!(
            "  extrapolation error: {:.3e}",
            (run.extrapolated - run.limit).norm()
        );
    }
}
