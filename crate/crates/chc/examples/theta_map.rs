//! The correspondence on Harish-Chandra parameters for every parameter of
//! `U(p,q)` with `p+q <= 3` and small entries: target signature, transferred
//! parameter and the interchange permutation.
//!
//! ```bash
//! cargo run --example theta_map
//! ```

use chc::half::HalfInt;
use chc::sweep::{enumerate_parameters, signature_splits};
use chc::theta::{weyl_orbit_equal, WeylOrbit};

fn main() {
    println!("{:<28} {:>5} {:>5}  {:<28} {:<12} orbit", "lambda", "(r,s)", "(a,b)", "lambda'", "tau");
    for (p, q) in signature_splits(3) {
        for lambda in enumerate_parameters(p, q, HalfInt::from_twice(3)) {
            let target = lambda.theta_signature();
            let tau = lambda.tau_permutation(target).unwrap();
            let lifted = lambda.theta_lift();
            let ok = weyl_orbit_equal(
                &tau.act_weight(lambda.entries()),
                lifted.entries(),
                WeylOrbit::Block(target.r),
            );
            println!(
                "{:<28} ({},{}) ({},{})  {:<28} {:<12} {}",
                lambda.to_string(),
                target.r,
                target.s,
                lambda.a(),
                lambda.b(),
                lifted.to_string(),
                format!("{:?}", tau.one_line()),
                if ok { "ok" } else { "MISMATCH" }
            );
        }
    }
}
