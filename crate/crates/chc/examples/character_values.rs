//! Pointwise discrete series character values on the regular compact
//! Cartan, plus a boundedness scan of `|D|^{1/2} |Θ|`.
//!
//! ```bash
//! cargo run --example character_values
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use chc::characters::{boundedness_scan, ds_numerator};
use chc::theta::HCParameter;
use chc::torus::TorusPoint;
use chc::weight::Weight;

fn main() {
    let lambda = HCParameter::new(Weight::parse_list("1/2,-1/2").unwrap(), 1, 1).unwrap();
    let character = ds_numerator(&lambda);
    println!("character of {lambda}");
    println!(
        "numerator {:?}, global sign {}",
        character.numerator(),
        character.global_sign()
    );

    println!("\n   theta1    theta2          Re          Im   |D|^1/2·|Θ|");
    for (t1, t2) in [(PI, 0.0), (PI / 2.0, -PI / 2.0), (2.3, 0.4), (0.9, 2.2)] {
        let theta = TorusPoint::new(vec![t1, t2]);
        let value = character.evaluate(&theta).unwrap();
        let weighted = character.roots().weyl_d_sqrt(&theta) * value.norm();
        println!("{t1:>9.4} {t2:>9.4} {:>11.6} {:>11.6} {weighted:>13.6}", value.re, value.im);
    }

    // The weighted modulus never exceeds the coefficient sum of the
    // numerator, here p! q! = 4 for U(2,2).
    let big = HCParameter::new(Weight::parse_list("7/2,3/2,-1/2,-5/2").unwrap(), 2, 2).unwrap();
    let ch = ds_numerator(&big);
    let mut rng = ChaCha8Rng::seed_from_u64(chc::report::env_seed());
    let sup = boundedness_scan(ch.numerator(), 20_000, &mut rng);
    println!("\nboundedness scan for {big}");
    println!(
        "max |numerator| over 20000 regular samples = {sup:.6} <= {} = Σ|coeff|",
        ch.numerator().coefficient_abs_sum()
    );
}
