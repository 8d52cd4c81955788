//! End-to-end transfer for one parameter: validate, locate the target
//! signature, run both transfer routes and compare them against the lifted
//! discrete series numerator.
//!
//! ```bash
//! cargo run --example transfer_pipeline
//! ```

use chc::characters::ds_numerator;
use chc::theta::HCParameter;
use chc::transfer::{transfer_bruteforce, transfer_closed_form};
use chc::weight::Weight;

fn main() {
    let raw = Weight::parse_list("3/2,-1/2,5/2,-5/2").unwrap();
    let lambda = HCParameter::new(raw, 2, 2).unwrap();
    println!("parameter        {lambda}");
    println!("block signs      a = {}, b = {}", lambda.a(), lambda.b());

    let target = lambda.theta_signature();
    println!("target signature U({},{})", target.r, target.s);
    println!("lifted parameter {}", lambda.theta_lift());

    let tau = lambda.tau_permutation(target).unwrap();
    println!("tau (one-line)   {:?}, sign {}", tau.one_line(), tau.sign());

    let brute = transfer_bruteforce(&lambda, target).unwrap();
    let closed = transfer_closed_form(&lambda, target);
    let lifted = ds_numerator(&lambda.theta_lift());
    println!("\nbrute force      {} terms: {:?}", brute.len(), brute.normalize().unwrap());
    println!("closed form      {} terms: {:?}", closed.len(), closed.normalize().unwrap());
    println!(
        "lifted numerator {} terms: {:?}",
        lifted.numerator().len(),
        lifted.numerator().normalize().unwrap()
    );

    let ok = brute.equal_up_to_constant(&closed)
        && brute.equal_up_to_constant(lifted.numerator());
    println!("\nall three agree up to one constant: {ok}");

    // The same data as the machine-readable report the CLI emits.
    let report = chc::report::transfer_report(2, 2, lambda.entries()).unwrap();
    println!("\nJSON report:\n{}", serde_json::to_string_pretty(&report).unwrap());
}
