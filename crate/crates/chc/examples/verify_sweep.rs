//! Exhaustive verification sweep over a small parameter box: for every
//! parameter, the brute-force transfer must agree with the closed form and
//! the lifted numerator, vanish at every other signature, and the
//! interchanged parameter must land in the right Weyl orbit.
//!
//! ```bash
//! cargo run --example verify_sweep            # p+q <= 3, |λ_i| <= 5/2
//! cargo run --example verify_sweep -- 4 9/2   # custom box
//! ```

use chc::half::HalfInt;
use chc::sweep::{run_verify, VerifyRow};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_n: usize = args.first().map_or(3, |v| v.parse().expect("max_n"));
    let max_abs: HalfInt = args.get(1).map_or(HalfInt::from_twice(5), |v| {
        v.parse().expect("half-integer bound")
    });

    let rows = run_verify(max_n, max_abs, 1);
    println!("{}", VerifyRow::csv_header());
    for row in &rows {
        println!("{}", row.to_csv_line());
    }

    let failures = rows.iter().filter(|r| !r.all_ok()).count();
    eprintln!(
        "\nswept {} parameters with p+q <= {max_n}, |λ_i| <= {max_abs}: {}",
        rows.len(),
        if failures == 0 { "all pass".to_string() } else { format!("{failures} FAILURES") }
    );
}
