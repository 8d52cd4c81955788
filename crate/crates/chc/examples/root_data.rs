//! Root data for `u(p,q)`: positive roots with their compact flags, the
//! half-sums, strongly orthogonal root sets with their Cartan shapes, and a
//! spot check of the denominator identities.
//!
//! ```bash
//! cargo run --example root_data
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chc::roots::{
    build_root_system, cartan_shape, eta_positivity, sample_regular_point,
    strongly_orthogonal_sets,
};

fn main() {
    let (p, q) = (2, 3);
    let rs = build_root_system(p, q).unwrap();
    println!("u({p},{q}): {} positive roots", rs.positive_roots().len());
    for (&(i, j), &compact) in rs.positive_roots().iter().zip(rs.compact_flags()) {
        println!(
            "  e{} - e{}  {}",
            i + 1,
            j + 1,
            if compact { "compact" } else { "noncompact" }
        );
    }
    println!("rho    = {}", rs.rho());
    println!("rho(k) = {}", rs.rho_compact());

    println!("\nstrongly orthogonal sets and Cartan shapes:");
    for set in strongly_orthogonal_sets(p, q) {
        let shape = cartan_shape(&set, p + q);
        let roots: Vec<String> = set
            .pairs
            .iter()
            .map(|&(a, b)| format!("e{}-e{}", a + 1, b + 1))
            .collect();
        println!(
            "  S_{}: {{{}}} -> {} circles, {} hyperbolic pairs",
            set.index,
            roots.join(", "),
            shape.compact_circles,
            shape.hyperbolic_pairs
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(chc::report::env_seed());
    let theta = sample_regular_point(&rs, &mut rng);
    let product = rs.delta_psi(&theta) * rs.delta_phi(&theta);
    println!("\nat a random regular point:");
    println!("  Δ_Ψ·Δ_Φ          = {:.10}", product.re);
    println!("  Π|1 - h^α|²      = {:.10}", rs.abs_delta_squared(&theta));
    println!("  |D|^1/2          = {:.10}", rs.weyl_d_sqrt(&theta));
    println!("  |Δ_Ψ|            = {:.10}", rs.delta_psi(&theta).norm());

    // Positivity of the nilradical determinant on a hyperbolic Cartan.
    let value = eta_positivity(1, 2, 3, &[0.7], &[0.3], &[0.2, 1.9, 4.0]).unwrap();
    println!("\ndet(Id - Ad) on the S_1 nilradical (k=1, U(2,3)): {value:.8} > 0");
}
