//! Maximize the hull ratio over reflection hyperplanes through a vertex.
//! For regular simplices of dimension up to 4 the maximum is 2n at the
//! vertex-sum direction; from dimension 5 on the search finds two-upper-facet
//! directions that beat it (exactly (15 + √231)/3 ≈ 10.0662 at n = 5).
//!
//! Run with: cargo run --example hyperplane_search

use simplex_hull::{maximize_hyperplane_reflection, regular_simplex, SearchConfig};

fn main() {
    let cfg = SearchConfig::default();
    for n in 2..=5 {
        let s = regular_simplex(n).unwrap();
        let result = maximize_hyperplane_reflection(&s, &cfg).unwrap();
        let u_opt = s.vertex_sum().normalized().unwrap();
        println!("regular simplex, n = {n}:");
        println!(
            "  max ratio {:.12} (2n = {}), oracle {:.12}",
            result.max_ratio,
            2 * n,
            result.oracle_ratio.unwrap()
        );
        println!(
            "  angle(argmax, s/|s|) = {:.3e} rad, contact: {}",
            result.argmax_parameter.angle_to(&u_opt),
            result.contact_certificate
        );
    }
    println!();
    println!(
        "n = 5 exact two-upper-facet maximum: (15 + sqrt(231))/3 = {:.12}",
        (15.0 + 231f64.sqrt()) / 3.0
    );
}
