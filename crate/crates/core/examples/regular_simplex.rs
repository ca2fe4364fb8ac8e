//! Regular simplices in the normalization the closed forms use: unit edge
//! vectors with pairwise inner product 1/2, and the identities their facet
//! data satisfies.
//!
//! Run with: cargo run --example regular_simplex

use simplex_hull::regular_simplex;

fn main() {
    for n in 2..=6 {
        let s = regular_simplex(n).unwrap();
        let vsum = s.vertex_sum();
        let f0 = &s.facet_data()[0];
        println!("n = {n}");
        println!("  volume          = {:.12}", s.volume());
        println!(
            "  |s|^2           = {:.12} (expect n(n+1)/2 = {})",
            vsum.dot(&vsum),
            n * (n + 1) / 2
        );
        println!(
            "  facet-0 normal vs s/|s| angle = {:.2e} rad",
            f0.unit_outward_normal.angle_to(&vsum)
        );
        println!(
            "  height m_0      = {:.12} (expect sqrt((n+1)/2n) = {:.12})",
            f0.height,
            ((n as f64 + 1.0) / (2.0 * n as f64)).sqrt()
        );
        println!("  max |s_i|/m_j   = {:.12}", s.min_height_ratio());
    }
}
