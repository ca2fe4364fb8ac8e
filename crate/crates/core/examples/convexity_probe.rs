//! The hull volume of two bodies is convex in a translation parameter; the
//! probe samples g(x) = Vol(conv(K ∪ (K' + x·t))) and checks its central
//! second differences.
//!
//! Run with: cargo run --example convexity_probe

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplex_hull::{convexity_probe, regular_simplex, sampling};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    let s = regular_simplex(3).unwrap();
    let t = sampling::unit_vector(3, &mut rng);
    let report = convexity_probe(&s, &s, &t, 21).unwrap();
    println!("regular simplex against itself (n = 3, 21 samples):");
    println!(
        "  min second difference {:.3e}, scale {:.3}, convex: {}",
        report.min_second_difference,
        report.scale,
        report.passes()
    );
    for (x, g) in report.xs.iter().zip(&report.values).step_by(4) {
        println!("  g({x:+.3}) = {g:.6}");
    }

    let a = sampling::simplex(2, &mut rng);
    let b = sampling::simplex(2, &mut rng);
    let t = sampling::unit_vector(2, &mut rng);
    let report = convexity_probe(&a, &b, &t, 41).unwrap();
    println!(
        "two random triangles (41 samples): min second difference {:.3e}, convex: {}",
        report.min_second_difference,
        report.passes()
    );
}
