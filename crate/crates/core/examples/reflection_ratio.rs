//! The per-facet closed form for Vol(conv(S, Sᴴ))/Vol(S) against the
//! brute-force hull oracle, on random admissible configurations.
//!
//! Run with: cargo run --example reflection_ratio

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplex_hull::{hull_volume, reflected_configuration, reflection_hull_ratio, sampling};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 2..=5 {
        let mut worst: f64 = 0.0;
        for _ in 0..40 {
            let s = sampling::simplex(n, &mut rng);
            let u = sampling::admissible_direction(&s, &mut rng);
            let breakdown = reflection_hull_ratio(&s, &u).unwrap();
            let pts = reflected_configuration(&s, &u).unwrap();
            let oracle = hull_volume(&pts, n).unwrap().volume / s.volume();
            worst = worst.max((breakdown.ratio - oracle).abs() / oracle);
        }
        println!("n = {n}: worst |formula - oracle| / oracle over 40 random pairs = {worst:.2e}");
    }

    // one breakdown in detail
    let s = sampling::simplex(3, &mut rng);
    let u = sampling::admissible_direction(&s, &mut rng);
    let b = reflection_hull_ratio(&s, &u).unwrap();
    println!(
        "example breakdown (n=3): k = {}, per-facet terms {:?}, ratio {:.12}",
        b.upper_side.k(),
        b.per_facet_terms,
        b.ratio
    );
}
