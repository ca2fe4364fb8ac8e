//! Hull volume of a simplex joined with an intersecting translate: the
//! maximum is (n+1)·Vol(S), reached at vertex-to-vertex contact — and, as
//! the sweep shows, at every other boundary contact as well.
//!
//! Run with: cargo run --example translation_max

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplex_hull::{hull_volume, maximize_translation, sampling, SearchConfig, Vector};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=4 {
        let s = sampling::simplex(n, &mut rng);
        let result = maximize_translation(&s, &SearchConfig::default()).unwrap();
        println!(
            "n = {n}: max ratio {:.10} (n+1 = {}), contact: {}",
            result.max_ratio,
            n + 1,
            result.contact_certificate
        );
    }

    // the volume along one translation ray is linear until separation, so
    // the boundary value matches n+1 in every direction
    let s = sampling::simplex(3, &mut rng);
    let d = sampling::unit_vector(3, &mut rng);
    println!("sweep along one ray (n=3):");
    for step in [0.25, 0.5, 0.75, 1.0] {
        let t = d.scale(step * 1.2);
        let mut pts: Vec<Vector> = s.vertices().to_vec();
        pts.extend(s.vertices().iter().map(|v| v.add(&t)));
        let ratio = hull_volume(&pts, 3).unwrap().volume / s.volume();
        println!("  |t| = {:.2}: ratio {ratio:.6}", step * 1.2);
    }
}
