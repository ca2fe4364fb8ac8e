//! Hull volume of a simplex joined with its point-reflected image: 2ⁿ·Vol(S)
//! exactly when the center is a vertex, strictly less inside.
//!
//! Run with: cargo run --example point_reflection

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplex_hull::{
    hull_volume, maximize_point_reflection, point_reflection_volume, sampling, SearchConfig, Vector,
};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 2..=5 {
        let s = sampling::simplex(n, &mut rng);
        let vol = s.volume();
        let at_vertex = point_reflection_volume(&s, s.vertex(0)).unwrap() / vol;
        let centroid = s.centroid();
        let at_centroid = point_reflection_volume(&s, &centroid).unwrap() / vol;

        // oracle cross-check at the centroid
        let mut pts: Vec<Vector> = s.vertices().to_vec();
        pts.extend(s.vertices().iter().map(|p| centroid.scale(2.0).sub(p)));
        let oracle = hull_volume(&pts, n).unwrap().volume / vol;

        println!(
            "n = {n}: vertex ratio {at_vertex:.12} (2^n = {}), centroid ratio {at_centroid:.12} (oracle {oracle:.12})",
            1 << n
        );
    }

    let s = sampling::simplex(3, &mut rng);
    let result = maximize_point_reflection(&s, &SearchConfig::default()).unwrap();
    println!(
        "search over centers (n=3): max ratio {:.12}, contact: {}",
        result.max_ratio, result.contact_certificate
    );
}
