//! Brute-force convex hull volumes for small point sets.
//!
//! Run with: cargo run --example oracle_hull

use simplex_hull::{hull_contains, hull_volume, regular_simplex, Vector};

fn main() {
    // unit cube in 3-space
    let corners: Vec<Vector> = (0..8u32)
        .map(|m| Vector::new((0..3).map(|b| f64::from(m >> b & 1)).collect()))
        .collect();
    let cube = hull_volume(&corners, 3).unwrap();
    println!(
        "unit cube: volume {:.12}, {} facets",
        cube.volume,
        cube.facets.len()
    );
    assert!(hull_contains(&cube, &Vector::new(vec![0.5, 0.5, 0.5])));
    assert!(!hull_contains(&cube, &Vector::new(vec![1.5, 0.5, 0.5])));

    // a simplex joined with a translated copy sharing one vertex
    let s = regular_simplex(3).unwrap();
    let t = s.vertex(1).sub(s.vertex(0));
    let mut pts: Vec<Vector> = s.vertices().to_vec();
    pts.extend(s.vertices().iter().map(|v| v.add(&t)));
    let pair = hull_volume(&pts, 3).unwrap();
    println!(
        "simplex + vertex-contact translate: ratio {:.12} (expect n+1 = 4)",
        pair.volume / s.volume()
    );
}
