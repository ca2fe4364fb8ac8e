//! The single-upper-facet bound n(1 + ‖s‖/⟨u₀,s⟩) in its direct and
//! Gram-matrix forms, and the direction that attains it.
//!
//! Run with: cargo run --example upper_facet_bound

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplex_hull::{
    is_admissible, reflection_hull_ratio, regular_simplex, sampling, single_upper_facet_bound,
};

fn main() {
    for n in 2..=6 {
        let s = regular_simplex(n).unwrap();
        let b = single_upper_facet_bound(&s).unwrap();
        println!(
            "regular simplex n = {n}: bound {:.12}, gram form {:.12} (2n = {})",
            b.bound,
            b.gram_form,
            2 * n
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    println!("random simplices satisfying the single-upper-facet hypothesis:");
    for n in 2..=4 {
        let s = sampling::single_upper_facet_simplex(n, &mut rng);
        let b = single_upper_facet_bound(&s).unwrap();
        print!(
            "  n = {n}: bound {:.9}, gram form {:.9}, |diff| {:.2e}",
            b.bound,
            b.gram_form,
            (b.bound - b.gram_form).abs()
        );
        if is_admissible(&s, &b.optimal_u) {
            let ratio = reflection_hull_ratio(&s, &b.optimal_u).unwrap();
            if ratio.upper_side.facet_indices == [0] {
                print!(", ratio at optimal u {:.9}", ratio.ratio);
            }
        }
        println!();
    }
}
