//! Volumes of convex hulls of two congruent intersecting simplices.
//!
//! The library pairs closed-form volume expressions for a simplex joined with
//! an isometric copy of itself (translate, point reflection, hyperplane
//! reflection) against an independent brute-force convex-hull oracle, and runs
//! constrained maximizations over each isometry family. Extremal values such
//! as n+1 (translates), 2ⁿ (point reflections) and 2n (hyperplane reflections
//! of the regular simplex) are reproduced numerically and cross-checked.
//!
//! See the `examples/` directory for one runnable program per capability and
//! the `simplex-hull` binary for the verification CLI.

// index arithmetic reads better than iterator chains in the dense kernels
#![allow(clippy::needless_range_loop)]

mod checks;
mod formulas;
mod hull;
mod linalg;
mod lp;
mod report;
pub mod sampling;
mod search;
mod simplex;

pub use checks::{
    check_contact_at_optima, check_direction_constraints, check_oracle_equivalence,
    check_point_reflection_maximum, check_regular_reflection_maximum,
    check_single_upper_facet_bound, check_translation_convexity, check_translation_maximum,
    run_all_checks, CheckOptions,
};
pub use formulas::{
    is_admissible, point_reflection_volume, prism_decomposition_volume, reflected_configuration,
    reflection_hull_ratio, regular_constraint_check, remark_upper_bound, single_upper_facet_bound,
    upper_facets, RatioBreakdown, UpperFacetBound, UpperSide,
};
pub use hull::{
    common_point, hull_contains, hull_volume, intersection_width, intersects, HullFacet, HullResult,
};
pub use linalg::{
    apply_isometry, determinant, gram_matrix, matrix_inverse, Isometry, Matrix, Vector,
};
pub use report::{format_float, RunReport, Verdict};
pub use search::{
    contact_certificate, convexity_probe, maximize_hyperplane_reflection,
    maximize_point_reflection, maximize_translation, ContactCertificate, ConvexityReport,
    IsometryFamily, SearchConfig, SearchResult, TraceEntry,
};
pub use simplex::{regular_simplex, FacetData, PointSet, Simplex};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular within the degeneracy tolerance")]
    SingularMatrix,
    #[error("degenerate simplex: vertices are affinely dependent")]
    DegenerateSimplex,
    #[error("degenerate hull: points span only {rank} dimensions, need {needed}")]
    DegenerateHull { rank: usize, needed: usize },
    #[error("direction is not admissible: ⟨u, s_{index}⟩ = {value} < 0")]
    InadmissibleDirection { index: usize, value: f64 },
    #[error("the two bodies do not intersect")]
    NoContact,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
