//! Constrained maximization of hull-volume ratios over the three isometry
//! families, plus the convexity probe and the contact classification used to
//! certify optima.
//!
//! The hyperplane search is derivative-free on purpose: the objective is
//! piecewise smooth (the upper-facet set changes discretely across the
//! sphere), so it runs a rejection-sampled coarse pass over the admissible
//! cap followed by shrinking-neighborhood resampling around the incumbent.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::formulas::{
    is_admissible, reflected_configuration, reflection_hull_ratio, single_upper_facet_bound,
};
use crate::hull::{common_point, hull_volume, intersection_width, intersects};
use crate::linalg::{Isometry, Vector};
use crate::sampling;
use crate::simplex::Simplex;
use crate::{Error, Result};

/// Candidate ratios within this relative window count as ties and the
/// earlier candidate (lower root / earlier draw) is kept, so reruns and
/// symmetric inputs resolve deterministically.
const TIE_WINDOW: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsometryFamily {
    Translation,
    PointReflection,
    HyperplaneReflection,
}

impl std::fmt::Display for IsometryFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IsometryFamily::Translation => write!(f, "translation"),
            IsometryFamily::PointReflection => write!(f, "point"),
            IsometryFamily::HyperplaneReflection => write!(f, "hyperplane"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Coarse sample budget per sphere dimension: the coarse pass draws
    /// resolutionⁿ⁻¹ admissible directions (capped at 200 000).
    pub coarse_grid_resolution: usize,
    pub refinement_iterations: usize,
    /// Neighborhood shrink factor per refinement iteration, in (0,1).
    pub refinement_shrink: f64,
    pub seed: u64,
    /// When set, the winning parameter is re-evaluated with the hull oracle.
    pub oracle_check: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            coarse_grid_resolution: 16,
            refinement_iterations: 40,
            refinement_shrink: 0.7,
            seed: 0,
            oracle_check: true,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.coarse_grid_resolution < 8 {
            return Err(Error::InvalidInput(
                "coarse_grid_resolution must be at least 8".into(),
            ));
        }
        if self.refinement_iterations < 10 {
            return Err(Error::InvalidInput(
                "refinement_iterations must be at least 10".into(),
            ));
        }
        if !(self.refinement_shrink > 0.0 && self.refinement_shrink < 1.0) {
            return Err(Error::InvalidInput(
                "refinement_shrink must lie strictly between 0 and 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceEntry {
    pub iteration: usize,
    pub best_ratio: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchResult {
    pub family: IsometryFamily,
    /// Maximizing parameter: u for hyperplane reflections, the center x for
    /// point reflections, the translation t otherwise.
    pub argmax_parameter: Vector,
    pub max_ratio: f64,
    /// Oracle cross-check at the argmax, present iff oracle_check was set.
    pub oracle_ratio: Option<f64>,
    pub trace: Vec<TraceEntry>,
    /// Classification of S ∩ σ(S) at the reported optimum.
    pub contact_certificate: String,
}

/// Classification of the intersection of a simplex with an isometric copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContactCertificate {
    SingleCommonVertex { index: usize },
    SingleNonVertexPoint,
    HigherDimensional,
}

impl std::fmt::Display for ContactCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContactCertificate::SingleCommonVertex { index } => {
                write!(f, "single common vertex (index {index})")
            }
            ContactCertificate::SingleNonVertexPoint => write!(f, "single non-vertex point"),
            ContactCertificate::HigherDimensional => {
                write!(f, "higher-dimensional intersection")
            }
        }
    }
}

impl ContactCertificate {
    pub fn is_single_vertex(&self) -> bool {
        matches!(self, ContactCertificate::SingleCommonVertex { .. })
    }
}

/// Classify S ∩ σ(S): a single shared vertex, a single non-vertex point, or
/// something higher-dimensional. Errors with NoContact when the bodies are
/// disjoint.
pub fn contact_certificate(s: &Simplex, sigma: &Isometry) -> Result<ContactCertificate> {
    let image = s.transformed(sigma)?;
    if !intersects(s, &image)? {
        return Err(Error::NoContact);
    }
    let n = s.dim();
    let scale = s
        .vertices()
        .iter()
        .chain(image.vertices())
        .map(Vector::norm)
        .fold(1.0, f64::max);
    let width_tol = 1e-8 * scale;
    for axis in 0..n {
        let mut d = Vector::zeros(n);
        d.0[axis] = 1.0;
        let width = intersection_width(s, &image, &d)?.ok_or(Error::NoContact)?;
        if width > width_tol {
            return Ok(ContactCertificate::HigherDimensional);
        }
    }
    let vertex_tol = 1e-9 * scale;
    for (i, v) in s.vertices().iter().enumerate() {
        for w in image.vertices() {
            if v.distance(w) <= vertex_tol {
                return Ok(ContactCertificate::SingleCommonVertex { index: i });
            }
        }
    }
    let _ = common_point(s, &image)?;
    Ok(ContactCertificate::SingleNonVertexPoint)
}

struct Incumbent {
    ratio: f64,
    parameter: Vector,
    root: usize,
}

/// Accept a challenger only when it beats the incumbent beyond the tie
/// window; equal-within-window keeps the earlier candidate.
fn improves(best: Option<&Incumbent>, ratio: f64) -> bool {
    match best {
        None => true,
        Some(b) => beats(b.ratio, ratio),
    }
}

fn beats(incumbent: f64, challenger: f64) -> bool {
    if incumbent == f64::NEG_INFINITY {
        return true;
    }
    challenger > incumbent + TIE_WINDOW * incumbent.abs().max(1.0)
}

/// Maximize Vol(conv(S, Sᴴ))/Vol(S) over reflection hyperplanes through a
/// vertex of S. The admissible cap is searched once per vertex taken as the
/// contact point (the configuration rerooted there), and the best direction
/// over all roots is returned.
pub fn maximize_hyperplane_reflection(s: &Simplex, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let n = s.dim();
    let coarse_budget = (cfg.coarse_grid_resolution as u64)
        .saturating_pow(n.saturating_sub(1) as u32)
        .min(200_000) as usize;
    let refine_batch = (2 * cfg.coarse_grid_resolution).max(32);

    let mut best: Option<Incumbent> = None;
    let mut best_trace: Vec<TraceEntry> = Vec::new();

    for root in 0..=n {
        let rooted = s.rerooted(root)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(root as u64 + 1);

        let mut local: Option<Incumbent> = None;
        let mut trace = Vec::new();

        // analytically motivated seeds: the vertex-sum direction (optimal for
        // the regular simplex) and the single-upper-facet maximizer
        let mut anchors = Vec::new();
        if let Ok(u) = rooted.vertex_sum().normalized() {
            anchors.push(u);
        }
        if let Ok(t4) = single_upper_facet_bound(&rooted) {
            anchors.push(t4.optimal_u);
        }
        for u in anchors {
            if is_admissible(&rooted, &u) {
                consider(&rooted, &u, &mut local)?;
            }
        }

        let mut accepted = 0usize;
        let mut attempts = 0usize;
        while accepted < coarse_budget {
            attempts += 1;
            let u = if attempts > 100 * coarse_budget {
                // cap too small for plain rejection: draw inside the cone
                sampling::admissible_direction(&rooted, &mut rng)
            } else {
                sampling::unit_vector(n, &mut rng)
            };
            if !is_admissible(&rooted, &u) {
                continue;
            }
            accepted += 1;
            consider(&rooted, &u, &mut local)?;
        }
        trace.push(TraceEntry {
            iteration: 0,
            best_ratio: local.as_ref().map_or(f64::NEG_INFINITY, |b| b.ratio),
        });

        let mut sigma = 0.5;
        for it in 1..=cfg.refinement_iterations {
            let center = local
                .as_ref()
                .map(|b| b.parameter.clone())
                .expect("coarse phase found an admissible direction");
            for _ in 0..refine_batch {
                let jitter =
                    Vector::new((0..n).map(|_| sigma * sampling::normal(&mut rng)).collect());
                let Ok(u) = center.add(&jitter).normalized() else {
                    continue;
                };
                if !is_admissible(&rooted, &u) {
                    continue;
                }
                consider(&rooted, &u, &mut local)?;
            }
            sigma *= cfg.refinement_shrink;
            trace.push(TraceEntry {
                iteration: it,
                best_ratio: local.as_ref().map_or(f64::NEG_INFINITY, |b| b.ratio),
            });
        }

        let mut local = local.expect("admissible cap is never empty");
        local.root = root;
        if improves(best.as_ref(), local.ratio) {
            best = Some(local);
            best_trace = trace;
        }
    }

    let best = best.expect("at least one root searched");
    let rooted = s.rerooted(best.root)?;
    let oracle_ratio = if cfg.oracle_check {
        let pts = reflected_configuration(&rooted, &best.parameter)?;
        Some(hull_volume(&pts, n)?.volume / rooted.volume())
    } else {
        None
    };
    let iso = Isometry::hyperplane_reflection(best.parameter.clone())?;
    let certificate = contact_certificate(&rooted, &iso)?;

    Ok(SearchResult {
        family: IsometryFamily::HyperplaneReflection,
        argmax_parameter: best.parameter,
        max_ratio: best.ratio,
        oracle_ratio,
        trace: best_trace,
        contact_certificate: certificate.to_string(),
    })
}

fn consider(rooted: &Simplex, u: &Vector, best: &mut Option<Incumbent>) -> Result<()> {
    let ratio = reflection_hull_ratio(rooted, u)?.ratio;
    let replace = match best.as_ref() {
        None => true,
        Some(b) => ratio > b.ratio,
    };
    if replace {
        *best = Some(Incumbent {
            ratio,
            parameter: u.clone(),
            root: 0,
        });
    }
    Ok(())
}

/// Maximize Vol(conv(S ∪ S_x))/Vol(S) over reflection centers x ∈ S. The
/// candidates are the vertices (where the maximum 2ⁿ is attained) plus
/// seeded interior samples kept as a falsification probe.
pub fn maximize_point_reflection(s: &Simplex, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(101);
    let vol = s.volume();

    let mut best_ratio = f64::NEG_INFINITY;
    let mut best_x = s.vertex(0).clone();
    for v in s.vertices() {
        let ratio = crate::formulas::point_reflection_volume(s, v)? / vol;
        if beats(best_ratio, ratio) {
            best_ratio = ratio;
            best_x = v.clone();
        }
    }
    let mut trace = vec![TraceEntry {
        iteration: 0,
        best_ratio,
    }];

    let interior_samples = cfg.coarse_grid_resolution * cfg.coarse_grid_resolution;
    for _ in 0..interior_samples {
        let x = sampling::interior_point(s, &mut rng);
        let ratio = crate::formulas::point_reflection_volume(s, &x)? / vol;
        if beats(best_ratio, ratio) {
            best_ratio = ratio;
            best_x = x;
        }
    }
    trace.push(TraceEntry {
        iteration: 1,
        best_ratio,
    });

    let oracle_ratio = if cfg.oracle_check {
        let mut pts: Vec<Vector> = s.vertices().to_vec();
        pts.extend(s.vertices().iter().map(|p| best_x.scale(2.0).sub(p)));
        Some(hull_volume(&pts, s.dim())?.volume / vol)
    } else {
        None
    };
    let certificate = contact_certificate(s, &Isometry::PointReflection(best_x.clone()))?;

    Ok(SearchResult {
        family: IsometryFamily::PointReflection,
        argmax_parameter: best_x,
        max_ratio: best_ratio,
        oracle_ratio,
        trace,
        contact_certificate: certificate.to_string(),
    })
}

/// Maximize Vol(conv(S ∪ (t+S)))/Vol(S) over translations keeping the copies
/// intersecting. All (n+1)² vertex-to-vertex translations are evaluated with
/// the hull oracle, plus seeded random boundary-contact translations as a
/// falsification probe.
pub fn maximize_translation(s: &Simplex, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let n = s.dim();
    let vol = s.volume();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(201);

    let mut best_ratio = f64::NEG_INFINITY;
    let mut best_t = Vector::zeros(n);
    for i in 0..=n {
        for j in 0..=n {
            let t = s.vertex(i).sub(s.vertex(j));
            let ratio = translate_ratio(s, &t, vol)?;
            if beats(best_ratio, ratio) {
                best_ratio = ratio;
                best_t = t;
            }
        }
    }
    let mut trace = vec![TraceEntry {
        iteration: 0,
        best_ratio,
    }];

    // Boundary contacts attain n+1 too (the swept volume is linear along the
    // ray, so every direction tops out at the same value); the tie window in
    // `beats` keeps the vertex-contact argmax found above.
    for _ in 0..cfg.coarse_grid_resolution {
        let t = boundary_contact_translation(s, &mut rng)?;
        let ratio = translate_ratio(s, &t, vol)?;
        if beats(best_ratio, ratio) {
            best_ratio = ratio;
            best_t = t;
        }
    }
    trace.push(TraceEntry {
        iteration: 1,
        best_ratio,
    });

    let oracle_ratio = cfg.oracle_check.then_some(best_ratio);
    let certificate = contact_certificate(s, &Isometry::Translation(best_t.clone()))?;

    Ok(SearchResult {
        family: IsometryFamily::Translation,
        argmax_parameter: best_t,
        max_ratio: best_ratio,
        oracle_ratio,
        trace,
        contact_certificate: certificate.to_string(),
    })
}

fn translate_ratio(s: &Simplex, t: &Vector, vol: f64) -> Result<f64> {
    let mut pts: Vec<Vector> = s.vertices().to_vec();
    pts.extend(s.vertices().iter().map(|v| v.add(t)));
    Ok(hull_volume(&pts, s.dim())?.volume / vol)
}

/// Random translation that keeps the copies touching only near the boundary
/// of the feasible set: pick a direction, bisect the largest step that still
/// intersects, then pull back a hair so the copies intersect for certain
/// (the feasibility LP has its own tolerance).
pub(crate) fn boundary_contact_translation(s: &Simplex, rng: &mut ChaCha8Rng) -> Result<Vector> {
    let n = s.dim();
    let d = sampling::unit_vector(n, rng);
    let mut lo = 0.0f64;
    let mut hi = 3.0 * s.diameter();
    debug_assert!(!intersects(
        s,
        &s.transformed(&Isometry::Translation(d.scale(hi)))?
    )?);
    for _ in 0..50 {
        let mid = 0.5 * (lo + hi);
        let moved = s.transformed(&Isometry::Translation(d.scale(mid)))?;
        if intersects(s, &moved)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(d.scale(lo * (1.0 - 1e-6)))
}

/// Convexity report for g(x) = Vol(conv(K ∪ (K′ + x·t))) sampled on an even
/// grid wide enough to cross from overlap to separation on both sides.
#[derive(Clone, Debug, Serialize)]
pub struct ConvexityReport {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
    pub min_second_difference: f64,
    /// max |g| over the grid; the convexity slack is −1e−7·scale.
    pub scale: f64,
}

impl ConvexityReport {
    pub fn passes(&self) -> bool {
        self.min_second_difference >= -1e-7 * self.scale
    }
}

/// Probe Fáry–Rédei convexity: evaluate g by the hull oracle at `samples`
/// evenly spaced multiples of t and form central second differences.
pub fn convexity_probe(
    s: &Simplex,
    s2: &Simplex,
    t: &Vector,
    samples: usize,
) -> Result<ConvexityReport> {
    if t.norm() < 1e-12 {
        return Err(Error::InvalidInput(
            "translation direction must be nonzero".into(),
        ));
    }
    if samples < 3 {
        return Err(Error::InvalidInput(
            "convexity probe needs at least 3 samples".into(),
        ));
    }
    if s.dim() != s2.dim() || t.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            got: s2.dim().max(t.dim()),
        });
    }
    let n = s.dim();
    let reach = 2.0 * (s.diameter() + s2.diameter()) / t.norm();
    let mut xs = Vec::with_capacity(samples);
    let mut values = Vec::with_capacity(samples);
    for i in 0..samples {
        let x = -reach + 2.0 * reach * i as f64 / (samples - 1) as f64;
        let mut pts: Vec<Vector> = s.vertices().to_vec();
        pts.extend(s2.vertices().iter().map(|v| v.add(&t.scale(x))));
        values.push(hull_volume(&pts, n)?.volume);
        xs.push(x);
    }
    let mut min_dd = f64::INFINITY;
    for i in 1..samples - 1 {
        min_dd = min_dd.min(values[i + 1] - 2.0 * values[i] + values[i - 1]);
    }
    let scale = values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    Ok(ConvexityReport {
        xs,
        values,
        min_second_difference: min_dd,
        scale,
    })
}
