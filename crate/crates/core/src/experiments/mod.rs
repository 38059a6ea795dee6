//! Random-walk displacement, nested cutset sums, SVG drawings and corpus
//! manifests.

mod nash;
mod svg;
mod walk;

pub use nash::{nash_williams, nash_williams_with, standard_radii, NashCutset, NashWilliamsReport};
pub use svg::{render_svg, Overlays};
pub use walk::{srw_displacement, time_grid, WalkReport};

use serde::Serialize;

use crate::generators::FamilySpec;
use crate::graph::{PlanarEmbeddedGraph, VertexId};
use crate::metrics::{doubling_constant, growth_exponent, horizon_distance, sample_centers, CenterSpec};

/// One corpus line: how an instance was generated and what was measured.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ManifestEntry {
    pub file: String,
    pub spec: FamilySpec,
    pub vertices: usize,
    pub edges: usize,
    pub center: VertexId,
    pub c_hat: Option<f64>,
    pub d_hat: Option<f64>,
    /// Set when the instance should not be used, with the reason.
    pub excluded: Option<String>,
}

/// Measures doubling and growth around the deepest vertex. Doubling uses
/// that vertex plus 32 seeded random centers, radii up to a sixth of its
/// horizon distance; growth uses powers of two below that distance.
pub fn measure_instance(
    g: &PlanarEmbeddedGraph,
    file: &str,
    spec: &FamilySpec,
    max_c_hat: Option<f64>,
) -> ManifestEntry {
    let center = g.deepest_vertex();
    let depth = horizon_distance(g)[center.idx()];
    let top = if depth == u32::MAX { 64 } else { depth / 6 };
    let radii: Vec<u32> = (1..=top.max(1)).collect();
    let mut centers = sample_centers(g, 32, spec.seed);
    centers.push(center);
    let c_hat = doubling_constant(g, &CenterSpec::List(centers), &radii).ok().map(|e| e.c_hat);
    let growth_radii: Vec<u32> = (0..16).map(|k| 1u32 << k).filter(|&r| r < depth).collect();
    let d_hat = growth_exponent(g, center, &growth_radii).ok().map(|f| f.exponent);
    let excluded = match (max_c_hat, c_hat) {
        (Some(limit), Some(c)) if c > limit => Some(format!("measured doubling {c:.3} above {limit}")),
        (Some(_), None) => Some("no horizon-valid doubling sample".into()),
        _ => None,
    };
    ManifestEntry {
        file: file.to_string(),
        spec: spec.clone(),
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        center,
        c_hat,
        d_hat,
        excluded,
    }
}
