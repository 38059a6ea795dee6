use serde::Serialize;

use crate::cutset::{find_cutset_with, CutsetCase, CutsetConfig};
use crate::error::{Error, Result};
use crate::graph::{component_avoiding, PlanarEmbeddedGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NashCutset {
    pub radius: u32,
    pub size: usize,
    pub case: CutsetCase,
    /// Removing this cutset cuts `v` off from the horizon.
    pub separates: bool,
    pub vertices: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NashWilliamsReport {
    pub center: VertexId,
    pub cutsets: Vec<NashCutset>,
    /// Sum of `1 / |C_k|`.
    pub partial_sum: f64,
    pub disjointness_verified: bool,
    pub separation_verified: bool,
}

/// `n_1 = 1`, `n_{k+1} = 6 n_k + 1`.
pub fn standard_radii(k_max: usize) -> Vec<u32> {
    let mut radii = Vec::with_capacity(k_max);
    let mut n = 1u32;
    for _ in 0..k_max {
        radii.push(n);
        n = 6 * n + 1;
    }
    radii
}

/// Nested cutsets `C_k = boundary(Omega_k)` around `v` at the standard radii.
pub fn nash_williams(g: &PlanarEmbeddedGraph, v: VertexId, k_max: usize) -> Result<NashWilliamsReport> {
    nash_williams_with(g, v, &standard_radii(k_max), &CutsetConfig::default())
}

/// As [`nash_williams`] with an explicit radius schedule. Disjointness and
/// separation are checked, never assumed, so a bad schedule shows up in the
/// report rather than as an error.
pub fn nash_williams_with(
    g: &PlanarEmbeddedGraph,
    v: VertexId,
    radii: &[u32],
    config: &CutsetConfig,
) -> Result<NashWilliamsReport> {
    if radii.is_empty() {
        return Err(Error::InvalidParams("need at least one radius".into()));
    }
    let mut cutsets = Vec::with_capacity(radii.len());
    for &n in radii {
        let r = find_cutset_with(g, v, n, config)?;
        let mut blocked = vec![false; g.num_vertices()];
        for &w in &r.boundary {
            blocked[w.idx()] = true;
        }
        let reached = component_avoiding(g, v, &blocked);
        let separates = !reached.is_empty() && reached.iter().all(|&w| !g.is_horizon(w));
        cutsets.push(NashCutset {
            radius: n,
            size: r.boundary.len(),
            case: r.case,
            separates,
            vertices: r.boundary,
        });
    }
    let mut owner = vec![usize::MAX; g.num_vertices()];
    let mut disjoint = true;
    for (k, c) in cutsets.iter().enumerate() {
        for &w in &c.vertices {
            if owner[w.idx()] != usize::MAX && owner[w.idx()] != k {
                disjoint = false;
            }
            owner[w.idx()] = k;
        }
    }
    Ok(NashWilliamsReport {
        center: v,
        partial_sum: cutsets.iter().map(|c| 1.0 / c.size as f64).sum(),
        disjointness_verified: disjoint,
        separation_verified: cutsets.iter().all(|c| c.separates),
        cutsets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::grid;

    #[test]
    fn schedule() {
        assert_eq!(standard_radii(4), vec![1, 7, 43, 259]);
    }

    #[test]
    fn single_cutset_sum() {
        let g = grid(41, 41).unwrap();
        let r = nash_williams(&g, VertexId(20 * 41 + 20), 1).unwrap();
        assert_eq!(r.cutsets.len(), 1);
        assert_eq!(r.partial_sum, 1.0 / r.cutsets[0].size as f64);
        assert!(r.disjointness_verified && r.separation_verified);
    }

    #[test]
    fn overlapping_schedule_is_flagged() {
        let g = grid(61, 61).unwrap();
        let r = nash_williams_with(&g, VertexId(30 * 61 + 30), &[2, 2], &CutsetConfig::default()).unwrap();
        assert!(!r.disjointness_verified);
    }
}
