use serde::Serialize;

use super::phi;
use crate::cutset::find_cutset;
use crate::error::{Error, Result};
use crate::graph::{PlanarEmbeddedGraph, VertexId};

/// Largest host accepted by [`brute_profile`].
pub const BRUTE_FORCE_CAP: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileMode {
    ExactBruteforce,
    ConstructedUpper,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileEntry {
    pub n: u64,
    /// Exact profile value, or the boundary size of a constructed domain.
    pub value: u64,
    pub phi_n: Option<u32>,
    /// Radius passed to the cutset construction.
    pub radius: Option<u32>,
    pub omega_size: Option<u64>,
    /// `value / radius` in constructed mode.
    pub alpha_ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileTable {
    pub mode: ProfileMode,
    pub entries: Vec<ProfileEntry>,
}

/// Exact `I(n) = min { |boundary(Omega)| : 1 <= |Omega| <= n }` for
/// `n = 1..=n_max` by enumerating every vertex subset.
pub fn brute_profile(g: &PlanarEmbeddedGraph, n_max: u64) -> Result<ProfileTable> {
    brute_profile_capped(g, n_max, BRUTE_FORCE_CAP)
}

pub fn brute_profile_capped(g: &PlanarEmbeddedGraph, n_max: u64, cap: usize) -> Result<ProfileTable> {
    let nv = g.num_vertices();
    if nv > cap || nv > 24 {
        return Err(Error::CapExceeded {
            have: nv,
            cap: cap.min(24),
        });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | (1 << w.0)))
        .collect();
    let full = 1usize << nv;
    let mut reach = vec![0u32; full];
    let mut best = vec![u32::MAX; nv + 1];
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        reach[mask] = reach[mask & (mask - 1)] | adj[low];
        let size = mask.count_ones() as usize;
        let bnd = (reach[mask] & !(mask as u32)).count_ones();
        best[size] = best[size].min(bnd);
    }
    for k in 2..=nv {
        best[k] = best[k].min(best[k - 1]);
    }
    let entries = (1..=n_max.min(nv as u64))
        .map(|n| ProfileEntry {
            n,
            value: best[n as usize] as u64,
            phi_n: None,
            radius: None,
            omega_size: None,
            alpha_ratio: None,
        })
        .collect();
    Ok(ProfileTable {
        mode: ProfileMode::ExactBruteforce,
        entries,
    })
}

/// Upper bounds on the profile from cutsets at radius `max(1, phi(n))`.
pub fn corollary_check(g: &PlanarEmbeddedGraph, v: VertexId, n_values: &[u64]) -> Result<ProfileTable> {
    let mut entries = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let k = phi(g, v, n)?;
        let radius = k.max(1);
        let r = find_cutset(g, v, radius)?;
        if (r.omega_size as u64) < n {
            return Err(Error::VerificationFailed(format!(
                "domain of size {} is smaller than n = {n}",
                r.omega_size
            )));
        }
        entries.push(ProfileEntry {
            n,
            value: r.boundary_size as u64,
            phi_n: Some(k),
            radius: Some(radius),
            omega_size: Some(r.omega_size as u64),
            alpha_ratio: Some(r.boundary_size as f64 / radius as f64),
        });
    }
    Ok(ProfileTable {
        mode: ProfileMode::ConstructedUpper,
        entries,
    })
}
