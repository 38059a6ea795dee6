//! Volume growth, doubling ratios and isoperimetric profiles.

mod mincut;
mod profile;

pub use mincut::{min_vertex_cut, VertexCut};
pub use profile::{brute_profile, corollary_check, ProfileEntry, ProfileMode, ProfileTable, BRUTE_FORCE_CAP};

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BoundedBfs, PlanarEmbeddedGraph, VertexId};

/// Above this many (center, radius) pairs the centers are subsampled.
pub const SAMPLE_BUDGET: usize = 1_000_000;

/// Distance from every vertex to the nearest horizon vertex
/// (`u32::MAX` everywhere when the horizon is empty).
pub fn horizon_distance(g: &PlanarEmbeddedGraph) -> Vec<u32> {
    let sources = g.horizon_vertices();
    let mut out = vec![u32::MAX; g.num_vertices()];
    if sources.is_empty() {
        return out;
    }
    let mut bfs = BoundedBfs::new(g.num_vertices());
    bfs.run(g, &sources, u32::MAX, None);
    for v in g.vertices() {
        if let Some(d) = bfs.dist(v) {
            out[v.idx()] = d;
        }
    }
    out
}

/// Cumulative ball sizes `V(v, 0..=radius)`.
pub fn volume_profile(g: &PlanarEmbeddedGraph, v: VertexId, radius: u32, bfs: &mut BoundedBfs) -> Vec<u64> {
    let mut counts = vec![0u64; radius as usize + 1];
    bfs.run(g, &[v], radius, None);
    for &w in bfs.touched() {
        counts[bfs.dist(w).unwrap() as usize] += 1;
    }
    for r in 1..counts.len() {
        counts[r] += counts[r - 1];
    }
    counts
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterSpec {
    All,
    List(Vec<VertexId>),
    Sample { count: usize, seed: u64 },
}

/// Worst ratio at one radius: `V(a, 2n) / V(b, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoublingSample {
    pub a: VertexId,
    pub b: VertexId,
    pub n: u32,
    pub big: u64,
    pub small: u64,
}

impl DoublingSample {
    pub fn ratio(&self) -> f64 {
        self.big as f64 / self.small as f64
    }

    fn cmp_ratio(&self, other: &Self) -> Ordering {
        (self.big as u128 * other.small as u128).cmp(&(other.big as u128 * self.small as u128))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DoublingEstimate {
    /// `(numerator, denominator)` of the largest sampled ratio.
    pub c_hat_exact: (u64, u64),
    pub c_hat: f64,
    pub samples: Vec<DoublingSample>,
    pub radius_window: (u32, u32),
    pub centers_used: usize,
}

/// `count` distinct vertices chosen uniformly with a seeded generator,
/// sorted by id.
pub fn sample_centers(g: &PlanarEmbeddedGraph, count: usize, seed: u64) -> Vec<VertexId> {
    let all: Vec<_> = g.vertices().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick: Vec<_> = all.choose_multiple(&mut rng, count.min(all.len())).copied().collect();
    pick.sort_unstable();
    pick
}

fn resolve_centers(g: &PlanarEmbeddedGraph, spec: &CenterSpec, per_center: usize) -> Result<Vec<VertexId>> {
    let mut centers = match spec {
        CenterSpec::All => g.vertices().collect::<Vec<_>>(),
        CenterSpec::List(list) => {
            for &c in list {
                g.check_vertex(c)?;
            }
            let mut l = list.clone();
            l.sort_unstable();
            l.dedup();
            l
        }
        CenterSpec::Sample { count, seed } => sample_centers(g, *count, *seed),
    };
    let cap = (SAMPLE_BUDGET / per_center.max(1)).max(1);
    if centers.len() > cap {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        centers = centers.choose_multiple(&mut rng, cap).copied().collect();
        centers.sort_unstable();
    }
    Ok(centers)
}

/// Estimate of the doubling constant over `centers x radii`.
///
/// A center takes part at radius `n` only when `B(c, 2n)` avoids the
/// horizon; radii with no valid center are dropped.
pub fn doubling_constant(g: &PlanarEmbeddedGraph, centers: &CenterSpec, radii: &[u32]) -> Result<DoublingEstimate> {
    let mut radii: Vec<u32> = radii.iter().copied().filter(|&r| r >= 1).collect();
    radii.sort_unstable();
    radii.dedup();
    let Some(&r_max) = radii.last() else {
        return Err(Error::InvalidParams("no positive radius given".into()));
    };
    let centers = resolve_centers(g, centers, radii.len())?;
    let hd = horizon_distance(g);
    let valid: Vec<VertexId> = centers.into_iter().filter(|c| hd[c.idx()] > 2 * radii[0]).collect();

    let profiles: Vec<(VertexId, Vec<u64>)> = valid
        .par_iter()
        .map_init(
            || BoundedBfs::new(g.num_vertices()),
            |bfs, &c| {
                let reach = (hd[c.idx()] - 1).min(2 * r_max);
                (c, volume_profile(g, c, reach, bfs))
            },
        )
        .collect();

    let mut samples = Vec::new();
    for &r in &radii {
        let mut big: Option<(VertexId, u64)> = None;
        let mut small: Option<(VertexId, u64)> = None;
        for (c, vol) in &profiles {
            if hd[c.idx()] <= 2 * r {
                continue;
            }
            let v2 = vol[2 * r as usize];
            let v1 = vol[r as usize];
            if big.is_none_or(|(_, b)| v2 > b) {
                big = Some((*c, v2));
            }
            if small.is_none_or(|(_, s)| v1 < s) {
                small = Some((*c, v1));
            }
        }
        if let (Some((a, big)), Some((b, small))) = (big, small) {
            samples.push(DoublingSample { a, b, n: r, big, small });
        }
    }
    let worst = samples
        .iter()
        .max_by(|x, y| x.cmp_ratio(y))
        .ok_or_else(|| Error::Insufficient("no horizon-valid (center, radius) pair".into()))?;
    Ok(DoublingEstimate {
        c_hat_exact: (worst.big, worst.small),
        c_hat: worst.ratio(),
        radius_window: (samples[0].n, samples[samples.len() - 1].n),
        centers_used: profiles.len(),
        samples,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LogLogFit {
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
}

/// Least-squares line through `(ln x, ln y)`.
pub fn fit_loglog(points: &[(f64, f64)]) -> Result<LogLogFit> {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    if pts.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::InvalidParams("log-log fit needs positive data".into()));
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if pts.len() < 2 || sxx <= 1e-12 {
        return Err(Error::Insufficient("log-log fit needs two distinct abscissae".into()));
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let max_residual = pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).abs())
        .fold(0.0, f64::max);
    Ok(LogLogFit {
        slope,
        intercept,
        max_residual,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthFit {
    pub exponent: f64,
    pub max_residual: f64,
    pub volumes: Vec<(u32, u64)>,
}

/// Slope of `ln V(v, r)` against `ln r` over the horizon-valid radii.
pub fn growth_exponent(g: &PlanarEmbeddedGraph, v: VertexId, radii: &[u32]) -> Result<GrowthFit> {
    g.check_vertex(v)?;
    let hd = horizon_distance(g)[v.idx()];
    let mut radii: Vec<u32> = radii.iter().copied().filter(|&r| r >= 1 && r < hd).collect();
    radii.sort_unstable();
    radii.dedup();
    if radii.len() < 4 {
        return Err(Error::Insufficient(format!(
            "growth fit needs 4 distinct horizon-valid radii, have {}",
            radii.len()
        )));
    }
    let mut bfs = BoundedBfs::new(g.num_vertices());
    let vol = volume_profile(g, v, *radii.last().unwrap(), &mut bfs);
    let volumes: Vec<(u32, u64)> = radii.iter().map(|&r| (r, vol[r as usize])).collect();
    let pts: Vec<(f64, f64)> = volumes.iter().map(|&(r, n)| (r as f64, n as f64)).collect();
    let fit = fit_loglog(&pts)?;
    Ok(GrowthFit {
        exponent: fit.slope,
        max_residual: fit.max_residual,
        volumes,
    })
}

/// Least `k` with `V(v, k) >= n`, searched over horizon-valid radii.
pub fn phi(g: &PlanarEmbeddedGraph, v: VertexId, n: u64) -> Result<u32> {
    g.check_vertex(v)?;
    if n == 0 {
        return Err(Error::InvalidParams("phi needs n >= 1".into()));
    }
    let hd = horizon_distance(g)[v.idx()];
    let limit = if hd == u32::MAX { u32::MAX } else { hd - 1 };
    let mut bfs = BoundedBfs::new(g.num_vertices());
    bfs.run(g, &[v], limit, None);
    let mut counts: Vec<u64> = Vec::new();
    for &w in bfs.touched() {
        let d = bfs.dist(w).unwrap() as usize;
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    let mut total = 0;
    for (k, c) in counts.iter().enumerate() {
        total += c;
        if total >= n {
            return Ok(k as u32);
        }
    }
    Err(Error::Insufficient(format!(
        "V({v}, k) stays below {n} for every horizon-valid k (max {total})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::grid;

    #[test]
    fn path_doubling_tends_to_two() {
        let g = grid(200, 1).unwrap();
        let est = doubling_constant(&g, &CenterSpec::All, &(5..=30).collect::<Vec<_>>()).unwrap();
        // V(n) = 2n + 1, so V(2n) / V(n) = (4n + 1) / (2n + 1), largest at n = 30
        assert_eq!(est.c_hat_exact, (121, 61));
        assert!(est.c_hat < 2.0);
    }

    #[test]
    fn grid_doubling_matches_closed_form() {
        let g = grid(101, 101).unwrap();
        let radii: Vec<u32> = (5..=20).collect();
        let est = doubling_constant(&g, &CenterSpec::List(vec![VertexId(50 * 101 + 50)]), &radii).unwrap();
        let v = |n: u64| 2 * n * n + 2 * n + 1;
        // the ratio increases towards 4, so the largest radius wins
        assert_eq!(est.c_hat_exact, (v(40), v(20)));
        assert!((3.9..4.0).contains(&est.c_hat));
    }

    #[test]
    fn radii_reaching_the_horizon_are_excluded() {
        let g = grid(21, 21).unwrap();
        let est = doubling_constant(&g, &CenterSpec::List(vec![VertexId(220)]), &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(est.radius_window, (1, 4));
    }

    #[test]
    fn growth_of_grid_and_path() {
        let g = grid(201, 201).unwrap();
        let fit = growth_exponent(&g, VertexId(100 * 201 + 100), &[10, 20, 40, 80]).unwrap();
        assert!((fit.exponent - 2.0).abs() < 0.1, "{fit:?}");
        let p = grid(401, 1).unwrap();
        let fit = growth_exponent(&p, VertexId(200), &[10, 20, 40, 80, 160]).unwrap();
        assert!((fit.exponent - 1.0).abs() < 0.05, "{fit:?}");
    }

    #[test]
    fn repeated_radius_is_rejected() {
        let g = grid(51, 51).unwrap();
        assert!(growth_exponent(&g, VertexId(1300), &[5, 5, 5, 5]).is_err());
    }

    #[test]
    fn exact_power_law_is_recovered() {
        let pts: Vec<(f64, f64)> = (1..10).map(|k| (k as f64, 3.0 * (k as f64).powf(2.5))).collect();
        let fit = fit_loglog(&pts).unwrap();
        assert!((fit.slope - 2.5).abs() < 1e-9);
        assert!(fit.max_residual < 1e-9);
    }

    #[test]
    fn phi_on_grid() {
        let g = grid(21, 21).unwrap();
        let v = VertexId(220);
        assert_eq!(phi(&g, v, 1).unwrap(), 0);
        assert_eq!(phi(&g, v, 5).unwrap(), 1);
        assert_eq!(phi(&g, v, 6).unwrap(), 2);
        assert!(phi(&g, v, 10_000).is_err());
    }
}
