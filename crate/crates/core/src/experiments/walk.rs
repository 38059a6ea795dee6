use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, PlanarEmbeddedGraph, VertexId};
use crate::metrics::{fit_loglog, horizon_distance};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WalkReport {
    pub center: VertexId,
    /// Distance from the center to the nearest horizon vertex.
    pub horizon_radius: u32,
    pub times: Vec<u64>,
    /// Mean of `d(X_0, X_t)` over uncensored walks, one entry per time.
    pub mean_displacement: Vec<f64>,
    pub alpha_hat: f64,
    /// Times used by the exponent fit.
    pub fit_window: (u64, u64),
    pub trials: u64,
    /// Walks that touched the horizon before `t_max`; excluded from means.
    pub censored: u64,
    pub censored_fraction: f64,
    pub seed: u64,
}

/// `0`, then about ten geometrically spaced times per decade up to `t_max`.
pub fn time_grid(t_max: u64) -> Vec<u64> {
    let mut times = vec![0u64];
    let mut k = 0;
    loop {
        let t = 10f64.powf(k as f64 / 10.0).round() as u64;
        if t >= t_max {
            break;
        }
        if *times.last().unwrap() != t {
            times.push(t);
        }
        k += 1;
    }
    times.push(t_max);
    times
}

/// Simple random walks from `v`. Trial `i` draws from ChaCha8 seeded with
/// `seed` on stream `i`, so results do not depend on the thread count.
///
/// The exponent is fitted on the decade of times centered at `sqrt(t_max)`.
pub fn srw_displacement(g: &PlanarEmbeddedGraph, v: VertexId, t_max: u64, trials: u64, seed: u64) -> Result<WalkReport> {
    g.check_vertex(v)?;
    if t_max < 10 || trials == 0 {
        return Err(Error::InvalidParams("walks need t_max >= 10 and at least one trial".into()));
    }
    let dist = bfs_distances(g, v)?;
    let dist = dist.as_slice();
    let horizon_radius = horizon_distance(g)[v.idx()];
    if horizon_radius == 0 {
        return Err(Error::Horizon {
            what: "walk center is a horizon vertex",
            center: v,
            radius: 0,
            hit: v,
        });
    }
    let times = time_grid(t_max);

    let run = |trial: u64| -> Option<Vec<u64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut at = v;
        let mut out = Vec::with_capacity(times.len());
        let mut next = 0;
        for t in 0..=t_max {
            if t > 0 {
                let k = rng.gen_range(0..g.degree(at));
                at = g.neighbors(at).nth(k).expect("k < degree");
                if g.is_horizon(at) {
                    return None;
                }
            }
            if times[next] == t {
                out.push(dist[at.idx()] as u64);
                next += 1;
            }
        }
        Some(out)
    };

    let (sums, kept) = (0..trials)
        .into_par_iter()
        .map(|i| match run(i) {
            Some(d) => (d, 1u64),
            None => (vec![0; times.len()], 0),
        })
        .reduce(
            || (vec![0u64; times.len()], 0),
            |(mut a, ka), (b, kb)| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                (a, ka + kb)
            },
        );
    if kept == 0 {
        return Err(Error::Insufficient("every walk reached the horizon".into()));
    }
    let mean_displacement: Vec<f64> = sums.iter().map(|&s| s as f64 / kept as f64).collect();

    let mid = (t_max as f64).sqrt();
    let (lo, hi) = (mid / 10f64.sqrt(), mid * 10f64.sqrt());
    let pts: Vec<(f64, f64)> = times
        .iter()
        .zip(&mean_displacement)
        .filter(|&(&t, &m)| t > 0 && m > 0.0 && (t as f64) >= lo && (t as f64) <= hi)
        .map(|(&t, &m)| (t as f64, m))
        .collect();
    let fit = fit_loglog(&pts)?;
    let window = times.iter().copied().filter(|&t| t > 0 && (t as f64) >= lo && (t as f64) <= hi);
    let fit_window = (window.clone().min().unwrap_or(0), window.max().unwrap_or(0));
    let censored = trials - kept;
    Ok(WalkReport {
        center: v,
        horizon_radius,
        times,
        mean_displacement,
        alpha_hat: fit.slope,
        fit_window,
        trials,
        censored,
        censored_fraction: censored as f64 / trials as f64,
        seed,
    })
}
