use std::collections::HashSet;

use serde::Serialize;

use super::{CutsetCase, CutsetResult, PathRole};
use crate::graph::{bfs_distances, boundary, component_avoiding, PlanarEmbeddedGraph, VertexId};

/// Clause-by-clause recheck of a [`CutsetResult`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    /// `B(v, n)` is inside `Omega`.
    pub ball_inside: bool,
    /// The reported boundary equals the recomputed external boundary and the
    /// reported sizes match the lists.
    pub boundary_consistent: bool,
    /// Every boundary vertex is within `6n` of `v`.
    pub boundary_within_6n: bool,
    pub omega_connected: bool,
    /// Removing the boundary leaves exactly `Omega` around `v`.
    pub separation: bool,
    /// `Omega` holds no horizon vertex.
    pub horizon_disjoint: bool,
    /// Outside the trivial case, the boundary lies on the removed paths.
    pub boundary_on_curve: bool,
    /// `|boundary| <= bound_used`.
    pub size_bound: bool,
    pub ratio: f64,
    /// Whether the curve pieces join into a simple closed curve. Reported,
    /// not required.
    pub curve_is_simple: bool,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sorted(v: &[VertexId]) -> Vec<VertexId> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

fn curve_simple(paths: &[Vec<VertexId>]) -> bool {
    let mut cycle: Vec<VertexId> = Vec::new();
    for p in paths {
        let skip = usize::from(!cycle.is_empty() && cycle.last() == p.first());
        cycle.extend_from_slice(&p[skip.min(p.len())..]);
    }
    if cycle.len() < 4 || cycle.first() != cycle.last() {
        return false;
    }
    cycle.pop();
    let distinct: HashSet<_> = cycle.iter().collect();
    distinct.len() == cycle.len()
}

/// Recheck every invariant of `r` from fresh searches on `g`.
pub fn verify_cutset(g: &PlanarEmbeddedGraph, v: VertexId, n: u32, r: &CutsetResult) -> VerifyReport {
    let nv = g.num_vertices();
    let known = |list: &[VertexId]| list.iter().all(|w| w.idx() < nv);
    let ratio = r.boundary.len() as f64 / n.max(1) as f64;
    let curve_is_simple = curve_simple(&r.paths);
    if !g.contains(v) || !known(&r.omega) || !known(&r.boundary) || !r.paths.iter().all(|p| known(p)) {
        return VerifyReport {
            ball_inside: false,
            boundary_consistent: false,
            boundary_within_6n: false,
            omega_connected: false,
            separation: false,
            horizon_disjoint: false,
            boundary_on_curve: false,
            size_bound: false,
            ratio,
            curve_is_simple: false,
            failures: vec!["result mentions vertices outside the graph".into()],
        };
    }

    let dist = bfs_distances(g, v).expect("v checked");
    let omega = sorted(&r.omega);
    let mut inside = vec![false; nv];
    for &w in &omega {
        inside[w.idx()] = true;
    }
    let mut failures = Vec::new();

    let ball_inside = g.vertices().all(|w| dist.get(w).is_none_or(|d| d > n) || inside[w.idx()]);
    if !ball_inside {
        failures.push(format!("B({v}, {n}) is not inside omega"));
    }

    let recomputed = boundary(g, &omega).expect("ids checked");
    let reported = sorted(&r.boundary);
    let boundary_consistent = recomputed == reported
        && reported.len() == r.boundary.len()
        && r.boundary_size == r.boundary.len()
        && r.omega_size == r.omega.len()
        && omega.len() == r.omega.len();
    if !boundary_consistent {
        failures.push(format!(
            "reported boundary ({}) differs from recomputed boundary ({})",
            r.boundary.len(),
            recomputed.len()
        ));
    }

    let boundary_within_6n = reported.iter().all(|&w| dist.get(w).is_some_and(|d| d <= 6 * n));
    if !boundary_within_6n {
        failures.push(format!("boundary leaves B({v}, {})", 6 * n));
    }

    let omega_connected = match omega.first() {
        None => false,
        Some(&start) => {
            let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
            component_avoiding(g, start, &outside).len() == omega.len()
        }
    };
    if !omega_connected {
        failures.push("omega is empty or disconnected".into());
    }

    let mut blocked = vec![false; nv];
    for &w in &reported {
        blocked[w.idx()] = true;
    }
    let separation = component_avoiding(g, v, &blocked) == omega;
    if !separation {
        failures.push("removing the boundary does not cut out exactly omega".into());
    }

    let horizon_disjoint = omega.iter().all(|&w| !g.is_horizon(w));
    if !horizon_disjoint {
        failures.push("omega reaches the horizon".into());
    }

    let boundary_on_curve = r.case == CutsetCase::Trivial || {
        let on: HashSet<VertexId> = r
            .paths
            .iter()
            .zip(&r.path_roles)
            .filter(|(_, &role)| role != PathRole::Arc)
            .flat_map(|(p, _)| p.iter().copied())
            .collect();
        reported.iter().all(|w| on.contains(w))
    };
    if !boundary_on_curve {
        failures.push("boundary vertex off the removed paths".into());
    }

    let size_bound = reported.len() as u64 <= r.bound_used;
    if !size_bound {
        failures.push(format!("|boundary| = {} exceeds {}", reported.len(), r.bound_used));
    }

    VerifyReport {
        ball_inside,
        boundary_consistent,
        boundary_within_6n,
        omega_connected,
        separation,
        horizon_disjoint,
        boundary_on_curve,
        size_bound,
        ratio,
        curve_is_simple,
        failures,
    }
}
