//! Bounded-boundary domains around a vertex.
//!
//! [`find_cutset`] builds a vertex set `Omega` with `B(v, n)` inside it, its
//! external boundary inside `B(v, 6n)`, and at most `(C^4 + 1)(2n + 1)`
//! boundary vertices, where `C` is the measured doubling constant. The
//! boundary is carved out by a closed curve made of a short geodesic `gamma`
//! across the contour of `B(v, 4n)` and paths `delta_i` that hop between net
//! points of the remaining contour arc.

mod base_pair;
mod net;
mod verify;

pub use base_pair::{choose_base_pair, BasePair};
pub use net::{epsilon_net, epsilon_net_in_order, ComponentGraph, Net, NetCheck};
pub use verify::{verify_cutset, VerifyReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    ball, boundary, component_avoiding, contour, BoundedBfs, ContourParametrization, PlanarEmbeddedGraph,
    Tiebreak, VertexId, Walk,
};
use crate::metrics::{doubling_constant, CenterSpec};
use crate::winding::{dual_ray, RayIndex};
use base_pair::{choose_with_index, geodesic_within, ArcIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutsetCase {
    /// No two contour sphere vertices are close; `Omega = B(v, 4n)`.
    Trivial,
    /// The chosen arc holds no sphere vertex besides its ends.
    TwoPoint,
    /// One chain of net points joins the ends of the arc.
    Connected,
    /// The chain had to be patched together along the arc.
    Iterative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathRole {
    Gamma,
    Delta,
    /// A piece of the contour; drawn as part of the curve but not removed.
    Arc,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Index of the tie-break strategy that produced the result.
    pub strategy: usize,
    pub contour_len: usize,
    /// Number of distinct sphere vertices on the contour.
    pub sphere_size: usize,
    pub base_weight: Option<usize>,
    pub net_sizes: Vec<usize>,
    pub component_sizes: Vec<usize>,
    /// Every net built along the way; kept in memory only.
    #[serde(skip)]
    pub nets: Vec<Net>,
}

/// Result of [`find_cutset`]; serializes to the cutset report format.
///
/// `paths` lists the pieces of the closed curve in order, `path_roles` says
/// which of them were removed from the graph to cut out `omega`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutsetResult {
    pub case: CutsetCase,
    pub n: u32,
    pub v: VertexId,
    pub omega_size: usize,
    pub boundary_size: usize,
    pub bound_used: u64,
    pub ratio: f64,
    pub curve_is_simple: bool,
    pub paths: Vec<Vec<VertexId>>,
    pub path_roles: Vec<PathRole>,
    pub c_hat: f64,
    pub omega: Vec<VertexId>,
    pub boundary: Vec<VertexId>,
    #[serde(default)]
    pub diagnostics: Diagnostics,
}

impl CutsetResult {
    /// Vertices of the `gamma` and `delta` paths, sorted and deduplicated.
    pub fn removal_set(&self) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .paths
            .iter()
            .zip(&self.path_roles)
            .filter(|(_, &r)| r != PathRole::Arc)
            .flat_map(|(p, _)| p.iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The allowance `floor((c^4 + 1)(2n + 1))`.
pub fn boundary_bound(c_hat: f64, n: u32) -> u64 {
    ((c_hat.powi(4) + 1.0) * (2 * n + 1) as f64).floor() as u64
}

#[derive(Clone, Debug, PartialEq)]
pub struct CutsetConfig {
    /// Doubling constant for the size allowance; estimated around `v` when
    /// absent.
    pub c_hat: Option<f64>,
    /// Number of tie-break strategies to try before giving up (1 to 8).
    pub max_attempts: usize,
}

impl Default for CutsetConfig {
    fn default() -> Self {
        CutsetConfig {
            c_hat: None,
            max_attempts: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ScanOrder {
    IdAscending,
    ArcForward,
    IdDescending,
    ArcBackward,
}

#[derive(Clone, Copy, Debug)]
struct Strategy {
    tiebreak: Tiebreak,
    scan: ScanOrder,
}

const STRATEGIES: [Strategy; 8] = {
    use ScanOrder::*;
    use Tiebreak::*;
    [
        Strategy { tiebreak: SmallestId, scan: IdAscending },
        Strategy { tiebreak: SmallestId, scan: ArcForward },
        Strategy { tiebreak: SmallestId, scan: IdDescending },
        Strategy { tiebreak: SmallestId, scan: ArcBackward },
        Strategy { tiebreak: LargestId, scan: IdAscending },
        Strategy { tiebreak: LargestId, scan: ArcForward },
        Strategy { tiebreak: LargestId, scan: IdDescending },
        Strategy { tiebreak: LargestId, scan: ArcBackward },
    ]
};

/// Doubling estimate around `v`: centers are `v` and a `n`-net of
/// `B(v, 4n)`, radii `1..=2n`.
pub fn local_doubling(g: &PlanarEmbeddedGraph, v: VertexId, n: u32) -> Result<f64> {
    let region = ball(g, v, 4 * n)?;
    let mut centers = epsilon_net(g, &region, n)?.points;
    centers.push(v);
    let radii: Vec<u32> = (1..=2 * n).collect();
    Ok(doubling_constant(g, &CenterSpec::List(centers), &radii)?.c_hat)
}

pub fn find_cutset(g: &PlanarEmbeddedGraph, v: VertexId, n: u32) -> Result<CutsetResult> {
    find_cutset_with(g, v, n, &CutsetConfig::default())
}

struct Setup<'a> {
    g: &'a PlanarEmbeddedGraph,
    v: VertexId,
    n: u32,
    contour: ContourParametrization,
    ray: RayIndex,
    index: ArcIndex,
    /// Distance from `v`, valid up to `6n + 1`.
    near: BoundedBfs,
    c_hat: f64,
    bound: u64,
}

pub fn find_cutset_with(
    g: &PlanarEmbeddedGraph,
    v: VertexId,
    n: u32,
    config: &CutsetConfig,
) -> Result<CutsetResult> {
    g.check_vertex(v)?;
    if n == 0 {
        return Err(Error::InvalidParams("cutset radius n must be at least 1".into()));
    }
    if !(1..=STRATEGIES.len()).contains(&config.max_attempts) {
        return Err(Error::InvalidParams(format!(
            "max_attempts must be in 1..={}",
            STRATEGIES.len()
        )));
    }
    let mut near = BoundedBfs::new(g.num_vertices());
    near.run(g, &[v], 6 * n + 1, None);
    if let Some(&hit) = near
        .touched()
        .iter()
        .find(|&&w| g.is_horizon(w) && near.dist(w).unwrap() <= 4 * n + 1)
    {
        return Err(Error::Horizon {
            what: "cutset needs B(v, 4n+1) inside the host",
            center: v,
            radius: 4 * n + 1,
            hit,
        });
    }
    let c_hat = match config.c_hat {
        Some(c) if c >= 1.0 && c.is_finite() => c,
        Some(c) => return Err(Error::InvalidParams(format!("doubling constant must be >= 1, got {c}"))),
        None => local_doubling(g, v, n)?,
    };
    let contour = contour(g, v, 4 * n)?;
    let ray = dual_ray(g, v)?.index();
    if !ray.parity(g, &contour.walk)? {
        return Err(Error::VerificationFailed(format!(
            "contour of B({v}, {}) does not wind around the center",
            4 * n
        )));
    }
    let index = ArcIndex::new(g, &contour, &ray);
    let setup = Setup {
        g,
        v,
        n,
        contour,
        ray,
        index,
        near,
        c_hat,
        bound: boundary_bound(c_hat, n),
    };

    let mut failures = Vec::new();
    for (k, strategy) in STRATEGIES.iter().take(config.max_attempts).enumerate() {
        match attempt(&setup, *strategy) {
            Ok(mut result) => {
                let report = verify_cutset(g, v, n, &result);
                if report.all_pass() {
                    result.diagnostics.strategy = k;
                    return Ok(result);
                }
                failures.push(format!("strategy {k}: {}", report.failures.join("; ")));
            }
            Err(e) if e.is_verification() => failures.push(format!("strategy {k}: {e}")),
            Err(e) => return Err(e),
        }
    }
    Err(Error::VerificationFailed(failures.join(" | ")))
}

/// Concatenate vertex paths, merging equal endpoints at the junctions.
fn join(parts: &[&[VertexId]]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = Vec::new();
    for part in parts {
        let skip = usize::from(!out.is_empty() && out.last() == part.first());
        out.extend_from_slice(&part[skip.min(part.len())..]);
    }
    out
}

/// Closed vertex sequence whose interior vertices are pairwise distinct.
fn is_simple_cycle(cycle: &[VertexId]) -> bool {
    if cycle.len() < 4 || cycle.first() != cycle.last() {
        return false;
    }
    let mut body = cycle[..cycle.len() - 1].to_vec();
    body.sort_unstable();
    body.windows(2).all(|w| w[0] != w[1])
}

fn closed_parity(s: &Setup, cycle: &[VertexId]) -> Result<bool> {
    let walk = Walk::from_vertices(s.g, cycle)?;
    s.ray.parity(s.g, &walk)
}

fn finish(
    s: &Setup,
    case: CutsetCase,
    paths: Vec<Vec<VertexId>>,
    path_roles: Vec<PathRole>,
    omega: Vec<VertexId>,
    diagnostics: Diagnostics,
) -> Result<CutsetResult> {
    let bnd = boundary(s.g, &omega)?;
    let cycle: Vec<VertexId> = {
        let refs: Vec<&[VertexId]> = paths.iter().map(|p| p.as_slice()).collect();
        join(&refs)
    };
    Ok(CutsetResult {
        case,
        n: s.n,
        v: s.v,
        omega_size: omega.len(),
        boundary_size: bnd.len(),
        bound_used: s.bound,
        ratio: bnd.len() as f64 / s.n as f64,
        curve_is_simple: is_simple_cycle(&cycle),
        paths,
        path_roles,
        c_hat: s.c_hat,
        omega,
        boundary: bnd,
        diagnostics,
    })
}

fn attempt(s: &Setup, strategy: Strategy) -> Result<CutsetResult> {
    let g = s.g;
    let n = s.n;
    let r4 = 4 * n;
    let len = s.contour.len();
    let mut diagnostics = Diagnostics {
        contour_len: len,
        sphere_size: s.contour.canonical().len(),
        ..Diagnostics::default()
    };

    let Some(bp) = choose_with_index(g, &s.contour, n, &s.ray, strategy.tiebreak, &s.index)? else {
        let omega = ball(g, s.v, r4)?;
        let mut arc: Vec<VertexId> = (0..len).map(|i| s.contour.vertex_at(i)).collect();
        arc.push(s.contour.vertex_at(0));
        return finish(s, CutsetCase::Trivial, vec![arc], vec![PathRole::Arc], omega, diagnostics);
    };
    diagnostics.base_weight = Some(bp.weight);

    let m = bp.arc_len;
    let at = |j: usize| s.contour.vertex_at(bp.arc_start + j);
    let depth = |j: usize| s.contour.depth_at(bp.arc_start + j);
    let arc_vertices = |from: usize, to: usize| (from..=to).map(at).collect::<Vec<_>>();
    let mut gamma_back = bp.gamma.clone();
    gamma_back.reverse();

    let mut bfs = BoundedBfs::new(g.num_vertices());
    let (case, paths, roles) = if (0..=m).all(|j| depth(j) != r4 || at(j) == bp.a || at(j) == bp.b) {
        (
            CutsetCase::TwoPoint,
            vec![arc_vertices(0, m), gamma_back],
            vec![PathRole::Arc, PathRole::Gamma],
        )
    } else {
        let reach = 2 * n + 1;
        let lift = |graph: &ComponentGraph, idx: &[usize], bfs: &mut BoundedBfs| -> Result<Vec<VertexId>> {
            let mut out = vec![graph.vertices[idx[0]]];
            for w in idx.windows(2) {
                let (x, y) = (graph.vertices[w[0]], graph.vertices[w[1]]);
                let hop = geodesic_within(g, x, y, reach, strategy.tiebreak, bfs)
                    .ok_or_else(|| Error::VerificationFailed(format!("no geodesic {x} -> {y} within {reach}")))?;
                out = join(&[&out, &hop]);
            }
            Ok(out)
        };

        let mut paths: Vec<Vec<VertexId>> = Vec::new();
        let mut roles: Vec<PathRole> = Vec::new();
        let mut case = None;
        let (mut p, mut s_vertex) = (0usize, bp.a);
        loop {
            let mut source: Vec<(usize, VertexId)> = (p..=m).filter(|&j| depth(j) == r4).map(|j| (j, at(j))).collect();
            match strategy.scan {
                ScanOrder::IdAscending => source.sort_by_key(|&(j, w)| (w, j)),
                ScanOrder::IdDescending => source.sort_by_key(|&(j, w)| (std::cmp::Reverse(w), j)),
                ScanOrder::ArcForward => {}
                ScanOrder::ArcBackward => source.reverse(),
            }
            let scan: Vec<VertexId> = source.into_iter().map(|(_, w)| w).collect();
            let net = epsilon_net_in_order(g, &scan, n, &mut bfs)?;
            diagnostics.net_sizes.push(net.points.len());

            let mut nodes = vec![s_vertex];
            for &x in net.points.iter().chain([&bp.b]) {
                if !nodes.contains(&x) {
                    nodes.push(x);
                }
            }
            diagnostics.nets.push(net);
            // The chord a-b would just retrace gamma; the replacement has to
            // run through net points strictly inside the arc.
            let skip = (p == 0).then(|| (0, nodes.len() - 1));
            let delta_graph = ComponentGraph::build_excluding(g, nodes, reach, &mut bfs, skip);
            case.get_or_insert(if delta_graph.is_connected() {
                CutsetCase::Connected
            } else {
                CutsetCase::Iterative
            });
            let b_idx = delta_graph.index_of(bp.b).expect("b is a node");
            let members = delta_graph.members(0);
            diagnostics.component_sizes.push(members.len());

            if delta_graph.component[b_idx] == delta_graph.component[0] {
                let idx = delta_graph.path(0, b_idx).expect("same component");
                paths.push(lift(&delta_graph, &idx, &mut bfs)?);
                roles.push(PathRole::Delta);
                break;
            }

            // Last arc position within n of the current component.
            bfs.run(g, &members, n, None);
            let q = (p..=m)
                .rev()
                .find(|&j| bfs.dist(at(j)).is_some())
                .expect("the start of the arc lies in the component");
            if q == m {
                return Err(Error::VerificationFailed("arc end within n of a component without b".into()));
            }
            let fq = at(q);
            bfs.run(g, &[fq], n, None);
            let mut x: Option<(u32, VertexId)> = None;
            for &c in &members {
                if let Some(d) = bfs.dist(c) {
                    let better = match x {
                        None => true,
                        Some((bd, bc)) => d < bd || (d == bd && strategy.tiebreak.pick(c, bc) == c),
                    };
                    if better {
                        x = Some((d, c));
                    }
                }
            }
            let (_, x) = x.expect("q is within n of the component");
            let x_idx = delta_graph.index_of(x).expect("x is a node");
            let idx = delta_graph.path(0, x_idx).expect("same component");
            let chain = lift(&delta_graph, &idx, &mut bfs)?;
            let connector = geodesic_within(g, x, fq, n, strategy.tiebreak, &mut bfs)
                .ok_or_else(|| Error::VerificationFailed(format!("no connector {x} -> {fq} within {n}")))?;
            let next = (q + 1..=m).find(|&j| depth(j) == r4).expect("b ends the arc");
            paths.push(join(&[&chain, &connector]));
            roles.push(PathRole::Delta);
            paths.push(arc_vertices(q, next));
            roles.push(PathRole::Arc);

            let mut parts: Vec<&[VertexId]> = paths.iter().map(|p| p.as_slice()).collect();
            let rest = arc_vertices(next, m);
            parts.push(&rest);
            parts.push(&gamma_back);
            if !closed_parity(s, &join(&parts))? {
                return Err(Error::VerificationFailed(format!(
                    "partial curve through arc position {next} has even winding"
                )));
            }
            p = next;
            s_vertex = at(next);
        }
        paths.push(gamma_back);
        roles.push(PathRole::Gamma);
        (case.expect("loop ran"), paths, roles)
    };

    let refs: Vec<&[VertexId]> = paths.iter().map(|p| p.as_slice()).collect();
    if !closed_parity(s, &join(&refs))? {
        return Err(Error::VerificationFailed("assembled curve has even winding".into()));
    }
    let mut blocked = vec![false; g.num_vertices()];
    for (path, role) in paths.iter().zip(&roles) {
        if *role == PathRole::Arc {
            continue;
        }
        for &w in path {
            match s.near.dist(w) {
                Some(d) if d > n && d <= 6 * n => blocked[w.idx()] = true,
                _ => {
                    return Err(Error::VerificationFailed(format!(
                        "curve vertex {w} lies outside the annulus ({n}, {}]",
                        6 * n
                    )))
                }
            }
        }
    }
    let omega = component_avoiding(g, s.v, &blocked);
    finish(s, case, paths, roles, omega, diagnostics)
}
