use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{BoundedBfs, ContourParametrization, PlanarEmbeddedGraph, Tiebreak, VertexId, Walk};
use crate::winding::RayIndex;

/// Prefix counts along a contour walk, for O(1) queries on cyclic arcs.
pub(crate) struct ArcIndex {
    len: usize,
    crossings: Vec<u32>,
    passages: Vec<u32>,
    canonical: Vec<u32>,
}

impl ArcIndex {
    pub(crate) fn new(g: &PlanarEmbeddedGraph, contour: &ContourParametrization, ray: &RayIndex) -> Self {
        let len = contour.len();
        let mut crossings = vec![0u32; len + 1];
        let mut passages = vec![0u32; len + 1];
        let mut canonical = vec![0u32; len + 1];
        for i in 0..len {
            let d = contour.dart_at(i);
            crossings[i + 1] = crossings[i] + ray.crosses(g, d) as u32;
            let here = contour.vertex_at(i);
            let pass = here == ray.anchor() && ray.passage(g, contour.dart_at(i + len - 1), d);
            passages[i + 1] = passages[i] + pass as u32;
            let canon = contour.canonical_position(here) == Some(i);
            canonical[i + 1] = canonical[i] + canon as u32;
        }
        ArcIndex {
            len,
            crossings,
            passages,
            canonical,
        }
    }

    /// Sum of per-position counts over positions `start .. start + count`.
    fn range(&self, prefix: &[u32], start: usize, count: usize) -> u32 {
        debug_assert!(count <= self.len);
        let s = start % self.len;
        let e = s + count;
        if e <= self.len {
            prefix[e] - prefix[s]
        } else {
            (prefix[self.len] - prefix[s]) + prefix[e - self.len]
        }
    }

    /// Crossings of the darts plus passages at interior positions of the arc
    /// leaving position `start` along `darts` darts.
    pub(crate) fn arc_count(&self, start: usize, darts: usize) -> u32 {
        let interior = if darts == 0 {
            0
        } else {
            self.range(&self.passages, start + 1, darts - 1)
        };
        self.range(&self.crossings, start, darts) + interior
    }

    /// Canonical distance-r positions on the arc, endpoints included.
    pub(crate) fn arc_weight(&self, start: usize, darts: usize) -> usize {
        self.range(&self.canonical, start, (darts + 1).min(self.len)) as usize
    }
}

/// The chosen pair `a, b` with its geodesic and the contour arc `S1` that
/// closes with the geodesic to a curve of odd winding around the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePair {
    /// Vertex at the start of the arc.
    pub a: VertexId,
    /// Vertex at the end of the arc.
    pub b: VertexId,
    /// Canonical geodesic from `a` to `b`.
    pub gamma: Vec<VertexId>,
    /// Walk position where the arc starts.
    pub arc_start: usize,
    /// Number of darts on the arc.
    pub arc_len: usize,
    /// Canonical distance-r occurrences on the arc.
    pub weight: usize,
}

pub(crate) fn geodesic_within(
    g: &PlanarEmbeddedGraph,
    a: VertexId,
    b: VertexId,
    radius: u32,
    tiebreak: Tiebreak,
    bfs: &mut BoundedBfs,
) -> Option<Vec<VertexId>> {
    let root = tiebreak.root(a, b);
    let other = if root == a { b } else { a };
    bfs.run(g, &[root], radius, None);
    let mut path = bfs.path_to(g, other, tiebreak)?;
    if path[0] != a {
        path.reverse();
    }
    Some(path)
}

/// Minimum-weight admissible pair on the contour of `B(v, 4n)`.
///
/// Every unordered pair of canonical distance-`4n` contour vertices at
/// distance at most `2n + 1` is a candidate; its canonical geodesic splits
/// the contour into two arcs, exactly one of which closes with the geodesic
/// to odd winding parity. The candidate minimizing that arc's weight wins,
/// ties broken by the sorted pair ids. `None` when no pair is close enough.
pub fn choose_base_pair(
    g: &PlanarEmbeddedGraph,
    contour: &ContourParametrization,
    n: u32,
    ray: &RayIndex,
    tiebreak: Tiebreak,
) -> Result<Option<BasePair>> {
    let index = ArcIndex::new(g, contour, ray);
    choose_with_index(g, contour, n, ray, tiebreak, &index)
}

pub(crate) fn choose_with_index(
    g: &PlanarEmbeddedGraph,
    contour: &ContourParametrization,
    n: u32,
    ray: &RayIndex,
    tiebreak: Tiebreak,
    index: &ArcIndex,
) -> Result<Option<BasePair>> {
    let len = contour.len();
    let reach = 2 * n + 1;
    let position: HashMap<VertexId, usize> = contour.canonical().iter().map(|(&v, &p)| (v, p)).collect();
    let mut bfs = BoundedBfs::new(g.num_vertices());
    let mut best: Option<((usize, VertexId, VertexId), BasePair)> = None;

    for (&root, &root_pos) in contour.canonical() {
        bfs.run(g, &[root], reach, None);
        let mut partners: Vec<VertexId> = bfs
            .touched()
            .iter()
            .copied()
            .filter(|&w| w != root && position.contains_key(&w) && tiebreak.root(root, w) == root)
            .collect();
        partners.sort_unstable();
        for other in partners {
            let path = bfs.path_to(g, other, tiebreak).expect("partner reached");
            if path.contains(&ray.anchor()) {
                continue;
            }
            let walk = Walk::from_vertices(g, &path)?;
            let gamma_cross = walk.darts.iter().filter(|&&d| ray.crosses(g, d)).count() as u32;
            let other_pos = position[&other];
            let len1 = (other_pos + len - root_pos) % len;
            let p1 = (index.arc_count(root_pos, len1) + gamma_cross) % 2 == 1;
            let p2 = (index.arc_count(other_pos, len - len1) + gamma_cross) % 2 == 1;
            if p1 == p2 {
                return Err(Error::VerificationFailed(format!(
                    "split at {root}, {other} gives equal parities; contour parity is not 1"
                )));
            }
            let (start, darts, a, b, gamma) = if p1 {
                (root_pos, len1, root, other, path)
            } else {
                let mut rev = path;
                rev.reverse();
                (other_pos, len - len1, other, root, rev)
            };
            let weight = index.arc_weight(start, darts);
            let key = (weight, root.min(other), root.max(other));
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((
                    key,
                    BasePair {
                        a,
                        b,
                        gamma,
                        arc_start: start,
                        arc_len: darts,
                        weight,
                    },
                ));
            }
        }
    }
    Ok(best.map(|(_, bp)| bp))
}
