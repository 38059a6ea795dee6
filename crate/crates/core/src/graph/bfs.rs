use std::collections::VecDeque;

use super::{PlanarEmbeddedGraph, VertexId};
use crate::error::{Error, Result};

const UNSEEN: u32 = u32::MAX;

/// Hop distances from a single center to every vertex.
#[derive(Clone, Debug)]
pub struct DistanceField {
    pub center: VertexId,
    dist: Vec<u32>,
}

impl DistanceField {
    /// Distance to `u`, `None` when unreachable.
    pub fn get(&self, u: VertexId) -> Option<u32> {
        match self.dist[u.idx()] {
            UNSEEN => None,
            d => Some(d),
        }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.dist
    }

    pub fn max(&self) -> u32 {
        self.dist.iter().copied().filter(|&d| d != UNSEEN).max().unwrap_or(0)
    }
}

pub fn bfs_distances(g: &PlanarEmbeddedGraph, v: VertexId) -> Result<DistanceField> {
    g.check_vertex(v)?;
    let mut dist = vec![UNSEEN; g.num_vertices()];
    let mut queue = VecDeque::new();
    dist[v.idx()] = 0;
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        let du = dist[u.idx()];
        for w in g.neighbors(u) {
            if dist[w.idx()] == UNSEEN {
                dist[w.idx()] = du + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(DistanceField { center: v, dist })
}

/// Reusable breadth-first search limited to a radius. Only the vertices
/// touched by the last run are reset, so repeated small searches on a large
/// host stay cheap.
#[derive(Clone, Debug)]
pub struct BoundedBfs {
    dist: Vec<u32>,
    touched: Vec<VertexId>,
    queue: VecDeque<VertexId>,
}

impl BoundedBfs {
    pub fn new(n: usize) -> Self {
        BoundedBfs {
            dist: vec![UNSEEN; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        for v in self.touched.drain(..) {
            self.dist[v.idx()] = UNSEEN;
        }
        self.queue.clear();
    }

    /// Multi-source search up to `radius`, never entering `blocked` vertices.
    /// Returns the visited vertices in visit order.
    pub fn run(
        &mut self,
        g: &PlanarEmbeddedGraph,
        sources: &[VertexId],
        radius: u32,
        blocked: Option<&[bool]>,
    ) -> &[VertexId] {
        self.reset();
        for &s in sources {
            if self.dist[s.idx()] == UNSEEN && !blocked.is_some_and(|b| b[s.idx()]) {
                self.dist[s.idx()] = 0;
                self.touched.push(s);
                self.queue.push_back(s);
            }
        }
        while let Some(u) = self.queue.pop_front() {
            let du = self.dist[u.idx()];
            if du >= radius {
                continue;
            }
            for w in g.neighbors(u) {
                if self.dist[w.idx()] == UNSEEN && !blocked.is_some_and(|b| b[w.idx()]) {
                    self.dist[w.idx()] = du + 1;
                    self.touched.push(w);
                    self.queue.push_back(w);
                }
            }
        }
        &self.touched
    }

    #[inline]
    pub fn dist(&self, v: VertexId) -> Option<u32> {
        match self.dist[v.idx()] {
            UNSEEN => None,
            d => Some(d),
        }
    }

    pub fn touched(&self) -> &[VertexId] {
        &self.touched
    }

    /// Shortest path from a source of the last run to `target`, built by
    /// walking back through the preferred predecessor at each layer.
    pub fn path_to(
        &self,
        g: &PlanarEmbeddedGraph,
        target: VertexId,
        tiebreak: Tiebreak,
    ) -> Option<Vec<VertexId>> {
        let mut d = self.dist(target)?;
        let mut path = vec![target];
        let mut cur = target;
        while d > 0 {
            let pred = g
                .neighbors(cur)
                .filter(|&w| self.dist(w) == Some(d - 1))
                .reduce(|a, b| tiebreak.pick(a, b))
                .expect("BFS layer has a predecessor");
            path.push(pred);
            cur = pred;
            d -= 1;
        }
        path.reverse();
        Some(path)
    }
}

/// Deterministic tie-breaking rule for geodesics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    #[default]
    SmallestId,
    LargestId,
}

impl Tiebreak {
    #[inline]
    pub fn pick(self, a: VertexId, b: VertexId) -> VertexId {
        match self {
            Tiebreak::SmallestId => a.min(b),
            Tiebreak::LargestId => a.max(b),
        }
    }

    /// The endpoint a canonical geodesic is rooted at.
    #[inline]
    pub fn root(self, a: VertexId, b: VertexId) -> VertexId {
        self.pick(a, b)
    }
}

/// Canonical geodesic from `a` to `b`.
///
/// The search is rooted at the preferred endpoint of the unordered pair, and
/// each step back from the other endpoint takes the preferred predecessor, so
/// `geodesic(a, b)` is exactly the reverse of `geodesic(b, a)`.
pub fn geodesic(
    g: &PlanarEmbeddedGraph,
    a: VertexId,
    b: VertexId,
    tiebreak: Tiebreak,
) -> Result<Vec<VertexId>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let root = tiebreak.root(a, b);
    let other = if root == a { b } else { a };
    let mut bfs = BoundedBfs::new(g.num_vertices());
    bfs.run(g, &[root], u32::MAX, None);
    let mut path = bfs
        .path_to(g, other, tiebreak)
        .ok_or(Error::Disconnected(a, b))?;
    if path[0] != a {
        path.reverse();
    }
    Ok(path)
}

/// `B(v, r)`, sorted by id.
pub fn ball(g: &PlanarEmbeddedGraph, v: VertexId, r: u32) -> Result<Vec<VertexId>> {
    g.check_vertex(v)?;
    let mut bfs = BoundedBfs::new(g.num_vertices());
    let mut out = bfs.run(g, &[v], r, None).to_vec();
    out.sort_unstable();
    Ok(out)
}

/// `{w : d(v, w) = r}`, sorted by id.
pub fn sphere(g: &PlanarEmbeddedGraph, v: VertexId, r: u32) -> Result<Vec<VertexId>> {
    g.check_vertex(v)?;
    let mut bfs = BoundedBfs::new(g.num_vertices());
    bfs.run(g, &[v], r, None);
    let mut out: Vec<_> = bfs
        .touched()
        .iter()
        .copied()
        .filter(|&w| bfs.dist(w) == Some(r))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// External vertex boundary: vertices outside `omega` with a neighbor inside.
pub fn boundary(g: &PlanarEmbeddedGraph, omega: &[VertexId]) -> Result<Vec<VertexId>> {
    let mut inside = vec![false; g.num_vertices()];
    for &v in omega {
        g.check_vertex(v)?;
        inside[v.idx()] = true;
    }
    let mut mark = vec![false; g.num_vertices()];
    let mut out = Vec::new();
    for &v in omega {
        for w in g.neighbors(v) {
            if !inside[w.idx()] && !mark[w.idx()] {
                mark[w.idx()] = true;
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Connected component of `start` in the graph with `blocked` removed,
/// sorted by id. Empty when `start` itself is blocked.
pub fn component_avoiding(
    g: &PlanarEmbeddedGraph,
    start: VertexId,
    blocked: &[bool],
) -> Vec<VertexId> {
    let mut bfs = BoundedBfs::new(g.num_vertices());
    let mut out = bfs.run(g, &[start], u32::MAX, Some(blocked)).to_vec();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::grid;

    #[test]
    fn grid_distances() {
        let g = grid(5, 5).unwrap();
        let c = VertexId(12);
        let df = bfs_distances(&g, c).unwrap();
        assert_eq!(df.get(c), Some(0));
        assert_eq!(df.get(VertexId(13)), Some(1));
        // (2,2) -> (4,4) is offset (2,2); (0,0) offset (-2,-2)
        assert_eq!(df.get(VertexId(0)), Some(4));
    }

    #[test]
    fn unknown_vertex_is_an_error() {
        let g = grid(3, 3).unwrap();
        assert!(matches!(bfs_distances(&g, VertexId(9)), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn ball_and_sphere_sizes() {
        let g = grid(11, 11).unwrap();
        let c = VertexId(60);
        assert_eq!(ball(&g, c, 0).unwrap(), vec![c]);
        assert_eq!(ball(&g, c, 1).unwrap().len(), 5);
        assert_eq!(sphere(&g, c, 1).unwrap().len(), 4);
    }

    #[test]
    fn boundary_cases() {
        let g = grid(11, 11).unwrap();
        let c = VertexId(60);
        assert_eq!(boundary(&g, &[c]).unwrap().len(), 4);
        let all: Vec<_> = g.vertices().collect();
        assert!(boundary(&g, &all).unwrap().is_empty());
        let b2 = ball(&g, c, 2).unwrap();
        assert_eq!(boundary(&g, &b2).unwrap(), sphere(&g, c, 3).unwrap());
    }

    #[test]
    fn geodesic_is_symmetric_and_stable() {
        let g = grid(6, 6).unwrap();
        let (a, b) = (VertexId(0), VertexId(3 * 6 + 2));
        let p = geodesic(&g, a, b, Tiebreak::SmallestId).unwrap();
        assert_eq!(p.len(), 6);
        let mut q = geodesic(&g, b, a, Tiebreak::SmallestId).unwrap();
        q.reverse();
        assert_eq!(p, q);
        assert_eq!(p, geodesic(&g, a, b, Tiebreak::SmallestId).unwrap());
        assert_eq!(geodesic(&g, a, a, Tiebreak::SmallestId).unwrap(), vec![a]);
    }
}
