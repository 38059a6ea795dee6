//! Planar graphs given by a rotation system.
//!
//! Every undirected edge `{u, w}` is stored as two darts `u -> w` and
//! `w -> u`. The darts leaving a vertex are stored contiguously in
//! counterclockwise order, so `rot_next` is a cyclic step inside that block.
//! Faces are the orbits of `succ(d) = rot_next(twin(d))`; with
//! counterclockwise rotations this keeps the face on the right, so bounded
//! faces are traced clockwise and the outer face counterclockwise.
//!
//! A finite host stands in for an infinite plane graph. The *horizon* is the
//! set of vertices where the host is truncated: outer-face vertices that are
//! not cut vertices. On lattice patches this is the whole border, on trees it
//! is the set of leaves.

mod bfs;
mod contour;
mod walk;

pub use bfs::{
    ball, bfs_distances, boundary, component_avoiding, geodesic, sphere, BoundedBfs,
    DistanceField, Tiebreak,
};
pub use contour::{contour, ContourParametrization};
pub use walk::Walk;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DartId(pub u32);

impl DartId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceId(pub u32);

impl FaceId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Immutable plane graph: rotation system plus a designated outer face.
#[derive(Clone, Debug)]
pub struct PlanarEmbeddedGraph {
    /// Darts of vertex `v` are `offsets[v]..offsets[v + 1]`.
    offsets: Vec<u32>,
    origins: Vec<VertexId>,
    heads: Vec<VertexId>,
    twins: Vec<DartId>,
    face_of: Vec<FaceId>,
    face_offsets: Vec<u32>,
    face_darts: Vec<DartId>,
    outer_dart: DartId,
    outer_face: FaceId,
    horizon: Vec<bool>,
    coords: Option<Vec<[f64; 2]>>,
}

impl PlanarEmbeddedGraph {
    /// Builds a graph from counterclockwise neighbor lists.
    ///
    /// `rotations[v]` lists the neighbors of vertex `v`. The designated outer
    /// face is the face containing the dart `outer_dart.0 -> outer_dart.1`.
    /// Fails unless the rotations describe a simple connected graph whose
    /// face count satisfies Euler's formula for the sphere.
    pub fn from_rotations(rotations: Vec<Vec<u32>>, outer_dart: (u32, u32)) -> Result<Self> {
        let mut g = Self::build(rotations)?;
        let d = g
            .dart(VertexId(outer_dart.0), VertexId(outer_dart.1))
            .ok_or_else(|| Error::InvalidGraph {
                at: "outer_face_dart".into(),
                msg: format!("{} -> {} is not an edge", outer_dart.0, outer_dart.1),
            })?;
        g.set_outer(d);
        Ok(g)
    }

    /// Builds a graph from a straight-line drawing. Rotations are the angular
    /// order of neighbors; the outer face is the face of largest signed area
    /// (the only face for trees).
    pub fn from_drawing(coords: Vec<[f64; 2]>, edges: &[(u32, u32)]) -> Result<Self> {
        let n = coords.len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, w) in edges {
            if u as usize >= n || w as usize >= n {
                return Err(Error::InvalidGraph {
                    at: format!("edge ({u}, {w})"),
                    msg: "endpoint out of range".into(),
                });
            }
            adj[u as usize].push(w);
            adj[w as usize].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            let [x0, y0] = coords[v];
            list.sort_by(|&a, &b| {
                let [xa, ya] = coords[a as usize];
                let [xb, yb] = coords[b as usize];
                let ta = (ya - y0).atan2(xa - x0);
                let tb = (yb - y0).atan2(xb - x0);
                ta.total_cmp(&tb).then(a.cmp(&b))
            });
        }
        let mut g = Self::build(adj)?;
        let mut best: Option<(f64, FaceId)> = None;
        for f in 0..g.num_faces() {
            let f = FaceId(f as u32);
            let mut area = 0.0;
            for &d in g.face_darts(f) {
                let [xo, yo] = coords[g.origin(d).idx()];
                let [xh, yh] = coords[g.head(d).idx()];
                area += xo * yh - xh * yo;
            }
            if best.is_none_or(|(a, _)| area > a + 1e-9) {
                best = Some((area, f));
            }
        }
        let outer = best.expect("connected graph with an edge has a face").1;
        let d = g.face_darts(outer)[0];
        g.set_outer(d);
        g.coords = Some(coords);
        Ok(g)
    }

    fn build(rotations: Vec<Vec<u32>>) -> Result<Self> {
        let n = rotations.len();
        if n < 2 {
            return Err(Error::InvalidGraph {
                at: "vertices".into(),
                msg: "need at least two vertices".into(),
            });
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut origins = Vec::new();
        let mut heads = Vec::new();
        offsets.push(0u32);
        for (v, list) in rotations.iter().enumerate() {
            for (i, &w) in list.iter().enumerate() {
                let at = || format!("rotations.{v}[{i}]");
                if w as usize >= n {
                    return Err(Error::InvalidGraph {
                        at: at(),
                        msg: format!("unknown neighbor {w}"),
                    });
                }
                if w as usize == v {
                    return Err(Error::InvalidGraph {
                        at: at(),
                        msg: "self loop".into(),
                    });
                }
                if list[..i].contains(&w) {
                    return Err(Error::InvalidGraph {
                        at: at(),
                        msg: format!("duplicate neighbor {w}"),
                    });
                }
                origins.push(VertexId(v as u32));
                heads.push(VertexId(w));
            }
            offsets.push(origins.len() as u32);
        }
        if origins.is_empty() {
            return Err(Error::InvalidGraph {
                at: "rotations".into(),
                msg: "graph has no edges".into(),
            });
        }
        let mut twins = Vec::with_capacity(origins.len());
        for d in 0..origins.len() {
            let (v, w) = (origins[d], heads[d]);
            let range = offsets[w.idx()] as usize..offsets[w.idx() + 1] as usize;
            match range.clone().find(|&e| heads[e] == v) {
                Some(e) => twins.push(DartId(e as u32)),
                None => {
                    return Err(Error::InvalidGraph {
                        at: format!("rotations.{}", w.0),
                        msg: format!("missing neighbor {} (edge {} -> {} is one-sided)", v.0, v.0, w.0),
                    })
                }
            }
        }

        let mut g = PlanarEmbeddedGraph {
            offsets,
            origins,
            heads,
            twins,
            face_of: Vec::new(),
            face_offsets: Vec::new(),
            face_darts: Vec::new(),
            outer_dart: DartId(0),
            outer_face: FaceId(0),
            horizon: Vec::new(),
            coords: None,
        };

        let comps = g.count_components();
        if comps != 1 {
            return Err(Error::InvalidGraph {
                at: "rotations".into(),
                msg: format!("graph is disconnected ({comps} components)"),
            });
        }

        g.trace_faces();
        let (v, e, f) = (n as i64, g.num_edges() as i64, g.num_faces() as i64);
        if v - e + f != 2 {
            return Err(Error::InvalidGraph {
                at: "rotations".into(),
                msg: format!("Euler check failed: V - E + F = {v} - {e} + {f} = {} != 2", v - e + f),
            });
        }
        Ok(g)
    }

    fn count_components(&self) -> usize {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut comps = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for w in self.neighbors(VertexId(u as u32)) {
                    if !seen[w.idx()] {
                        seen[w.idx()] = true;
                        stack.push(w.idx());
                    }
                }
            }
        }
        comps
    }

    fn trace_faces(&mut self) {
        let m = self.origins.len();
        let mut face_of = vec![FaceId(u32::MAX); m];
        let mut face_offsets = vec![0u32];
        let mut face_darts = Vec::with_capacity(m);
        for start in 0..m {
            if face_of[start].0 != u32::MAX {
                continue;
            }
            let f = FaceId(face_offsets.len() as u32 - 1);
            let mut d = DartId(start as u32);
            loop {
                face_of[d.idx()] = f;
                face_darts.push(d);
                d = self.succ(d);
                if d.idx() == start {
                    break;
                }
            }
            face_offsets.push(face_darts.len() as u32);
        }
        self.face_of = face_of;
        self.face_offsets = face_offsets;
        self.face_darts = face_darts;
    }

    fn set_outer(&mut self, d: DartId) {
        self.outer_dart = d;
        self.outer_face = self.face_of[d.idx()];
        self.horizon = self.compute_horizon();
    }

    /// Outer-face vertices that are not articulation points.
    fn compute_horizon(&self) -> Vec<bool> {
        let cut = self.articulation_points();
        let mut h = vec![false; self.num_vertices()];
        for &d in self.face_darts(self.outer_face) {
            let o = self.origin(d);
            if !cut[o.idx()] {
                h[o.idx()] = true;
            }
        }
        h
    }

    fn articulation_points(&self) -> Vec<bool> {
        let n = self.num_vertices();
        let mut disc = vec![u32::MAX; n];
        let mut low = vec![0u32; n];
        let mut cut = vec![false; n];
        let mut timer = 0u32;
        // (vertex, parent dart twin to skip, next dart cursor)
        let mut stack: Vec<(u32, u32, u32)> = Vec::new();
        let root = 0u32;
        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        stack.push((root, u32::MAX, self.offsets[0]));
        let mut root_children = 0;
        while let Some(&mut (u, parent_dart, ref mut cursor)) = stack.last_mut() {
            let end = self.offsets[u as usize + 1];
            if *cursor < end {
                let d = *cursor;
                *cursor += 1;
                if self.twins[d as usize].0 == parent_dart {
                    continue;
                }
                let w = self.heads[d as usize].0;
                if disc[w as usize] == u32::MAX {
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, d, self.offsets[w as usize]));
                } else {
                    low[u as usize] = low[u as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if p != root && low[u as usize] >= disc[p as usize] {
                        cut[p as usize] = true;
                    }
                }
            }
        }
        cut[root as usize] = root_children > 1;
        cut
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_darts(&self) -> usize {
        self.origins.len()
    }

    pub fn num_edges(&self) -> usize {
        self.origins.len() / 2
    }

    pub fn num_faces(&self) -> usize {
        self.face_offsets.len() - 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.num_vertices() as u32).map(VertexId)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.idx() < self.num_vertices()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        (self.offsets[v.idx() + 1] - self.offsets[v.idx()]) as usize
    }

    /// Darts leaving `v`, in counterclockwise order.
    pub fn darts_from(&self, v: VertexId) -> impl Iterator<Item = DartId> {
        (self.offsets[v.idx()]..self.offsets[v.idx() + 1]).map(DartId)
    }

    /// Neighbors of `v`, in counterclockwise order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.darts_from(v).map(|d| self.heads[d.idx()])
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        self.origins[d.idx()]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        self.heads[d.idx()]
    }

    #[inline]
    pub fn twin(&self, d: DartId) -> DartId {
        self.twins[d.idx()]
    }

    #[inline]
    pub fn rot_next(&self, d: DartId) -> DartId {
        let v = self.origins[d.idx()].idx();
        if d.0 + 1 == self.offsets[v + 1] {
            DartId(self.offsets[v])
        } else {
            DartId(d.0 + 1)
        }
    }

    #[inline]
    pub fn rot_prev(&self, d: DartId) -> DartId {
        let v = self.origins[d.idx()].idx();
        if d.0 == self.offsets[v] {
            DartId(self.offsets[v + 1] - 1)
        } else {
            DartId(d.0 - 1)
        }
    }

    /// Next dart along the face of `d`.
    #[inline]
    pub fn succ(&self, d: DartId) -> DartId {
        self.rot_next(self.twin(d))
    }

    /// Canonical key of the undirected edge carrying `d`.
    #[inline]
    pub fn edge_key(&self, d: DartId) -> DartId {
        d.min(self.twin(d))
    }

    /// The dart `u -> w`, if that edge exists.
    pub fn dart(&self, u: VertexId, w: VertexId) -> Option<DartId> {
        if !self.contains(u) {
            return None;
        }
        self.darts_from(u).find(|&d| self.heads[d.idx()] == w)
    }

    #[inline]
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d.idx()]
    }

    pub fn face_darts(&self, f: FaceId) -> &[DartId] {
        &self.face_darts[self.face_offsets[f.idx()] as usize..self.face_offsets[f.idx() + 1] as usize]
    }

    /// All face orbits, in order of their lowest dart.
    pub fn faces(&self) -> Vec<&[DartId]> {
        (0..self.num_faces() as u32).map(|f| self.face_darts(FaceId(f))).collect()
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    pub fn outer_dart(&self) -> DartId {
        self.outer_dart
    }

    /// Vertices on the boundary walk of the outer face.
    pub fn outer_face_vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self
            .face_darts(self.outer_face)
            .iter()
            .map(|&d| self.origin(d))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    #[inline]
    pub fn is_horizon(&self, v: VertexId) -> bool {
        self.horizon[v.idx()]
    }

    pub fn horizon_vertices(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.horizon[v.idx()]).collect()
    }

    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    pub fn with_coords(mut self, coords: Vec<[f64; 2]>) -> Result<Self> {
        if coords.len() != self.num_vertices() {
            return Err(Error::InvalidGraph {
                at: "coords".into(),
                msg: format!("{} coordinates for {} vertices", coords.len(), self.num_vertices()),
            });
        }
        self.coords = Some(coords);
        Ok(self)
    }

    /// Counterclockwise neighbor lists, as accepted by [`Self::from_rotations`].
    pub fn rotations(&self) -> Vec<Vec<u32>> {
        self.vertices()
            .map(|v| self.neighbors(v).map(|w| w.0).collect())
            .collect()
    }

    /// Undirected edges as `(u, w)` with `u < w`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut es: Vec<_> = (0..self.num_darts() as u32)
            .map(DartId)
            .filter(|&d| self.origin(d) < self.head(d))
            .map(|d| (self.origin(d), self.head(d)))
            .collect();
        es.sort_unstable();
        es
    }

    /// The vertex farthest from the horizon (smallest id on ties).
    pub fn deepest_vertex(&self) -> VertexId {
        let sources = self.horizon_vertices();
        if sources.is_empty() {
            return VertexId(0);
        }
        let mut bfs = BoundedBfs::new(self.num_vertices());
        bfs.run(self, &sources, u32::MAX, None);
        let mut best = VertexId(0);
        let mut best_d = 0;
        for v in self.vertices() {
            let d = bfs.dist(v).unwrap_or(0);
            if d > best_d {
                best_d = d;
                best = v;
            }
        }
        best
    }
}
