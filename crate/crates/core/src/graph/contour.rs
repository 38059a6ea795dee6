use std::collections::BTreeMap;

use super::{BoundedBfs, DartId, PlanarEmbeddedGraph, VertexId, Walk};
use crate::error::{Error, Result};

/// The boundary walk of the unbounded complement component of a ball, with
/// one chosen position for every walk vertex at distance exactly `radius`.
#[derive(Clone, Debug)]
pub struct ContourParametrization {
    pub center: VertexId,
    pub radius: u32,
    pub walk: Walk,
    /// Walk vertex at each position `0..walk.len()`.
    positions: Vec<VertexId>,
    /// Distance from the center at each position.
    depth: Vec<u32>,
    canonical: BTreeMap<VertexId, usize>,
}

impl ContourParametrization {
    /// Number of darts (and positions) on the closed walk.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Vertex at position `i` (taken modulo the walk length).
    pub fn vertex_at(&self, i: usize) -> VertexId {
        if self.positions.is_empty() {
            self.center
        } else {
            self.positions[i % self.positions.len()]
        }
    }

    pub fn depth_at(&self, i: usize) -> u32 {
        if self.depth.is_empty() {
            0
        } else {
            self.depth[i % self.depth.len()]
        }
    }

    pub fn dart_at(&self, i: usize) -> DartId {
        self.walk.darts[i % self.walk.darts.len()]
    }

    /// Canonical position of a distance-`radius` contour vertex.
    pub fn canonical_position(&self, v: VertexId) -> Option<usize> {
        self.canonical.get(&v).copied()
    }

    pub fn canonical(&self) -> &BTreeMap<VertexId, usize> {
        &self.canonical
    }

    /// Contour vertices at distance exactly `radius`, sorted by id.
    pub fn sphere_vertices(&self) -> Vec<VertexId> {
        self.canonical.keys().copied().collect()
    }

    /// Distinct vertices on the walk, sorted by id.
    pub fn support(&self) -> Vec<VertexId> {
        let mut s = if self.positions.is_empty() {
            vec![self.center]
        } else {
            self.positions.clone()
        };
        s.sort_unstable();
        s.dedup();
        s
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
        }
    }
}

/// Contour of `B(v, r)`.
///
/// Faces of the host are merged whenever they share an edge or a vertex
/// outside the ball; the merged class of the outer face is the unbounded
/// complement component `U`. The returned walk traces the face of the ball
/// (with rotations restricted to ball vertices) that contains `U`, starting
/// from the lowest such dart. Requires `B(v, r)` to avoid the horizon.
pub fn contour(g: &PlanarEmbeddedGraph, v: VertexId, r: u32) -> Result<ContourParametrization> {
    g.check_vertex(v)?;
    let n = g.num_vertices();
    let mut bfs = BoundedBfs::new(n);
    bfs.run(g, &[v], r, None);
    let mut in_ball = vec![false; n];
    for &w in bfs.touched() {
        if g.is_horizon(w) {
            return Err(Error::Horizon {
                what: "contour ball must avoid the horizon",
                center: v,
                radius: r,
                hit: w,
            });
        }
        in_ball[w.idx()] = true;
    }
    if r == 0 {
        return Ok(ContourParametrization {
            center: v,
            radius: 0,
            walk: Walk::empty(v),
            positions: Vec::new(),
            depth: Vec::new(),
            canonical: BTreeMap::from([(v, 0)]),
        });
    }

    let mut uf = UnionFind::new(g.num_faces());
    for d in 0..g.num_darts() as u32 {
        let d = DartId(d);
        let (o, h) = (g.origin(d), g.head(d));
        if !(in_ball[o.idx()] && in_ball[h.idx()]) {
            uf.union(g.face_of(d).0, g.face_of(g.twin(d)).0);
        }
        if !in_ball[o.idx()] {
            // every corner at `o` lies in the face of the dart leaving it
            uf.union(g.face_of(d).0, g.face_of(g.darts_from(o).next().unwrap()).0);
        }
    }
    let outer = uf.find(g.outer_face().0);

    let is_ball_dart = |d: DartId| in_ball[g.origin(d).idx()] && in_ball[g.head(d).idx()];
    let mut base = None;
    let mut u_darts = 0usize;
    for d in 0..g.num_darts() as u32 {
        let d = DartId(d);
        if is_ball_dart(d) && uf.find(g.face_of(d).0) == outer {
            base.get_or_insert(d);
            u_darts += 1;
        }
    }
    let base = base.ok_or_else(|| Error::InvalidGraph {
        at: "contour".into(),
        msg: "no ball dart borders the unbounded component".into(),
    })?;

    let rot_next_ball = |d: DartId| {
        let mut e = g.rot_next(d);
        while !in_ball[g.head(e).idx()] {
            e = g.rot_next(e);
        }
        e
    };
    let mut darts = Vec::new();
    let mut d = base;
    loop {
        darts.push(d);
        d = rot_next_ball(g.twin(d));
        if d == base {
            break;
        }
    }
    debug_assert_eq!(darts.len(), u_darts, "ball darts on U form a single face walk");

    let positions: Vec<VertexId> = darts.iter().map(|&d| g.origin(d)).collect();
    let depth: Vec<u32> = positions.iter().map(|&w| bfs.dist(w).unwrap()).collect();
    let mut canonical = BTreeMap::new();
    for (i, (&w, &dw)) in positions.iter().zip(&depth).enumerate() {
        if dw == r {
            canonical.entry(w).or_insert(i);
        }
    }
    Ok(ContourParametrization {
        center: v,
        radius: r,
        walk: Walk {
            start: g.origin(base),
            darts,
        },
        positions,
        depth,
        canonical,
    })
}
