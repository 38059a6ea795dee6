//! Winding parity of closed walks around a vertex, computed combinatorially.
//!
//! A [`DualRay`] leaves the anchor `v` through one face corner and then
//! crosses edges through face interiors until it reaches the outer face. The
//! winding number mod 2 of a closed walk around `v` is the number of times the
//! walk traverses a crossed edge, plus one for every passage of the walk
//! through `v` whose corner span contains the ray's start corner. The second
//! term is the detour rule: a passage entering `v` on `d_in` and leaving on
//! `d_out` is pushed off `v` into the corners swept counterclockwise from
//! `twin(d_in)` to `d_out`.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{DartId, FaceId, PlanarEmbeddedGraph, VertexId, Walk};

/// A simple combinatorial curve from `anchor` to the outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualRay {
    pub anchor: VertexId,
    /// Corner between this dart and its rotation successor.
    pub start_corner: DartId,
    /// Edge keys, in crossing order.
    pub crossed_edges: Vec<DartId>,
    /// Faces visited: the start corner's face, then one per crossing.
    pub faces: Vec<FaceId>,
}

#[inline]
fn corner_face(g: &PlanarEmbeddedGraph, c: DartId) -> FaceId {
    g.face_of(g.rot_next(c))
}

/// Shortest dual ray from `v`: breadth-first over faces, seeded by the
/// corners of `v` in dart order and expanding face darts in orbit order.
pub fn dual_ray(g: &PlanarEmbeddedGraph, v: VertexId) -> Result<DualRay> {
    g.check_vertex(v)?;
    if g.is_horizon(v) {
        return Err(Error::Horizon {
            what: "ray anchor must not be a horizon vertex",
            center: v,
            radius: 0,
            hit: v,
        });
    }
    let nf = g.num_faces();
    let outer = g.outer_face();
    // parent face and crossed edge
    let mut parent: Vec<Option<(FaceId, DartId)>> = vec![None; nf];
    let mut root_corner: Vec<Option<DartId>> = vec![None; nf];
    let mut seen = vec![false; nf];
    let mut queue = VecDeque::new();
    for c in g.darts_from(v) {
        let f = corner_face(g, c);
        if !seen[f.idx()] {
            seen[f.idx()] = true;
            root_corner[f.idx()] = Some(c);
            queue.push_back(f);
        }
    }
    while let Some(f) = queue.pop_front() {
        if f == outer {
            break;
        }
        for &d in g.face_darts(f) {
            let h = g.face_of(g.twin(d));
            if !seen[h.idx()] {
                seen[h.idx()] = true;
                parent[h.idx()] = Some((f, g.edge_key(d)));
                queue.push_back(h);
            }
        }
    }
    let mut faces = vec![outer];
    let mut crossed = Vec::new();
    let mut f = outer;
    while let Some((p, e)) = parent[f.idx()] {
        crossed.push(e);
        faces.push(p);
        f = p;
    }
    faces.reverse();
    crossed.reverse();
    let start_corner = root_corner[f.idx()].expect("ray starts at a corner of v");
    Ok(DualRay {
        anchor: v,
        start_corner,
        crossed_edges: crossed,
        faces,
    })
}

/// A random simple dual ray: random start corner, random walk on the dual
/// graph until the outer face, then loop erasure. Meant for small hosts.
pub fn random_dual_ray<R: Rng>(g: &PlanarEmbeddedGraph, v: VertexId, rng: &mut R) -> Result<DualRay> {
    g.check_vertex(v)?;
    if g.is_horizon(v) {
        return Err(Error::Horizon {
            what: "ray anchor must not be a horizon vertex",
            center: v,
            radius: 0,
            hit: v,
        });
    }
    let corners: Vec<DartId> = g.darts_from(v).collect();
    let start_corner = corners[rng.gen_range(0..corners.len())];
    let outer = g.outer_face();
    let mut faces = vec![corner_face(g, start_corner)];
    let mut crossed: Vec<DartId> = Vec::new();
    let mut index: HashMap<FaceId, usize> = HashMap::from([(faces[0], 0)]);
    while *faces.last().unwrap() != outer {
        let f = *faces.last().unwrap();
        let exits: Vec<DartId> = g
            .face_darts(f)
            .iter()
            .copied()
            .filter(|&d| g.face_of(g.twin(d)) != f)
            .collect();
        let d = exits[rng.gen_range(0..exits.len())];
        let h = g.face_of(g.twin(d));
        if let Some(&i) = index.get(&h) {
            for dropped in faces.drain(i + 1..) {
                index.remove(&dropped);
            }
            crossed.truncate(i);
        } else {
            index.insert(h, faces.len());
            faces.push(h);
            crossed.push(g.edge_key(d));
        }
    }
    Ok(DualRay {
        anchor: v,
        start_corner,
        crossed_edges: crossed,
        faces,
    })
}

impl DualRay {
    /// Checks the structural invariants of a ray.
    pub fn is_valid(&self, g: &PlanarEmbeddedGraph) -> bool {
        if g.origin(self.start_corner) != self.anchor {
            return false;
        }
        if self.faces.len() != self.crossed_edges.len() + 1 {
            return false;
        }
        if self.faces[0] != corner_face(g, self.start_corner) {
            return false;
        }
        if *self.faces.last().unwrap() != g.outer_face() {
            return false;
        }
        let distinct: HashSet<_> = self.faces.iter().collect();
        if distinct.len() != self.faces.len() {
            return false;
        }
        self.crossed_edges.iter().enumerate().all(|(i, &e)| {
            let sides = [g.face_of(e), g.face_of(g.twin(e))];
            sides.contains(&self.faces[i]) && sides.contains(&self.faces[i + 1])
        })
    }

    pub fn index(&self) -> RayIndex {
        RayIndex {
            anchor: self.anchor,
            start_corner: self.start_corner,
            crossed: self.crossed_edges.iter().copied().collect(),
        }
    }
}

/// Constant-time crossing queries against a fixed ray.
#[derive(Clone, Debug)]
pub struct RayIndex {
    anchor: VertexId,
    start_corner: DartId,
    crossed: HashSet<DartId>,
}

impl RayIndex {
    pub fn anchor(&self) -> VertexId {
        self.anchor
    }

    /// Whether traversing `d` crosses the ray.
    #[inline]
    pub fn crosses(&self, g: &PlanarEmbeddedGraph, d: DartId) -> bool {
        self.crossed.contains(&g.edge_key(d))
    }

    /// Whether a passage through the anchor, entering on `d_in` and leaving
    /// on `d_out`, sweeps the start corner.
    pub fn passage(&self, g: &PlanarEmbeddedGraph, d_in: DartId, d_out: DartId) -> bool {
        debug_assert_eq!(g.head(d_in), self.anchor);
        debug_assert_eq!(g.origin(d_out), self.anchor);
        let mut c = g.twin(d_in);
        while c != d_out {
            if c == self.start_corner {
                return true;
            }
            c = g.rot_next(c);
        }
        false
    }

    /// Crossing count mod 2 of the darts alone, ignoring passages.
    pub fn dart_parity(&self, g: &PlanarEmbeddedGraph, darts: &[DartId]) -> bool {
        darts.iter().filter(|&&d| self.crosses(g, d)).count() % 2 == 1
    }

    /// Winding parity of a closed walk around the anchor.
    pub fn parity(&self, g: &PlanarEmbeddedGraph, walk: &Walk) -> Result<bool> {
        if !walk.is_valid(g) || !walk.is_closed(g) {
            return Err(Error::InvalidParams("winding parity needs a valid closed walk".into()));
        }
        let darts = &walk.darts;
        let len = darts.len();
        let mut odd = self.dart_parity(g, darts);
        for k in 0..len {
            if g.origin(darts[k]) == self.anchor {
                let d_in = darts[(k + len - 1) % len];
                if self.passage(g, d_in, darts[k]) {
                    odd = !odd;
                }
            }
        }
        Ok(odd)
    }
}

/// Winding number mod 2 of the closed walk `w` around the ray's anchor.
pub fn winding_parity(g: &PlanarEmbeddedGraph, w: &Walk, ray: &DualRay) -> Result<bool> {
    ray.index().parity(g, w)
}

/// Parities of `gamma1 ∪ delta` and `gamma2 ∪ delta`, where `gamma1` runs
/// `a -> b`, `gamma2` runs `b -> a` and `delta` runs `a -> b`.
pub fn splice_parity_check(
    g: &PlanarEmbeddedGraph,
    gamma1: &Walk,
    gamma2: &Walk,
    delta: &Walk,
    ray: &DualRay,
) -> Result<(bool, bool)> {
    let (a, b) = (gamma1.start, gamma1.end(g));
    if gamma2.start != b || gamma2.end(g) != a || delta.start != a || delta.end(g) != b {
        return Err(Error::InvalidParams(format!(
            "splice endpoints do not match: gamma1 {}->{}, gamma2 {}->{}, delta {}->{}",
            a,
            b,
            gamma2.start,
            gamma2.end(g),
            delta.start,
            delta.end(g)
        )));
    }
    let idx = ray.index();
    let mut first = gamma1.clone();
    first.extend(g, &delta.reversed(g))?;
    let mut second = delta.clone();
    second.extend(g, gamma2)?;
    Ok((idx.parity(g, &first)?, idx.parity(g, &second)?))
}
