//! Walk helpers shared by the winding tests and the acceptance run.
#![allow(dead_code)]

use std::collections::VecDeque;

use rand::Rng;

use planar_profile::graph::Walk;
use planar_profile::{PlanarEmbeddedGraph, VertexId};

/// Shortest path `a -> b` that never visits `avoid`.
pub fn path_avoiding(g: &PlanarEmbeddedGraph, a: VertexId, b: VertexId, avoid: VertexId) -> Vec<VertexId> {
    let mut prev = vec![u32::MAX; g.num_vertices()];
    prev[a.idx()] = a.0;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for w in g.neighbors(u) {
            if w != avoid && prev[w.idx()] == u32::MAX {
                prev[w.idx()] = u.0;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = VertexId(prev[cur.idx()]);
        path.push(cur);
    }
    path.reverse();
    path
}

/// Random walk of `steps` steps from `start` that never steps on `avoid`.
pub fn wander<R: Rng>(g: &PlanarEmbeddedGraph, start: VertexId, steps: usize, avoid: Option<VertexId>, rng: &mut R) -> Vec<VertexId> {
    let mut out = vec![start];
    for _ in 0..steps {
        let at = *out.last().unwrap();
        let options: Vec<VertexId> = g.neighbors(at).filter(|&w| Some(w) != avoid).collect();
        out.push(options[rng.gen_range(0..options.len())]);
    }
    out
}

/// Random closed walk; when `avoid` is set, the walk never visits it.
pub fn closed_walk<R: Rng>(g: &PlanarEmbeddedGraph, avoid: Option<VertexId>, rng: &mut R) -> Walk {
    let n = g.num_vertices() as u32;
    let start = loop {
        let s = VertexId(rng.gen_range(0..n));
        if Some(s) != avoid {
            break s;
        }
    };
    let steps = rng.gen_range(1..120);
    let mut vs = wander(g, start, steps, avoid, rng);
    let back = match avoid {
        Some(x) => path_avoiding(g, *vs.last().unwrap(), start, x),
        None => path_avoiding(g, *vs.last().unwrap(), start, VertexId(u32::MAX)),
    };
    vs.extend_from_slice(&back[1..]);
    if vs.len() == 1 {
        let w = g.neighbors(start).find(|&w| Some(w) != avoid).unwrap();
        vs.extend([w, start]);
    }
    Walk::from_vertices(g, &vs).unwrap()
}

/// Crossing parity of the drawn polygon with a ray from `p` in a fixed
/// generic direction.
pub fn geometric_parity(g: &PlanarEmbeddedGraph, w: &Walk, p: [f64; 2]) -> bool {
    let coords = g.coords().unwrap();
    let theta: f64 = 0.2871;
    let (dx, dy) = (theta.cos(), theta.sin());
    let vs = w.vertices(g);
    let mut odd = false;
    for pair in vs.windows(2) {
        let a = coords[pair[0].idx()];
        let b = coords[pair[1].idx()];
        let (ex, ey) = (b[0] - a[0], b[1] - a[1]);
        let den = dx * ey - dy * ex;
        if den.abs() < 1e-12 {
            continue;
        }
        let (wx, wy) = (a[0] - p[0], a[1] - p[1]);
        let t = (wx * ey - wy * ex) / den;
        let s = (wx * dy - wy * dx) / den;
        if t > 0.0 && (0.0..1.0).contains(&s) {
            odd = !odd;
        }
    }
    odd
}
