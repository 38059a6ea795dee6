use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BoundedBfs, PlanarEmbeddedGraph, VertexId};

const INF: u32 = u32::MAX / 2;

struct Dinic {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic {
            head: vec![NIL; nodes],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add_edge(&mut self, u: usize, w: usize, c: u32) {
        for (a, b, c) in [(u, w, c), (w, u, 0)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(u32::MAX);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let w = self.to[e];
                if self.cap[e] > 0 && self.level[w] == u32::MAX {
                    self.level[w] = self.level[u] + 1;
                    q.push_back(w);
                }
                e = self.next[e];
            }
        }
        self.level[t] != u32::MAX
    }

    // Iterative blocking-flow search; pushes one unit path at a time,
    // which is enough since every path is limited by a unit vertex.
    fn augment(&mut self, s: usize, t: usize) -> u32 {
        let mut stack: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let push = stack.iter().map(|&e| self.cap[e]).min().unwrap_or(0);
                for &e in &stack {
                    self.cap[e] -= push;
                    self.cap[e ^ 1] += push;
                }
                return push;
            }
            let mut advanced = false;
            while self.iter[u] != NIL {
                let e = self.iter[u];
                let w = self.to[e];
                if self.cap[e] > 0 && self.level[w] == self.level[u] + 1 {
                    stack.push(e);
                    u = w;
                    advanced = true;
                    break;
                }
                self.iter[u] = self.next[e];
            }
            if !advanced {
                self.level[u] = u32::MAX;
                match stack.pop() {
                    None => return 0,
                    Some(e) => {
                        u = self.to[e ^ 1];
                        self.iter[u] = self.next[self.iter[u]];
                    }
                }
            }
        }
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut flow = 0u64;
        while self.bfs(s, t) {
            self.iter.clone_from(&self.head);
            loop {
                let f = self.augment(s, t);
                if f == 0 {
                    break;
                }
                flow += f as u64;
            }
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let mut e = self.head[u];
            while e != NIL {
                let w = self.to[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCut {
    pub cut: Vec<VertexId>,
    pub size: usize,
    pub flow: u64,
    /// Independent check: removing the cut leaves no path from `B(v, n)` to
    /// the targets.
    pub feasible: bool,
}

/// Minimum vertex set inside `B(v, m) \ B(v, n)` separating `B(v, n)` from
/// every vertex at distance `m + 1` and from every horizon vertex of the
/// annulus.
pub fn min_vertex_cut(g: &PlanarEmbeddedGraph, v: VertexId, n: u32, m: u32) -> Result<VertexCut> {
    g.check_vertex(v)?;
    if n >= m {
        return Err(Error::InvalidParams(format!("min cut needs n < m, got n={n}, m={m}")));
    }
    let mut bfs = BoundedBfs::new(g.num_vertices());
    bfs.run(g, &[v], m + 1, None);
    let region: Vec<VertexId> = bfs.touched().to_vec();
    if let Some(&hit) = region.iter().find(|&&u| bfs.dist(u).unwrap() <= n && g.is_horizon(u)) {
        return Err(Error::Horizon {
            what: "min cut source ball",
            center: v,
            radius: n,
            hit,
        });
    }

    // Node 0 is the contracted ball, node 1 the sink, annulus vertex `u`
    // gets `2 + 2 * slot` (in) and `3 + 2 * slot` (out).
    let mut slot = vec![usize::MAX; g.num_vertices()];
    let annulus: Vec<VertexId> = region
        .iter()
        .copied()
        .filter(|&u| (n + 1..=m).contains(&bfs.dist(u).unwrap()))
        .collect();
    for (i, &u) in annulus.iter().enumerate() {
        slot[u.idx()] = i;
    }
    let (s, t) = (0, 1);
    let mut net = Dinic::new(2 + 2 * annulus.len());
    for (i, &u) in annulus.iter().enumerate() {
        let (u_in, u_out) = (2 + 2 * i, 3 + 2 * i);
        net.add_edge(u_in, u_out, 1);
        if g.is_horizon(u) {
            net.add_edge(u_out, t, INF);
        }
        for w in g.neighbors(u) {
            match bfs.dist(w) {
                Some(d) if d <= n => net.add_edge(s, u_in, INF),
                Some(d) if d == m + 1 => net.add_edge(u_out, t, INF),
                _ => net.add_edge(u_out, 2 + 2 * slot[w.idx()], INF),
            }
        }
    }
    let flow = net.max_flow(s, t);
    let seen = net.reachable(s);
    let mut cut: Vec<VertexId> = annulus
        .iter()
        .enumerate()
        .filter(|&(i, _)| seen[2 + 2 * i] && !seen[3 + 2 * i])
        .map(|(_, &u)| u)
        .collect();
    cut.sort_unstable();
    if cut.len() as u64 != flow {
        return Err(Error::VerificationFailed(format!(
            "cut of size {} does not match flow {flow}",
            cut.len()
        )));
    }

    let mut blocked = vec![false; g.num_vertices()];
    for &u in &cut {
        blocked[u.idx()] = true;
    }
    let ball: Vec<VertexId> = region.iter().copied().filter(|&u| bfs.dist(u).unwrap() <= n).collect();
    let dist = |u: VertexId| bfs.dist(u);
    let mut check = BoundedBfs::new(g.num_vertices());
    check.run(g, &ball, m + 1, Some(&blocked));
    let feasible = check
        .touched()
        .iter()
        .all(|&u| dist(u).is_some_and(|d| d <= m && !(d > n && g.is_horizon(u))));
    Ok(VertexCut {
        size: cut.len(),
        cut,
        flow,
        feasible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, spider};

    #[test]
    fn grid_cut_is_the_first_sphere() {
        let g = grid(41, 41).unwrap();
        let c = min_vertex_cut(&g, VertexId(20 * 41 + 20), 2, 12).unwrap();
        assert_eq!(c.size, 12);
        assert!(c.feasible);
    }

    #[test]
    fn path_cuts() {
        let g = grid(41, 1).unwrap();
        assert_eq!(min_vertex_cut(&g, VertexId(20), 2, 6).unwrap().size, 2);
        // the near end is a horizon vertex inside the annulus, so it counts as a target
        assert_eq!(min_vertex_cut(&g, VertexId(3), 1, 6).unwrap().size, 2);
    }

    #[test]
    fn spider_cut_is_one_per_arm() {
        let g = spider(4, 30).unwrap();
        let c = min_vertex_cut(&g, VertexId(0), 3, 9).unwrap();
        assert_eq!(c.size, 4);
        assert!(c.feasible);
    }

    #[test]
    fn ball_on_horizon_is_rejected() {
        let g = grid(9, 9).unwrap();
        assert!(matches!(min_vertex_cut(&g, VertexId(40), 4, 6), Err(Error::Horizon { .. })));
        assert!(min_vertex_cut(&g, VertexId(40), 3, 3).is_err());
    }
}
