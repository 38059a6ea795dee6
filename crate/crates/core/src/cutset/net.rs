use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{BoundedBfs, PlanarEmbeddedGraph, VertexId};

/// A maximal subset of `source` whose points are pairwise more than
/// `epsilon` apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Net {
    pub epsilon: u32,
    pub points: Vec<VertexId>,
    pub source: Vec<VertexId>,
}

/// Independent recheck of the net properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetCheck {
    /// All pairwise distances exceed epsilon.
    pub separated: bool,
    /// No source vertex could be added.
    pub maximal: bool,
    /// Largest distance from a source vertex to the nearest point.
    pub covering_radius: u32,
}

impl NetCheck {
    pub fn ok(&self, epsilon: u32) -> bool {
        self.separated && self.maximal && self.covering_radius <= epsilon
    }
}

/// Greedy net scanning `source` in increasing id order.
pub fn epsilon_net(g: &PlanarEmbeddedGraph, source: &[VertexId], epsilon: u32) -> Result<Net> {
    let mut scan = source.to_vec();
    scan.sort_unstable();
    scan.dedup();
    let mut bfs = BoundedBfs::new(g.num_vertices());
    epsilon_net_in_order(g, &scan, epsilon, &mut bfs)
}

/// Greedy net: a vertex joins when no earlier point lies within `epsilon`.
pub fn epsilon_net_in_order(
    g: &PlanarEmbeddedGraph,
    scan: &[VertexId],
    epsilon: u32,
    bfs: &mut BoundedBfs,
) -> Result<Net> {
    if scan.is_empty() {
        return Err(Error::EmptySource);
    }
    let mut members = HashSet::with_capacity(scan.len());
    let mut source = Vec::with_capacity(scan.len());
    for &v in scan {
        g.check_vertex(v)?;
        if members.insert(v) {
            source.push(v);
        }
    }
    let mut covered: HashSet<VertexId> = HashSet::new();
    let mut points = Vec::new();
    for &v in &source {
        if covered.contains(&v) {
            continue;
        }
        points.push(v);
        for &w in bfs.run(g, &[v], epsilon, None) {
            if members.contains(&w) {
                covered.insert(w);
            }
        }
    }
    Ok(Net {
        epsilon,
        points,
        source,
    })
}

impl Net {
    pub fn check(&self, g: &PlanarEmbeddedGraph) -> NetCheck {
        let mut bfs = BoundedBfs::new(g.num_vertices());
        let point_set: HashSet<_> = self.points.iter().copied().collect();
        let separated = self.points.iter().all(|&p| {
            bfs.run(g, &[p], self.epsilon, None);
            bfs.touched().iter().all(|&w| w == p || !point_set.contains(&w))
        });
        bfs.run(g, &self.points, u32::MAX, None);
        let covering_radius = self
            .source
            .iter()
            .map(|&s| bfs.dist(s).unwrap_or(u32::MAX))
            .max()
            .unwrap_or(0);
        let maximal = self
            .source
            .iter()
            .all(|&s| point_set.contains(&s) || bfs.dist(s).is_some_and(|d| d <= self.epsilon));
        NetCheck {
            separated,
            maximal,
            covering_radius,
        }
    }
}

/// Graph on a vertex list joining pairs at host distance at most `threshold`.
#[derive(Clone, Debug)]
pub struct ComponentGraph {
    pub vertices: Vec<VertexId>,
    pub threshold: u32,
    pub edges: Vec<(usize, usize)>,
    /// Component label per vertex index, numbered by first appearance.
    pub component: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl ComponentGraph {
    pub fn build(
        g: &PlanarEmbeddedGraph,
        vertices: Vec<VertexId>,
        threshold: u32,
        bfs: &mut BoundedBfs,
    ) -> Self {
        Self::build_excluding(g, vertices, threshold, bfs, None)
    }

    /// As [`Self::build`], leaving out the edge between the two given
    /// indices.
    pub fn build_excluding(
        g: &PlanarEmbeddedGraph,
        vertices: Vec<VertexId>,
        threshold: u32,
        bfs: &mut BoundedBfs,
        skip: Option<(usize, usize)>,
    ) -> Self {
        let k = vertices.len();
        let mut adjacency = vec![Vec::new(); k];
        let mut edges = Vec::new();
        for i in 0..k {
            bfs.run(g, &[vertices[i]], threshold, None);
            for j in i + 1..k {
                if bfs.dist(vertices[j]).is_some() && skip != Some((i, j)) && skip != Some((j, i)) {
                    edges.push((i, j));
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        let mut component = vec![usize::MAX; k];
        let mut next = 0;
        for s in 0..k {
            if component[s] != usize::MAX {
                continue;
            }
            component[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &adjacency[u] {
                    if component[w] == usize::MAX {
                        component[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        ComponentGraph {
            vertices,
            threshold,
            edges,
            component,
            adjacency,
        }
    }

    pub fn num_components(&self) -> usize {
        self.component.iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Members of the component containing vertex index `i`.
    pub fn members(&self, i: usize) -> Vec<VertexId> {
        let c = self.component[i];
        (0..self.vertices.len())
            .filter(|&j| self.component[j] == c)
            .map(|j| self.vertices[j])
            .collect()
    }

    /// Shortest (hence simple) path of vertex indices, neighbors expanded in
    /// index order.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let k = self.vertices.len();
        let mut prev = vec![usize::MAX; k];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in &self.adjacency[u] {
                if prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if prev[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::grid;

    #[test]
    fn path_net_by_hand() {
        let g = grid(11, 1).unwrap();
        let all: Vec<_> = g.vertices().collect();
        let net = epsilon_net(&g, &all, 3).unwrap();
        assert_eq!(net.points, vec![VertexId(0), VertexId(4), VertexId(8)]);
        assert!(net.check(&g).ok(3));
    }

    #[test]
    fn zero_epsilon_keeps_everything() {
        let g = grid(4, 4).unwrap();
        let src = vec![VertexId(3), VertexId(1), VertexId(9)];
        let net = epsilon_net(&g, &src, 0).unwrap();
        assert_eq!(net.points, vec![VertexId(1), VertexId(3), VertexId(9)]);
    }

    #[test]
    fn empty_source_is_an_error() {
        let g = grid(4, 4).unwrap();
        assert!(matches!(epsilon_net(&g, &[], 2), Err(Error::EmptySource)));
    }

    #[test]
    fn component_graph_on_a_path() {
        let g = grid(20, 1).unwrap();
        let mut bfs = BoundedBfs::new(g.num_vertices());
        let vs = [0, 3, 6, 15, 17].map(VertexId).to_vec();
        let cg = ComponentGraph::build(&g, vs, 3, &mut bfs);
        assert_eq!(cg.num_components(), 2);
        assert_eq!(cg.members(0), vec![VertexId(0), VertexId(3), VertexId(6)]);
        assert_eq!(cg.path(0, 2), Some(vec![0, 1, 2]));
        assert_eq!(cg.path(0, 3), None);
    }
}
