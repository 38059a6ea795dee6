use std::collections::{BTreeSet, VecDeque};

use planar_profile::generators::{grid, hexagonal, substitution, triangular};
use planar_profile::graph::{ball, bfs_distances, boundary, contour, sphere};
use planar_profile::{PlanarEmbeddedGraph, VertexId};

/// All-pairs distances by repeated relaxation over the edge list.
fn relaxation_distances(g: &PlanarEmbeddedGraph, src: VertexId) -> Vec<u32> {
    let edges = g.edges();
    let mut d = vec![u32::MAX; g.num_vertices()];
    d[src.idx()] = 0;
    loop {
        let mut changed = false;
        for &(a, b) in &edges {
            for (x, y) in [(a, b), (b, a)] {
                let dx = d[x.idx()];
                if dx != u32::MAX && dx + 1 < d[y.idx()] {
                    d[y.idx()] = dx + 1;
                    changed = true;
                }
            }
        }
        if !changed {
            return d;
        }
    }
}

#[test]
fn bfs_matches_relaxation() {
    let hosts = [
        grid(17, 13).unwrap(),
        triangular(9).unwrap(),
        hexagonal(13, 10).unwrap(),
        substitution(0, 1, 4, 3).unwrap(),
    ];
    for g in &hosts {
        assert!(g.num_vertices() <= 500, "{}", g.num_vertices());
        for v in g.vertices().step_by(7) {
            let fast = bfs_distances(g, v).unwrap();
            assert_eq!(fast.as_slice(), relaxation_distances(g, v).as_slice());
        }
    }
}

#[test]
fn grid_spheres_and_ball_boundaries() {
    let g = grid(101, 101).unwrap();
    let v = VertexId(50 * 101 + 50);
    for r in 1..=20u32 {
        assert_eq!(sphere(&g, v, r).unwrap().len(), 4 * r as usize);
        assert_eq!(ball(&g, v, r).unwrap().len(), (2 * r * r + 2 * r + 1) as usize);
        let b = ball(&g, v, r).unwrap();
        assert_eq!(boundary(&g, &b).unwrap(), sphere(&g, v, r + 1).unwrap());
    }
}

/// Grid minus a few interior vertices, reindexed densely. Returns the host
/// and the integer position of every kept vertex.
fn holey_grid(side: i32, holes: &[(i32, i32)]) -> (PlanarEmbeddedGraph, Vec<(i32, i32)>) {
    let mut id = vec![u32::MAX; (side * side) as usize];
    let mut pos = Vec::new();
    for y in 0..side {
        for x in 0..side {
            if !holes.contains(&(x, y)) {
                id[(y * side + x) as usize] = pos.len() as u32;
                pos.push((x, y));
            }
        }
    }
    let mut edges = Vec::new();
    for &(x, y) in &pos {
        let a = id[(y * side + x) as usize];
        for (nx, ny) in [(x + 1, y), (x, y + 1)] {
            if nx < side && ny < side {
                let b = id[(ny * side + nx) as usize];
                if b != u32::MAX {
                    edges.push((a, b));
                }
            }
        }
    }
    let coords = pos.iter().map(|&(x, y)| [x as f64, y as f64]).collect();
    (PlanarEmbeddedGraph::from_drawing(coords, &edges).unwrap(), pos)
}

/// Contour support by flood fill on the doubled lattice: even-even points
/// are vertices, mixed points edge midpoints, odd-odd points face centers.
/// Ball vertices and midpoints of edges inside the ball are walls; the
/// support is every ball vertex touching the unbounded free region.
fn flood_support(side: i32, pos: &[(i32, i32)], ids: &[u32], members: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    let m = 2 * side + 3;
    let cell = |x: i32, y: i32| ((y + 1) * m + (x + 1)) as usize;
    let vid = |x: i32, y: i32| -> Option<VertexId> {
        if x < 0 || y < 0 || x >= side || y >= side {
            return None;
        }
        let i = ids[(y * side + x) as usize];
        (i != u32::MAX).then_some(VertexId(i))
    };
    let mut wall = vec![false; (m * m) as usize];
    for &v in members {
        let (x, y) = pos[v.idx()];
        wall[cell(2 * x, 2 * y)] = true;
        for (dx, dy) in [(1, 0), (0, 1)] {
            if let Some(w) = vid(x + dx, y + dy) {
                if members.contains(&w) {
                    wall[cell(2 * x + dx, 2 * y + dy)] = true;
                }
            }
        }
    }
    let mut free = vec![false; (m * m) as usize];
    let mut queue = VecDeque::from([(-1, -1)]);
    free[cell(-1, -1)] = true;
    while let Some((x, y)) = queue.pop_front() {
        for (nx, ny) in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
            if nx < -1 || ny < -1 || nx > 2 * side + 1 || ny > 2 * side + 1 {
                continue;
            }
            let c = cell(nx, ny);
            if !wall[c] && !free[c] {
                free[c] = true;
                queue.push_back((nx, ny));
            }
        }
    }
    members
        .iter()
        .copied()
        .filter(|&v| {
            let (x, y) = pos[v.idx()];
            (-1..=1).any(|dx| (-1..=1).any(|dy| free[cell(2 * x + dx, 2 * y + dy)]))
        })
        .collect()
}

#[test]
fn contour_support_matches_flood_fill() {
    let side = 21;
    let holes = [(12, 10), (8, 7), (9, 7), (10, 14), (13, 13), (6, 11)];
    let (g, pos) = holey_grid(side, &holes);
    let mut ids = vec![u32::MAX; (side * side) as usize];
    for (i, &(x, y)) in pos.iter().enumerate() {
        ids[(y * side + x) as usize] = i as u32;
    }
    let mut checked = 0;
    for &(cx, cy) in &[(10, 10), (11, 9), (7, 8), (12, 12)] {
        let v = VertexId(ids[(cy * side + cx) as usize]);
        for r in 1..=6 {
            let members: BTreeSet<VertexId> = ball(&g, v, r).unwrap().into_iter().collect();
            let c = contour(&g, v, r).unwrap();
            let got: BTreeSet<VertexId> = c.support().into_iter().collect();
            assert_eq!(got, flood_support(side, &pos, &ids, &members), "center ({cx},{cy}) r={r}");
            checked += 1;
        }
    }
    assert_eq!(checked, 24);
}

#[test]
fn contour_is_a_closed_walk_on_the_ball() {
    let g = triangular(12).unwrap();
    let v = g.deepest_vertex();
    for r in 1..=8 {
        let c = contour(&g, v, r).unwrap();
        let dist = bfs_distances(&g, v).unwrap();
        for i in 0..c.len() {
            let (a, b) = (c.vertex_at(i), c.vertex_at((i + 1) % c.len()));
            assert!(g.dart(a, b).is_some());
            assert!(dist.get(a).unwrap() <= r);
            assert_eq!(c.depth_at(i), dist.get(a).unwrap());
        }
        // every sphere vertex of a disk host lies on the contour
        let on: BTreeSet<_> = c.sphere_vertices().into_iter().collect();
        let expect: BTreeSet<_> = sphere(&g, v, r).unwrap().into_iter().collect();
        assert_eq!(on, expect);
    }
}
