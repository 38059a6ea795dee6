//! Deterministic planar host families with straight-line drawings.
//!
//! Vertex ids are canonical (row-major for lattices, arm-major for spiders,
//! breadth-first for trees) so downstream tie-breaking is reproducible.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FaceId, PlanarEmbeddedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Grid { width: u32, height: u32 },
    Triangular { radius: u32 },
    Hexagonal { width: u32, height: u32 },
    Spider { arms: u32, length: u32 },
    Tree { branching: u32, depth: u32 },
    Substitution { rule: u32, iterations: u32, base: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, seed: 0 }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<PlanarEmbeddedGraph> {
    match spec.family {
        Family::Grid { width, height } => grid(width, height),
        Family::Triangular { radius } => triangular(radius),
        Family::Hexagonal { width, height } => hexagonal(width, height),
        Family::Spider { arms, length } => spider(arms, length),
        Family::Tree { branching, depth } => tree(branching, depth),
        Family::Substitution {
            rule,
            iterations,
            base,
        } => substitution(rule, iterations, base, spec.seed),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

/// `width x height` square grid; vertex `(x, y)` has id `y * width + x`.
/// A `n x 1` grid is the path `0 - 1 - ... - n-1`.
pub fn grid(width: u32, height: u32) -> Result<PlanarEmbeddedGraph> {
    if width == 0 || height == 0 || (width as u64) * (height as u64) < 2 {
        return Err(bad(format!("grid needs at least two vertices, got {width}x{height}")));
    }
    if (width as u64) * (height as u64) > u32::MAX as u64 / 8 {
        return Err(bad("grid too large"));
    }
    let id = |x: u32, y: u32| y * width + x;
    let mut coords = Vec::with_capacity((width * height) as usize);
    let mut edges = Vec::new();
    for y in 0..height {
        for x in 0..width {
            coords.push([x as f64, y as f64]);
            if x + 1 < width {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < height {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    PlanarEmbeddedGraph::from_drawing(coords, &edges)
}

/// Hexagon-shaped patch of the triangular lattice with `3r^2 + 3r + 1`
/// vertices, ids in row-major order.
pub fn triangular(radius: u32) -> Result<PlanarEmbeddedGraph> {
    if radius == 0 {
        return Err(bad("triangular radius must be at least 1"));
    }
    let r = radius as i64;
    let inside = |q: i64, s: i64| q.abs() <= r && s.abs() <= r && (q + s).abs() <= r;
    let mut ids = HashMap::new();
    let mut coords = Vec::new();
    for s in -r..=r {
        for q in -r..=r {
            if inside(q, s) {
                ids.insert((q, s), coords.len() as u32);
                coords.push([q as f64 + s as f64 / 2.0, s as f64 * 3f64.sqrt() / 2.0]);
            }
        }
    }
    let mut edges = Vec::new();
    for s in -r..=r {
        for q in -r..=r {
            if let Some(&u) = ids.get(&(q, s)) {
                for (dq, ds) in [(1, 0), (0, 1), (-1, 1)] {
                    if let Some(&w) = ids.get(&(q + dq, s + ds)) {
                        edges.push((u, w));
                    }
                }
            }
        }
    }
    PlanarEmbeddedGraph::from_drawing(coords, &edges)
}

/// Honeycomb lattice as a brick wall: a `width x height` grid keeping the
/// vertical edge above `(x, y)` only when `x + y` is even. Needs an odd width
/// and even height so no corner is left dangling.
pub fn hexagonal(width: u32, height: u32) -> Result<PlanarEmbeddedGraph> {
    if width < 3 || width.is_multiple_of(2) || height < 2 || !height.is_multiple_of(2) {
        return Err(bad(format!(
            "hexagonal needs odd width >= 3 and even height >= 2, got {width}x{height}"
        )));
    }
    let id = |x: u32, y: u32| y * width + x;
    let mut coords = Vec::new();
    let mut edges = Vec::new();
    for y in 0..height {
        for x in 0..width {
            coords.push([x as f64, y as f64]);
            if x + 1 < width {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < height && (x + y) % 2 == 0 {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    PlanarEmbeddedGraph::from_drawing(coords, &edges)
}

/// Center `0` with `arms` paths of `length` vertices; arm `i` holds ids
/// `1 + i*length ..= (i+1)*length`, innermost first.
pub fn spider(arms: u32, length: u32) -> Result<PlanarEmbeddedGraph> {
    if arms == 0 || length == 0 {
        return Err(bad("spider needs at least one arm of positive length"));
    }
    let mut coords = vec![[0.0, 0.0]];
    let mut edges = Vec::new();
    for i in 0..arms {
        let theta = std::f64::consts::TAU * i as f64 / arms as f64;
        for j in 1..=length {
            let id = 1 + i * length + (j - 1);
            coords.push([j as f64 * theta.cos(), j as f64 * theta.sin()]);
            edges.push((if j == 1 { 0 } else { id - 1 }, id));
        }
    }
    PlanarEmbeddedGraph::from_drawing(coords, &edges)
}

/// Complete `branching`-ary tree of the given depth, ids in breadth-first
/// order, drawn in layers.
pub fn tree(branching: u32, depth: u32) -> Result<PlanarEmbeddedGraph> {
    if branching == 0 || depth == 0 {
        return Err(bad("tree needs positive branching and depth"));
    }
    let count: u64 = (0..=depth).map(|k| (branching as u64).pow(k)).sum();
    if count > 4_000_000 {
        return Err(bad("tree too large"));
    }
    let n = count as usize;
    let mut parent = vec![u32::MAX; n];
    let mut level = vec![0u32; n];
    let mut edges = Vec::new();
    let mut next = 1usize;
    for u in 0..n {
        if level[u] == depth {
            continue;
        }
        for _ in 0..branching {
            parent[next] = u as u32;
            level[next] = level[u] + 1;
            edges.push((u as u32, next as u32));
            next += 1;
        }
    }
    // leaves get consecutive x, parents sit at the mean of their children
    let mut x = vec![0.0f64; n];
    let mut leaf = 0.0;
    for u in 0..n {
        if level[u] == depth {
            x[u] = leaf;
            leaf += 1.0;
        }
    }
    for u in (1..n).rev() {
        if level[u] < depth {
            let first = 1 + u * branching as usize;
            x[u] = (first..first + branching as usize).map(|c| x[c]).sum::<f64>() / branching as f64;
        }
    }
    x[0] = (1..=branching as usize).map(|c| x[c]).sum::<f64>() / branching as f64;
    let coords = (0..n).map(|u| [x[u], -(level[u] as f64)]).collect();
    PlanarEmbeddedGraph::from_drawing(coords, &edges)
}

/// Iterated refinement of a triangular patch of radius `base`.
///
/// Rules: `0` splits every bounded triangle into four through edge
/// midpoints; `1` stacks a new vertex inside every bounded triangle; `2`
/// stacks inside each bounded triangle with probability 1/2 drawn from
/// `seed`. No growth property is assumed for the result.
pub fn substitution(rule: u32, iterations: u32, base: u32, seed: u64) -> Result<PlanarEmbeddedGraph> {
    if rule > 2 {
        return Err(bad(format!("unknown substitution rule {rule}")));
    }
    if iterations > 6 {
        return Err(bad("at most 6 substitution iterations"));
    }
    let mut g = triangular(base)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..iterations {
        let mut coords: Vec<[f64; 2]> = g.coords().unwrap().to_vec();
        let mut edges: Vec<(u32, u32)> = g.edges().iter().map(|&(u, w)| (u.0, w.0)).collect();
        let bounded: Vec<FaceId> = (0..g.num_faces() as u32)
            .map(FaceId)
            .filter(|&f| f != g.outer_face())
            .collect();
        match rule {
            0 => {
                let mut mid: HashMap<(u32, u32), u32> = HashMap::new();
                let old_edges = std::mem::take(&mut edges);
                for (u, w) in old_edges {
                    let m = coords.len() as u32;
                    let (a, b) = (coords[u as usize], coords[w as usize]);
                    coords.push([(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0]);
                    mid.insert((u, w), m);
                    edges.push((u, m));
                    edges.push((m, w));
                }
                for f in bounded {
                    let vs: Vec<u32> = g.face_darts(f).iter().map(|&d| g.origin(d).0).collect();
                    let key = |a: u32, b: u32| mid[&(a.min(b), a.max(b))];
                    let k = vs.len();
                    for i in 0..k {
                        let m1 = key(vs[i], vs[(i + 1) % k]);
                        let m2 = key(vs[(i + 1) % k], vs[(i + 2) % k]);
                        edges.push((m1, m2));
                    }
                }
            }
            _ => {
                for f in bounded {
                    if rule == 2 && !rng.gen_bool(0.5) {
                        continue;
                    }
                    let vs: Vec<u32> = g.face_darts(f).iter().map(|&d| g.origin(d).0).collect();
                    let c = coords.len() as u32;
                    let k = vs.len() as f64;
                    let cx = vs.iter().map(|&u| coords[u as usize][0]).sum::<f64>() / k;
                    let cy = vs.iter().map(|&u| coords[u as usize][1]).sum::<f64>() / k;
                    coords.push([cx, cy]);
                    edges.extend(vs.iter().map(|&u| (u, c)));
                }
            }
        }
        g = PlanarEmbeddedGraph::from_drawing(coords, &edges)?;
    }
    Ok(g)
}
