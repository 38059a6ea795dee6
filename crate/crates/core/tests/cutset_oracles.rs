use planar_profile::cutset::{
    choose_base_pair, find_cutset, find_cutset_with, verify_cutset, CutsetCase, CutsetConfig, CutsetResult,
};
use planar_profile::generators::{grid, hexagonal, spider, substitution, tree, triangular};
use planar_profile::graph::{bfs_distances, contour, geodesic, Tiebreak, Walk};
use planar_profile::metrics::min_vertex_cut;
use planar_profile::winding::{dual_ray, winding_parity};
use planar_profile::{PlanarEmbeddedGraph, VertexId};

/// Arc weight, arc start, arc end and the geodesic oriented along the arc.
type Pick = (usize, VertexId, VertexId, Vec<VertexId>);

/// Exhaustive base pair: every canonical pair within `2n + 1`, parity from
/// whole closed walks, weight by scanning the arc.
fn brute_base_pair(g: &PlanarEmbeddedGraph, v: VertexId, n: u32, tb: Tiebreak) -> Option<Pick> {
    let c = contour(g, v, 4 * n).unwrap();
    let ray = dual_ray(g, v).unwrap();
    let len = c.len();
    let canon: Vec<(VertexId, usize)> = c.canonical().iter().map(|(&w, &p)| (w, p)).collect();
    let mut best: Option<((usize, VertexId, VertexId), Pick)> = None;
    for (i, &(x, px)) in canon.iter().enumerate() {
        let dx = bfs_distances(g, x).unwrap();
        for &(y, py) in &canon[i + 1..] {
            if dx.get(y).unwrap() > 2 * n + 1 {
                continue;
            }
            let gamma = geodesic(g, x, y, tb).unwrap();
            if gamma.contains(&v) {
                continue;
            }
            let mut odd = Vec::new();
            for (from, to, path) in [(px, py, gamma.clone()), (py, px, gamma.iter().rev().copied().collect::<Vec<_>>())] {
                let darts = (to + len - from) % len;
                let mut vs: Vec<VertexId> = (from..=from + darts).map(|k| c.vertex_at(k)).collect();
                vs.extend(path.iter().rev().skip(1));
                let parity = winding_parity(g, &Walk::from_vertices(g, &vs).unwrap(), &ray).unwrap();
                let weight = (from..=from + darts)
                    .filter(|&k| c.canonical_position(c.vertex_at(k)) == Some(k % len))
                    .count();
                if parity {
                    odd.push((weight, c.vertex_at(from), c.vertex_at(to), path));
                }
            }
            assert_eq!(odd.len(), 1, "pair {x}, {y}");
            let pick = odd.pop().unwrap();
            let key = (pick.0, x.min(y), x.max(y));
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, pick));
            }
        }
    }
    best.map(|(_, pick)| pick)
}

#[test]
fn base_pair_matches_exhaustive_search() {
    let cases: Vec<(PlanarEmbeddedGraph, u32)> = vec![
        (grid(41, 41).unwrap(), 1),
        (grid(41, 41).unwrap(), 3),
        (triangular(20).unwrap(), 2),
        (hexagonal(41, 40).unwrap(), 2),
        (substitution(2, 2, 5, 7).unwrap(), 1),
    ];
    for (g, n) in &cases {
        let v = g.deepest_vertex();
        for tb in [Tiebreak::SmallestId, Tiebreak::LargestId] {
            let c = contour(g, v, 4 * n).unwrap();
            let ray = dual_ray(g, v).unwrap().index();
            let got = choose_base_pair(g, &c, *n, &ray, tb).unwrap();
            let want = brute_base_pair(g, v, *n, tb);
            match (got, want) {
                (Some(bp), Some((w, a, b, path))) => {
                    assert_eq!((bp.weight, bp.a, bp.b), (w, a, b));
                    assert_eq!(bp.gamma, path);
                }
                (None, None) => {}
                (got, want) => panic!("n={n}: {got:?} vs {want:?}"),
            }
        }
    }
}

fn assert_verified(g: &PlanarEmbeddedGraph, v: VertexId, n: u32) -> CutsetResult {
    let r = find_cutset(g, v, n).unwrap();
    let report = verify_cutset(g, v, n, &r);
    assert!(report.all_pass(), "n={n}: {:?}", report.failures);
    r
}

#[test]
fn cutsets_verify_across_families() {
    let hosts = [
        (grid(81, 81).unwrap(), vec![1, 2, 5, 9]),
        (triangular(45).unwrap(), vec![1, 3, 8]),
        (hexagonal(81, 80).unwrap(), vec![2, 4, 6]),
        (substitution(0, 3, 4, 0).unwrap(), vec![2, 4]),
        (substitution(2, 3, 10, 9).unwrap(), vec![1, 2]),
    ];
    for (g, ns) in &hosts {
        let v = g.deepest_vertex();
        for &n in ns {
            let r = assert_verified(g, v, n);
            let cut = min_vertex_cut(g, v, n, 6 * n).unwrap();
            assert!(cut.size <= r.boundary_size, "min cut {} above {}", cut.size, r.boundary_size);
        }
    }
}

#[test]
fn binary_tree_reports_verification_failure() {
    // every odd curve around the root of a tree passes through the root,
    // so no curve built from root-avoiding paths can close the cut
    let g = tree(2, 13).unwrap();
    let v = g.deepest_vertex();
    for n in [1, 2] {
        let err = find_cutset(&g, v, n).unwrap_err();
        assert!(err.is_verification(), "{err}");
    }
}

#[test]
fn spider_gives_the_trivial_ball() {
    let g = spider(5, 60).unwrap();
    let v = VertexId(0);
    for n in 1..=5 {
        let r = assert_verified(&g, v, n);
        assert_eq!(r.case, CutsetCase::Trivial);
        assert_eq!(r.omega_size, 1 + 5 * 4 * n as usize);
        assert_eq!(r.boundary_size, 5);
    }
}

#[test]
fn tampered_results_fail_verification() {
    let g = grid(61, 61).unwrap();
    let v = VertexId(30 * 61 + 30);
    let r = assert_verified(&g, v, 3);

    let mut dropped = r.clone();
    dropped.boundary.remove(0);
    dropped.boundary_size -= 1;
    let rep = verify_cutset(&g, v, 3, &dropped);
    assert!(!rep.separation && !rep.boundary_consistent);

    let mut grown = r.clone();
    grown.omega.push(r.boundary[0]);
    grown.omega_size += 1;
    let rep = verify_cutset(&g, v, 3, &grown);
    assert!(!rep.separation && !rep.all_pass());

    let mut tight = r.clone();
    tight.bound_used = r.boundary_size as u64 - 1;
    assert!(!verify_cutset(&g, v, 3, &tight).size_bound);

    let mut wrong = r;
    wrong.omega.push(VertexId(99_999));
    assert!(!verify_cutset(&g, v, 3, &wrong).all_pass());
}

#[test]
fn explicit_doubling_constant_sets_the_bound() {
    let g = grid(61, 61).unwrap();
    let v = VertexId(30 * 61 + 30);
    let config = CutsetConfig {
        c_hat: Some(2.0),
        ..CutsetConfig::default()
    };
    let r = find_cutset_with(&g, v, 3, &config).unwrap();
    assert_eq!(r.bound_used, 17 * 7);
    assert_eq!(r.c_hat, 2.0);
}

#[test]
fn reports_round_trip_through_json() {
    let g = grid(61, 61).unwrap();
    let v = VertexId(30 * 61 + 30);
    let r = assert_verified(&g, v, 4);
    let text = serde_json::to_string(&r).unwrap();
    let back: CutsetResult = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
    assert!(verify_cutset(&g, v, 4, &back).all_pass());
    assert_eq!(text, serde_json::to_string(&find_cutset(&g, v, 4).unwrap()).unwrap());
}
