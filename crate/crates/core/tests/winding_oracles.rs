mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use planar_profile::generators::{grid, substitution, triangular};
use planar_profile::graph::{contour, Walk};
use planar_profile::winding::{dual_ray, random_dual_ray, splice_parity_check, winding_parity};
use planar_profile::VertexId;

use common::{closed_walk, geometric_parity, path_avoiding, wander};

#[test]
fn parity_matches_geometric_ray_casting() {
    let g = triangular(10).unwrap();
    let v = g.deepest_vertex();
    let p = g.coords().unwrap()[v.idx()];
    let ray = dual_ray(&g, v).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut odd = 0;
    for _ in 0..1200 {
        let w = closed_walk(&g, Some(v), &mut rng);
        let comb = winding_parity(&g, &w, &ray).unwrap();
        assert_eq!(comb, geometric_parity(&g, &w, p));
        odd += comb as usize;
    }
    // both parities must actually occur
    assert!((20..=1180).contains(&odd), "{odd}");
}

#[test]
fn parity_is_independent_of_the_ray() {
    let hosts = [grid(15, 15).unwrap(), triangular(6).unwrap(), substitution(1, 2, 3, 0).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in &hosts {
        let v = g.deepest_vertex();
        let mut rays = vec![dual_ray(g, v).unwrap()];
        for _ in 0..12 {
            let r = random_dual_ray(g, v, &mut rng).unwrap();
            assert!(r.is_valid(g));
            rays.push(r);
        }
        for k in 0..300 {
            // every third walk is allowed through the anchor
            let avoid = (k % 3 != 0).then_some(v);
            let w = closed_walk(g, avoid, &mut rng);
            let first = winding_parity(g, &w, &rays[0]).unwrap();
            for r in &rays[1..] {
                assert_eq!(winding_parity(g, &w, r).unwrap(), first);
            }
            // reversal pushes every non-backtracking passage to the other side
            let len = w.darts.len();
            let flips = (0..len)
                .filter(|&i| g.origin(w.darts[i]) == v && g.twin(w.darts[(i + len - 1) % len]) != w.darts[i])
                .count();
            let reversed = winding_parity(g, &w.reversed(g), &rays[0]).unwrap();
            assert_eq!(reversed, first ^ (flips % 2 == 1));
        }
    }
}

#[test]
fn splitting_a_contour_is_additive() {
    let g = grid(41, 41).unwrap();
    let v = VertexId(20 * 41 + 20);
    let ray = dual_ray(&g, v).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut splits = 0;
    for r in [2u32, 5, 9] {
        let c = contour(&g, v, r).unwrap();
        let total = winding_parity(&g, &c.walk, &ray).unwrap();
        assert!(total);
        let len = c.len();
        let arc = |from: usize, to: usize| {
            let vs: Vec<VertexId> = (from..=to).map(|k| c.vertex_at(k)).collect();
            Walk::from_vertices(&g, &vs).unwrap()
        };
        for _ in 0..400 {
            let i = rng.gen_range(0..len);
            let j = i + rng.gen_range(1..len);
            let (a, b) = (c.vertex_at(i), c.vertex_at(j));
            if a == b {
                continue;
            }
            let gamma1 = arc(i, j);
            let gamma2 = arc(j, i + len);
            let detour = rng.gen_range(0..30);
            let mut dv = wander(&g, a, detour, Some(v), &mut rng);
            dv.extend_from_slice(&path_avoiding(&g, *dv.last().unwrap(), b, v)[1..]);
            let delta = Walk::from_vertices(&g, &dv).unwrap();
            let (p1, p2) = splice_parity_check(&g, &gamma1, &gamma2, &delta, &ray).unwrap();
            assert_eq!(p1 ^ p2, total, "r={r} i={i} j={j}");
            splits += 1;
        }
    }
    assert!(splits >= 1000, "{splits}");
}
