use proptest::prelude::*;

use planar_profile::cutset::{epsilon_net, find_cutset, verify_cutset};
use planar_profile::generators::{generate, grid, hexagonal, triangular, Family, FamilySpec};
use planar_profile::graph::{ball, bfs_distances, boundary};
use planar_profile::io::{graph_to_string, parse_graph};
use planar_profile::metrics::brute_profile;
use planar_profile::VertexId;

fn family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (2u32..25, 1u32..25).prop_map(|(width, height)| FamilySpec::new(Family::Grid { width, height })),
        (1u32..9).prop_map(|radius| FamilySpec::new(Family::Triangular { radius })),
        (1u32..8, 1u32..6).prop_map(|(w, h)| FamilySpec::new(Family::Hexagonal {
            width: 2 * w + 1,
            height: 2 * h
        })),
        (1u32..6, 1u32..12).prop_map(|(arms, length)| FamilySpec::new(Family::Spider { arms, length })),
        (1u32..4, 1u32..5).prop_map(|(branching, depth)| FamilySpec::new(Family::Tree { branching, depth })),
        (0u32..3, 0u32..3, 1u32..4, any::<u64>()).prop_map(|(rule, iterations, base, seed)| FamilySpec {
            family: Family::Substitution { rule, iterations, base },
            seed,
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn embeddings_satisfy_euler(spec in family()) {
        let g = generate(&spec).unwrap();
        let (v, e, f) = (g.num_vertices() as i64, g.num_edges() as i64, g.num_faces() as i64);
        prop_assert_eq!(v - e + f, 2);
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, g.num_darts());
        for d in 0..g.num_darts() as u32 {
            let d = planar_profile::graph::DartId(d);
            prop_assert_eq!(g.twin(g.twin(d)), d);
            prop_assert_eq!(g.rot_prev(g.rot_next(d)), d);
        }
        prop_assert!(!g.horizon_vertices().is_empty());
    }

    #[test]
    fn graph_json_round_trips(spec in family()) {
        let g = generate(&spec).unwrap();
        let text = graph_to_string(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(graph_to_string(&back), text);
        prop_assert_eq!(back.rotations(), g.rotations());
        prop_assert_eq!(back.outer_face_vertices(), g.outer_face_vertices());
    }

    #[test]
    fn nets_separate_cover_and_are_maximal(
        side in 5u32..30,
        eps in 0u32..6,
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..120),
    ) {
        let g = grid(side, side).unwrap();
        let source: Vec<VertexId> = picks.iter().map(|i| VertexId(i.index(g.num_vertices()) as u32)).collect();
        let net = epsilon_net(&g, &source, eps).unwrap();
        prop_assert!(net.check(&g).ok(eps));
        // independent recheck from single-source searches
        let dist: Vec<_> = net.points.iter().map(|&p| bfs_distances(&g, p).unwrap()).collect();
        for (i, d) in dist.iter().enumerate() {
            for &q in &net.points[i + 1..] {
                prop_assert!(d.get(q).unwrap() > eps);
            }
        }
        for &s in &source {
            prop_assert!(dist.iter().any(|d| d.get(s).unwrap() <= eps));
        }
    }

    #[test]
    fn balls_never_beat_the_exact_profile(w in 2u32..6, h in 1u32..4, r in 0u32..4) {
        let g = grid(w, h).unwrap();
        let exact = brute_profile(&g, g.num_vertices() as u64).unwrap();
        for pair in exact.entries.windows(2) {
            prop_assert!(pair[1].value <= pair[0].value);
        }
        for v in g.vertices() {
            let b = ball(&g, v, r).unwrap();
            let bnd = boundary(&g, &b).unwrap().len() as u64;
            prop_assert!(bnd >= exact.entries[b.len() - 1].value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cutsets_verify_on_lattices(kind in 0u8..3, n in 1u32..4, dx in -3i32..=3, dy in -3i32..=3) {
        let (g, v) = match kind {
            0 => {
                let g = grid(41, 41).unwrap();
                let v = VertexId(((20 + dy) * 41 + 20 + dx) as u32);
                (g, v)
            }
            1 => {
                let g = triangular(20).unwrap();
                let v = g.deepest_vertex();
                (g, v)
            }
            _ => {
                let g = hexagonal(41, 40).unwrap();
                let v = VertexId(((20 + dy) * 41 + 20 + dx) as u32);
                (g, v)
            }
        };
        let r = find_cutset(&g, v, n).unwrap();
        let report = verify_cutset(&g, v, n, &r);
        prop_assert!(report.all_pass(), "{:?}", report.failures);
        prop_assert_eq!(find_cutset(&g, v, n).unwrap(), r);
    }
}
