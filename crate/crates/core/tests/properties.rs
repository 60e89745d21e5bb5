use proptest::prelude::*;

use resolvedim::edgelist::{parse_edge_list, to_edge_list_string};
use resolvedim::{
    all_pairs_distances, is_connected, naive_minimum, FamilySpec, Graph, Invariant, Solver,
    SolverOptions, VertexSet,
};

/// Connected graphs on 3..=8 vertices: a random tree plus random chords.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (3usize..=8)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
            (Just(n), parents, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
        })
        .prop_map(|(n, parents, chords)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            edges.extend(pairs.zip(chords).filter(|&(_, keep)| keep).map(|(e, _)| e));
            Graph::new(n, edges).unwrap()
        })
}

fn subset_of(g: &Graph, mask: u16) -> VertexSet {
    VertexSet::new((0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect()).unwrap()
}

fn family_spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (3usize..10).prop_map(|n| FamilySpec::Cycle { n }),
        (1usize..8).prop_map(|n| FamilySpec::Complete { n }),
        (3usize..7, 1usize..4).prop_map(|(n, m)| FamilySpec::Jellyfish { n, m }),
        (2usize..8).prop_map(|r| FamilySpec::CocktailParty { r }),
        (4usize..14).prop_flat_map(|n| (Just(n), 1..=n / 2 - 1)).prop_map(|(n, k)| FamilySpec::CayleyZn { n, k }),
        (2usize..7).prop_map(|n| FamilySpec::CayleyDihedral { n }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distance_matrix_is_a_metric(g in connected_graph()) {
        let dm = all_pairs_distances(&g).unwrap();
        let n = g.vertex_count();
        for u in 0..n {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.is_adjacent(u, v));
                for w in 0..n {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
        prop_assert_eq!(dm.diameter(), (0..n).flat_map(|u| dm.row(u).to_vec()).max().unwrap());
    }

    #[test]
    fn supersets_of_resolving_sets_resolve(g in connected_graph(), a in any::<u16>(), b in any::<u16>()) {
        let dm = all_pairs_distances(&g).unwrap();
        let small = subset_of(&g, a & b);
        let large = subset_of(&g, a);
        for inv in Invariant::ALL {
            if small.len() >= 2 && inv.holds(&g, &dm, &small).unwrap() {
                prop_assert!(inv.holds(&g, &dm, &large).unwrap(), "{} {} {}", inv, small, large);
            }
        }
    }

    #[test]
    fn doubly_and_strong_sets_are_resolving(g in connected_graph(), mask in any::<u16>()) {
        let dm = all_pairs_distances(&g).unwrap();
        let set = subset_of(&g, mask);
        prop_assume!(set.len() >= 2);
        let resolving = Invariant::MetricDim.holds(&g, &dm, &set).unwrap();
        if Invariant::DoublyDim.holds(&g, &dm, &set).unwrap() {
            prop_assert!(resolving);
        }
        if Invariant::StrongDim.holds(&g, &dm, &set).unwrap() {
            prop_assert!(resolving);
        }
    }

    #[test]
    fn solvers_match_oracle(g in connected_graph()) {
        let dm = all_pairs_distances(&g).unwrap();
        let seq = Solver::new(SolverOptions::sequential());
        for inv in Invariant::ALL {
            let fast = seq.pruned(&g, Some(&dm), inv).unwrap();
            let slow = naive_minimum(&g, inv).unwrap();
            prop_assert_eq!(fast.value, slow.value);
            prop_assert_eq!(&fast.witness, &slow.witness);
            prop_assert!(inv.holds(&g, &dm, &fast.witness).unwrap());
        }
        let cover = seq.min_strong_resolving_via_mmd(&g, &dm).unwrap();
        prop_assert_eq!(cover.value, naive_minimum(&g, Invariant::StrongDim).unwrap().value);
        prop_assert!(Invariant::StrongDim.holds(&g, &dm, &cover.witness).unwrap());
    }

    #[test]
    fn families_have_expected_shape(spec in family_spec()) {
        let g = spec.build().unwrap();
        prop_assert_eq!(g.vertex_count(), spec.vertex_count());
        prop_assert!(is_connected(&g));
        let expected_edges = match spec {
            FamilySpec::Cycle { n } => n,
            FamilySpec::Complete { n } => n * (n - 1) / 2,
            FamilySpec::Jellyfish { n, m } => n + n * m,
            FamilySpec::CocktailParty { r } => 2 * r * (r - 1),
            FamilySpec::CayleyZn { n, k } => n * k,
            FamilySpec::CayleyDihedral { n } => 2 * n * (n - 1),
        };
        prop_assert_eq!(g.edge_count(), expected_edges);
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<FamilySpec>().unwrap(), spec);
        let back = parse_edge_list(&to_edge_list_string(&g)).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }
}
