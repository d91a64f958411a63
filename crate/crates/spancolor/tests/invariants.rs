//! Property-based invariants over seeded random inputs.

use proptest::prelude::*;

use spancolor::generators::{graft, random_multigraph};
use spancolor::{format, matching, sp, Caps, Multigraph};

fn arb_graph() -> impl Strategy<Value = Multigraph> {
    (2usize..8, 1usize..10, 1usize..4, any::<u64>()).prop_map(|(n, m, mult, seed)| {
        let m = m.min(mult * n * (n - 1) / 2);
        random_multigraph(n, m, mult, seed).unwrap()
    })
}

/// Random tree on n vertices: vertex i attaches to an earlier vertex.
fn arb_tree() -> impl Strategy<Value = Multigraph> {
    proptest::collection::vec(any::<u32>(), 2..9).prop_map(|picks| {
        let n = picks.len() + 1;
        let edges = picks
            .iter()
            .enumerate()
            .map(|(i, &p)| (p as usize % (i + 1), i + 1))
            .collect();
        Multigraph::new(n, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn serialization_round_trips_on_canonical_form(g in arb_graph()) {
        let text = format::serialize(&g);
        let back = format::parse(&text).unwrap();
        prop_assert_eq!(format::serialize(&back), text);
        prop_assert_eq!(back, format::canonical(&g));
    }

    #[test]
    fn matching_is_valid_and_satisfies_the_deficiency_formula(g in arb_graph()) {
        let m = matching::maximum_matching(&g);
        prop_assert!(m.is_valid(&g));
        let d = matching::tutte_berge_deficiency(&g, &Caps::default()).unwrap();
        prop_assert_eq!(d.value, g.vertex_count() - 2 * m.len());
    }

    #[test]
    fn chromatic_witness_is_proper_and_classically_bounded(g in arb_graph()) {
        let caps = Caps::default();
        let (chi, coloring) = spancolor::coloring::chromatic_index(&g, &caps).unwrap();
        let all: spancolor::EdgeSet = (0..g.edge_count()).collect();
        prop_assert!(coloring.is_proper(&g, &all));
        let delta = g.max_degree();
        prop_assert!(chi >= delta);
        prop_assert!(chi <= (3 * delta / 2).min(delta + g.max_multiplicity()));
    }

    #[test]
    fn sp_lies_between_one_and_the_maximum_degree(g in arb_graph()) {
        prop_assume!(!g.has_isolated_vertex());
        let caps = Caps::default();
        let result = sp::sp_factor_search(&g, &caps).unwrap();
        prop_assert!(result.sp >= 1 && result.sp <= g.max_degree());
        result.factor.validate(&g).unwrap();
        prop_assert!(spancolor::graph::is_spanning(&g, &result.spanning_maximum));
        prop_assert!(result.coloring.is_proper(&g, &result.spanning_maximum));
    }

    #[test]
    fn grafting_adds_p_vertices_and_sets_the_degree_maximum(
        t in arb_tree(),
        p in 2usize..5,
        pick in any::<u32>(),
    ) {
        let below: Vec<usize> = (0..t.vertex_count())
            .filter(|&v| t.degree(v).unwrap() < t.max_degree())
            .collect();
        prop_assume!(!below.is_empty());
        let v = below[pick as usize % below.len()];
        let dv = t.degree(v).unwrap();
        let g = graft(&t, p, v).unwrap();
        prop_assert!(g.tree.is_tree());
        prop_assert_eq!(g.tree.vertex_count(), t.vertex_count() + p);
        prop_assert_eq!(g.tree.max_degree(), t.max_degree().max(p).max(dv + 1));
        prop_assert_eq!(g.tree.degree(g.center).unwrap(), p);
    }

    #[test]
    fn tree_recognizer_agrees_with_the_formula(t in arb_tree()) {
        let caps = Caps::default();
        let certified = spancolor::trees::is_sp_delta_tree(&t).unwrap().certified;
        let formula = sp::sp_formula(&t, &caps).unwrap();
        prop_assert_eq!(certified, formula == t.max_degree());
    }
}
