use forestprob::graph::family::classify;
use forestprob::graph::{are_isomorphic, emit_graph6, parse_edge_list, parse_graph6};
use forestprob::process::{exact_bruteforce, exact_subset_dp, run_ordering};
use forestprob::{Classification, FamilySpec, Graph};
use proptest::prelude::*;

/// A graph on `2..=max_n` vertices with at least one edge.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let k = pairs.len();
            (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), k))
        })
        .prop_filter_map("needs an edge", |(n, pairs, keep)| {
            let edges: Vec<_> = pairs.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            (!edges.is_empty()).then(|| Graph::new(n, edges).unwrap())
        })
        .prop_shuffle_edges()
}

trait ShuffleEdges {
    fn prop_shuffle_edges(self) -> BoxedStrategy<Graph>;
}

impl<S: Strategy<Value = Graph> + 'static> ShuffleEdges for S {
    /// Also randomises the edge order and the orientation of each pair.
    fn prop_shuffle_edges(self) -> BoxedStrategy<Graph> {
        self.prop_flat_map(|g| {
            let m = g.m();
            (Just(g.edges().to_vec()).prop_shuffle(), proptest::collection::vec(any::<bool>(), m), Just(g.n()))
        })
        .prop_map(|(edges, flips, n)| {
            let edges = edges.into_iter().zip(flips).map(|((u, v), f)| if f { (v, u) } else { (u, v) }).collect();
            Graph::new(n, edges).unwrap()
        })
        .boxed()
    }
}

fn with_ordering(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let order: Vec<usize> = (0..g.m()).collect();
        (Just(g), Just(order).prop_shuffle())
    })
}

/// A cycle through every vertex plus random chords, relabelled and with
/// shuffled edges, so every degree is at least two.
fn min_degree_two() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (3..=8usize)
        .prop_flat_map(|n| {
            let chords: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 2..n).map(move |v| (u, v))).filter(|&(u, v)| !(u == 0 && v == n - 1)).collect();
            let k = chords.len();
            (Just(n), Just(chords), proptest::collection::vec(any::<bool>(), k), permutation(n))
        })
        .prop_map(|(n, chords, keep, perm)| {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend(chords.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e));
            Graph::new(n, edges).unwrap().relabel(&perm).unwrap()
        })
        .prop_shuffle_edges()
        .prop_flat_map(|g| {
            let order: Vec<usize> = (0..g.m()).collect();
            (Just(g), Just(order).prop_shuffle())
        })
}

fn family_member() -> impl Strategy<Value = FamilySpec> {
    (0..5u8, 0..6usize, 1..5usize, 0..6usize).prop_map(|(kind, a, b, c)| match kind {
        0 => FamilySpec::Gs(a, b, c),
        1 => FamilySpec::GsPlus(a, b, c),
        2 => FamilySpec::Paw(a),
        3 => FamilySpec::Di(a),
        _ => FamilySpec::K4(a),
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Union-find acyclicity check; returns the number of components touched.
fn forest_components(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return None;
        }
        parent[a] = b;
    }
    let mut covered = vec![false; n];
    for &(u, v) in edges {
        covered[u] = true;
        covered[v] = true;
    }
    let roots: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| covered[v]).map(|v| find(&mut parent, v)).collect();
    Some(roots.len())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn kept_edges_form_a_forest((g, order) in with_ordering(9)) {
        let r = run_ordering(&g, &order).unwrap();
        let kept: Vec<(usize, usize)> = r.kept.iter().map(|&i| g.edges()[i]).collect();
        let components = forest_components(g.n(), &kept);
        prop_assert_eq!(components, Some(r.trees));
        let mut covered: Vec<usize> = kept.iter().flat_map(|&(u, v)| [u, v]).collect();
        covered.sort_unstable();
        covered.dedup();
        prop_assert_eq!(r.trees, covered.len() - kept.len());
        // every vertex with an edge ends up covered
        prop_assert_eq!(covered.len(), g.strip_isolated().n());
    }

    #[test]
    fn last_edge_dropped_when_min_degree_two((g, order) in min_degree_two()) {
        prop_assert!(g.degrees().iter().all(|&d| d >= 2));
        let r = run_ordering(&g, &order).unwrap();
        prop_assert!(!r.kept.contains(order.last().unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dp_matches_brute_force(g in graph(7).prop_filter("m <= 9", |g| g.m() <= 9)) {
        let dp = exact_subset_dp(&g).unwrap();
        prop_assert!(dp.is_normalized());
        prop_assert!(dp.has_contiguous_support());
        prop_assert_eq!(dp, exact_bruteforce(&g).unwrap());
    }

    #[test]
    fn relabelling_preserves_everything((g, perm) in graph(8).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&perm).unwrap();
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(g.degree_sequence(), h.degree_sequence());
        prop_assert_eq!(g.max_disjoint_edges_capped(3), h.max_disjoint_edges_capped(3));
        prop_assert_eq!(exact_subset_dp(&g).unwrap(), exact_subset_dp(&h).unwrap());
        let (g, h) = (g.strip_isolated(), h.strip_isolated());
        prop_assert_eq!(classify(&g).unwrap(), classify(&h).unwrap());
    }

    #[test]
    fn removing_an_edge_breaks_isomorphism(g in graph(8)) {
        let h = g.without_edge(0);
        prop_assert!(!are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert!(are_isomorphic(&g, &back).unwrap());
        prop_assert_eq!(emit_graph6(&back), text);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let text: String = g.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect();
        let text = format!("n={}\n{text}", g.n());
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn family_members_are_recognised((spec, perm) in family_member().prop_flat_map(|spec| {
        let n = spec.vertex_count();
        (Just(spec), permutation(n))
    })) {
        let h = spec.construct().unwrap().relabel(&perm).unwrap();
        prop_assert_eq!(classify(&h).unwrap(), Classification::Family(spec.canonical()));
    }
}
