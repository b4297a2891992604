mod common;

use alon_tarsi::blocks::is_gallai_tree;
use alon_tarsi::canon::{canonical_form, canonical_form_colored};
use alon_tarsi::classify::{classify_connected, classify_degree_at, find_at_witness_subgraph};
use alon_tarsi::color::{bad_lists_for_pair, is_f_choosable, is_f_paintable};
use alon_tarsi::euler::{eulerian_counts_dp, eulerian_counts_subsets};
use alon_tarsi::graph6::{emit_graph6, parse_graph6};
use alon_tarsi::search::{is_f_at, is_pair_at};
use alon_tarsi::transfer::stretch_transfer_check;
use alon_tarsi::{DegreeBound, Graph, LabeledPair, Orientation};
use common::*;
use proptest::prelude::*;

fn arb_bound(g: &Graph, lo: u32) -> impl Strategy<Value = DegreeBound> {
    let caps: Vec<u32> = g.degrees().iter().map(|&d| d as u32 + 1).collect();
    caps.into_iter()
        .map(move |c| lo..=c.max(lo))
        .collect::<Vec<_>>()
        .prop_map(DegreeBound)
}

fn graph_and_bound(n: std::ops::RangeInclusive<usize>, connected: bool) -> impl Strategy<Value = (Graph, DegreeBound)> {
    arb_graph(n, connected).prop_flat_map(|g| {
        let b = arb_bound(&g, 1);
        (Just(g), b)
    })
}

fn marked_pair(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = LabeledPair> {
    arb_graph(n, true)
        .prop_flat_map(|g| {
            let n = g.n();
            (Just(g), 0..n)
        })
        .prop_map(|(g, x)| LabeledPair::marked(g, x).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in arb_graph(0..=12, false)) {
        let s = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn orientation_search_matches_brute_force((g, f) in graph_and_bound(1..=5, false)) {
        prop_assert_eq!(is_f_at(&g, &f).unwrap().is_some(), brute_f_at(&g, &f));
    }

    #[test]
    fn euler_routes_agree(g in arb_graph(2..=7, false), bits in any::<u64>()) {
        let reversed: Vec<bool> = (0..g.m()).map(|i| bits >> (i % 64) & 1 == 1).collect();
        let d = Orientation::new(g.clone(), reversed).unwrap();
        let a = eulerian_counts_subsets(&d).unwrap();
        prop_assert_eq!(a, eulerian_counts_dp(&d).unwrap());
        if g.m() <= 12 {
            let r = (0..g.m()).fold(0u64, |acc, i| acc | ((bits >> (i % 64) & 1) << i));
            prop_assert_eq!(a.difference(), brute_difference(&g, r) as i128);
        }
    }

    /// Verdicts and case tags do not depend on vertex names.
    #[test]
    fn isomorphism_invariance(
        (g, x, perms) in arb_graph(2..=7, true).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), 0..n, proptest::collection::vec(arb_permutation(n), 20))
        })
    ) {
        let base = classify_connected(&LabeledPair::marked(g.clone(), x).unwrap()).unwrap();
        let gallai = is_gallai_tree(&g).unwrap();
        let degree = classify_degree_at(&g).unwrap();
        let key = canonical_form(&g).unwrap();
        for p in perms {
            let h = g.relabel(&p);
            let c = classify_connected(&LabeledPair::marked(h.clone(), p[x]).unwrap()).unwrap();
            prop_assert_eq!((c.at, c.case), (base.at, base.case));
            prop_assert_eq!(is_gallai_tree(&h).unwrap(), gallai);
            let dh = classify_degree_at(&h).unwrap();
            prop_assert_eq!((dh.at, dh.case), (degree.at, degree.case));
            prop_assert_eq!(canonical_form(&h).unwrap(), key.clone());
        }
    }

    #[test]
    fn colored_canonical_form_matches_brute_force(
        (g, colors, p) in arb_graph(1..=6, false).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), proptest::collection::vec(0u32..3, n), arb_permutation(n))
        })
    ) {
        let h = g.relabel(&p);
        let mut hc = vec![0; g.n()];
        for v in 0..g.n() {
            hc[p[v]] = colors[v];
        }
        prop_assert_eq!(canonical_form_colored(&g, &colors).unwrap(), canonical_form_colored(&h, &hc).unwrap());
        prop_assert_eq!(brute_canonical(&g, &colors), brute_canonical(&h, &hc));
    }

    /// Beyond the exhaustive range: every verdict comes with a certificate.
    #[test]
    fn connected_classifier_is_constructive(p in marked_pair(2..=8)) {
        let c = classify_connected(&p).unwrap();
        prop_assert_eq!(c.at, is_pair_at(&p).unwrap().is_some());
        if c.at {
            let w = find_at_witness_subgraph(&p).unwrap();
            prop_assert!(w.counts.is_at());
        } else {
            let l = bad_lists_for_pair(&p).unwrap();
            prop_assert!(!brute_colorable(&p.graph, &l.lists));
            let f = p.degree_bound();
            for v in 0..p.graph.n() {
                prop_assert_eq!(l.lists[v].len() as u32, f[v]);
            }
        }
    }

    #[test]
    fn degree_at_iff_not_gallai(g in arb_graph(1..=8, true)) {
        let at = is_pair_at(&LabeledPair::zero(g.clone())).unwrap().is_some();
        prop_assert_eq!(at, !is_gallai_tree(&g).unwrap());
    }

    /// More tokens never hurt Painter.
    #[test]
    fn paint_monotone(
        (g, f, bump) in graph_and_bound(1..=6, false).prop_flat_map(|(g, f)| {
            let n = g.n();
            (Just(g), Just(f), proptest::collection::vec(0u32..2, n))
        })
    ) {
        let f2 = DegreeBound(f.0.iter().zip(&bump).map(|(a, b)| a + b).collect());
        if is_f_paintable(&g, &f).unwrap() {
            prop_assert!(is_f_paintable(&g, &f2).unwrap());
        }
    }

    /// AT implies paintable implies choosable.
    #[test]
    fn colorability_chain((g, f) in graph_and_bound(1..=5, false)) {
        let at = is_f_at(&g, &f).unwrap().is_some();
        let paint = is_f_paintable(&g, &f).unwrap();
        let bad = is_f_choosable(&g, &f).unwrap();
        prop_assert!(!at || paint);
        prop_assert!(!paint || bad.is_none());
        if let Some(l) = bad {
            prop_assert!(!brute_colorable(&g, &l.lists));
        }
    }

    #[test]
    fn stretching_transfers(
        (g, labels, e) in arb_graph(2..=5, true)
            .prop_filter("needs an edge", |g| g.m() > 0)
            .prop_flat_map(|g| {
                let n = g.n();
                let m = g.m();
                (Just(g), proptest::collection::vec(0u32..2, n), 0..m)
            })
    ) {
        let p = LabeledPair::new(g, labels).unwrap();
        prop_assert!(stretch_transfer_check(&p, e).unwrap().holds());
    }
}
