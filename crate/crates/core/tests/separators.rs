mod common;

use std::collections::BTreeSet;

use pmc_core::families::{all_labeled_graphs, gen_family, Family};
use pmc_core::metrics::Meter;
use pmc_core::{
    is_minimal_separator, separators, separators_oracle, Graph, SeparatorStream, VertexSet,
};

use common::{random_corpus, repeats};

fn stream_matches_oracle(g: &Graph) {
    for i in 1..=g.n() {
        let view = g.prefix(i).unwrap();
        let got: Vec<VertexSet> = separators(&view).collect();
        assert_eq!(
            repeats(&got),
            0,
            "repeat at level {i}\n{}",
            g.to_edge_list()
        );
        let want = separators_oracle(&view).unwrap();
        assert_eq!(
            got.into_iter().collect::<BTreeSet<_>>(),
            want,
            "level {i}\n{}",
            g.to_edge_list()
        );
    }
}

#[test]
fn every_graph_up_to_five_vertices() {
    for n in 1..=5 {
        for g in all_labeled_graphs(n) {
            stream_matches_oracle(&g);
        }
    }
}

#[test]
fn random_graphs_with_shuffled_orderings() {
    for (idx, (_, g)) in random_corpus().into_iter().enumerate().step_by(2) {
        stream_matches_oracle(&g.with_seeded_ordering(idx as u64));
    }
}

#[test]
fn membership_test_matches_definition() {
    for g in all_labeled_graphs(5) {
        let view = g.view();
        let want = separators_oracle(&view).unwrap();
        for mask in 0u32..32 {
            let s: VertexSet = (1..=5).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            assert_eq!(
                is_minimal_separator(&view, &s),
                want.contains(&s),
                "{s:?}\n{}",
                g.to_edge_list()
            );
        }
    }
}

#[test]
fn runs_are_deterministic() {
    let g = gen_family(&Family::Random {
        n: 12,
        p: 0.3,
        seed: 4,
    })
    .unwrap();
    let a: Vec<VertexSet> = separators(&g.view()).collect();
    let b: Vec<VertexSet> = separators(&g.view()).collect();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn theta_space_stays_cubic() {
    for k in 2..=10 {
        let g = gen_family(&Family::Theta { k }).unwrap();
        let n = g.n();
        let meter = Meter::shared();
        let count = SeparatorStream::new(g.view(), meter.clone()).count();
        // one internal vertex per path, plus the hub pair and mixed choices
        assert!(count >= 1 << k);
        assert!(
            meter.peak_sets() <= 2 * n * n,
            "k={k}: peak {}",
            meter.peak_sets()
        );
        assert_eq!(meter.live_sets(), 0);
    }
}
