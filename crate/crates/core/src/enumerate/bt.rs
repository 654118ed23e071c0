use std::collections::HashSet;
use std::time::Instant;

use crate::check::pmc_test;
use crate::graph::Graph;
use crate::metrics::{Meter, Metrics};
use crate::vertex_set::VertexSet;

use super::gen::{GenConfig, GenCursor};
use super::{Algorithm, GateSet, Run};

/// The original incremental algorithm.
///
/// `Π_{i-1}` and `Π_i` are kept in hash sets, so memory grows with the
/// number of PMCs. The returned list is sorted.
pub fn enumerate_bt(g: &Graph) -> Run {
    let start = Instant::now();
    let meter = Meter::shared();
    let config = GenConfig {
        gates: GateSet::none(),
        restart_check_last: false,
    };
    let mut level: HashSet<VertexSet> = HashSet::new();
    if g.n() > 0 {
        level.insert(VertexSet::singleton(g.vertex_at(1)));
        meter.hold(1);
    }
    for i in 2..=g.n() {
        let view = g.prefix_unchecked(i);
        let vi = g.vertex_at(i);
        let mut next: HashSet<VertexSet> = HashSet::new();
        let add = |set: VertexSet, next: &mut HashSet<VertexSet>| {
            if next.insert(set) {
                meter.hold(1);
            }
        };
        for pi in &level {
            let grown = pi.with(vi);
            meter.count_pmc_test();
            if pmc_test(&view, &grown) {
                add(grown, &mut next);
            }
            meter.count_pmc_test();
            if pmc_test(&view, pi) {
                add(*pi, &mut next);
            }
        }
        let mut gen = GenCursor::new(g, i, config, meter.clone());
        while let Some(d) = gen.next_candidate() {
            add(d, &mut next);
        }
        drop(gen);
        meter.release(level.len());
        level = next;
    }
    let mut pmcs: Vec<VertexSet> = level.into_iter().collect();
    pmcs.sort();
    let metrics = Metrics::from_meter(&meter, pmcs.len() as u64, start.elapsed());
    Run {
        algorithm: Algorithm::Bt,
        pmcs,
        metrics,
    }
}
