use std::time::Instant;

use crate::check::pmc_test;
use crate::graph::Graph;
use crate::metrics::{Meter, Metrics};
use crate::vertex_set::VertexSet;

use super::gen::GenCursor;
use super::{Algorithm, EnumOptions, Run};

/// Incremental enumeration without duplicates.
///
/// Each level `Π_i` is an append-only list: extensions of `Π_{i-1}` first,
/// then the separator-derived candidates that pass every gate. No lookup
/// structure is consulted before appending.
pub fn enumerate_nondup(g: &Graph) -> Run {
    enumerate_nondup_with(g, &EnumOptions::default())
}

pub fn enumerate_nondup_with(g: &Graph, options: &EnumOptions) -> Run {
    let start = Instant::now();
    let meter = Meter::shared();
    let config = options.gen_config();
    let mut level: Vec<VertexSet> = Vec::new();
    if g.n() > 0 {
        level.push(VertexSet::singleton(g.vertex_at(1)));
        meter.hold(1);
    }
    for i in 2..=g.n() {
        let view = g.prefix_unchecked(i);
        let vi = g.vertex_at(i);
        let mut next = Vec::new();
        for pi in &level {
            let grown = pi.with(vi);
            meter.count_pmc_test();
            if pmc_test(&view, &grown) {
                next.push(grown);
                meter.hold(1);
            }
            meter.count_pmc_test();
            if pmc_test(&view, pi) {
                next.push(*pi);
                meter.hold(1);
            }
        }
        let mut gen = GenCursor::new(g, i, config, meter.clone());
        while let Some(d) = gen.next_candidate() {
            next.push(d);
            meter.hold(1);
        }
        drop(gen);
        meter.release(level.len());
        level = next;
    }
    let metrics = Metrics::from_meter(&meter, level.len() as u64, start.elapsed());
    Run {
        algorithm: Algorithm::Nondup,
        pmcs: level,
        metrics,
    }
}
