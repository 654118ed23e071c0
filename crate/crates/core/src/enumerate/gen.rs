//! Generation of the new PMCs of one prefix graph from its minimal
//! separators.
//!
//! For level `i` the cursor walks `S ∈ Δ_i` (outer), `T ∈ Δ_i` (inner) and
//! the full components `C` of `S` in `G_i` (innermost), proposing `S ∪ {v_i}`
//! once per `S` and `S ∪ (T ∩ C)` once per triple. Which proposals survive
//! is decided by the [`GateSet`]. With every gate active each PMC of `G_i`
//! that is not the extension of a PMC of `G_{i-1}` is produced exactly once.
//! With none active the cursor reproduces the original incremental
//! algorithm, duplicates included.

use std::rc::Rc;

use crate::check::{is_minimal_separator, pmc_test};
use crate::graph::{Graph, GraphView};
use crate::metrics::Meter;
use crate::separators::SeparatorStream;
use crate::vertex_set::{Vertex, VertexSet};

use super::{Gate, GateSet};

#[derive(Clone, Copy, Debug)]
pub(crate) struct GenConfig {
    pub gates: GateSet,
    /// Evaluate the restart check after the cheap gates instead of right
    /// after the `G_i` test.
    pub restart_check_last: bool,
}

pub(crate) struct GenCursor<'g> {
    level: usize,
    vi: Vertex,
    view: GraphView<'g>,
    prev: Option<GraphView<'g>>,
    config: GenConfig,
    meter: Rc<Meter>,
    started: bool,
    outer: Option<SeparatorStream<'g>>,
    current_s: Option<VertexSet>,
    full_components: Vec<VertexSet>,
    inner: Option<SeparatorStream<'g>>,
    current_t: Option<VertexSet>,
    next_component: usize,
}

impl<'g> GenCursor<'g> {
    pub fn new(graph: &'g Graph, level: usize, config: GenConfig, meter: Rc<Meter>) -> Self {
        debug_assert!(level >= 1 && level <= graph.n());
        GenCursor {
            level,
            vi: graph.vertex_at(level),
            view: graph.prefix_unchecked(level),
            prev: (level > 1).then(|| graph.prefix_unchecked(level - 1)),
            config,
            meter,
            started: false,
            outer: None,
            current_s: None,
            full_components: Vec::new(),
            inner: None,
            current_t: None,
            next_component: 0,
        }
    }

    fn pmc(&self, view: &GraphView<'_>, k: &VertexSet) -> bool {
        self.meter.count_pmc_test();
        pmc_test(view, k)
    }

    fn set_current_s(&mut self, s: Option<VertexSet>) {
        if self.current_s.is_some() {
            self.meter.release(1);
        }
        if s.is_some() {
            self.meter.hold(1);
        }
        self.current_s = s;
    }

    fn set_current_t(&mut self, t: Option<VertexSet>) {
        if self.current_t.is_some() {
            self.meter.release(1);
        }
        if t.is_some() {
            self.meter.hold(1);
        }
        self.current_t = t;
        self.next_component = 0;
    }

    fn set_components(&mut self, comps: Vec<VertexSet>) {
        self.meter.release(self.full_components.len());
        self.meter.hold(comps.len());
        self.full_components = comps;
    }

    /// The next surviving candidate, or `None` once `Δ_i` is exhausted.
    pub fn next_candidate(&mut self) -> Option<VertexSet> {
        let prev = match self.prev {
            Some(p) => p,
            None => {
                // G_1 has the single PMC {v_1}.
                if self.started {
                    return None;
                }
                self.started = true;
                return Some(VertexSet::singleton(self.vi));
            }
        };
        if !self.started {
            self.started = true;
            self.outer = Some(SeparatorStream::new(self.view, self.meter.clone()));
        }
        loop {
            if let (Some(s), Some(t)) = (self.current_s, self.current_t) {
                while self.next_component < self.full_components.len() {
                    let c = self.full_components[self.next_component];
                    self.next_component += 1;
                    if let Some(d) = self.try_triple(&prev, s, t, c) {
                        return Some(d);
                    }
                }
                self.set_current_t(None);
            }
            if let Some(inner) = self.inner.as_mut() {
                if let Some(t) = inner.next() {
                    self.set_current_t(Some(t));
                    continue;
                }
                self.inner = None;
            }
            let s = self.outer.as_mut()?.next();
            self.set_current_s(s);
            let Some(s) = s else {
                self.set_components(Vec::new());
                self.outer = None;
                return None;
            };

            let grown = s.with(self.vi);
            let grown_survives = self.pmc(&self.view, &grown)
                && (!self.config.gates.contains(Gate::SeparatorNotPrevPmc) || !self.pmc(&prev, &s));

            if !s.contains(self.vi) && !is_minimal_separator(&prev, &s) {
                let report = self.view.components_of(&s);
                let comps: Vec<VertexSet> = report.full_components().copied().collect();
                self.set_components(comps);
                self.inner = Some(SeparatorStream::new(self.view, self.meter.clone()));
            } else {
                self.set_components(Vec::new());
            }

            if grown_survives {
                return Some(grown);
            }
        }
    }

    fn try_triple(
        &self,
        prev: &GraphView<'_>,
        s: VertexSet,
        t: VertexSet,
        c: VertexSet,
    ) -> Option<VertexSet> {
        let gates = self.config.gates;
        let tc = t.intersection(&c);
        let d = s.union(&tc);
        if !self.pmc(&self.view, &d) {
            return None;
        }
        let check_restart = gates.contains(Gate::NotYetSeen);
        if check_restart && !self.config.restart_check_last && !self.not_yet_seen(&d, &s, &t, &c) {
            return None;
        }
        if gates.contains(Gate::CandidateNotPrevPmc) && self.pmc(prev, &d) {
            return None;
        }
        if gates.contains(Gate::NotSingleNewVertex) && tc == VertexSet::singleton(self.vi) {
            return None;
        }
        if tc.contains(self.vi) && gates.contains(Gate::NewVertexCheck) {
            let rest = d.without(self.vi);
            if self.pmc(prev, &rest) || is_minimal_separator(&self.view, &rest) {
                return None;
            }
        }
        if check_restart && self.config.restart_check_last && !self.not_yet_seen(&d, &s, &t, &c) {
            return None;
        }
        Some(d)
    }

    /// Whether `(s, t, c)` is the first triple, in loop order, producing `d`.
    ///
    /// The separator loops are restarted from scratch; nothing about earlier
    /// triples is remembered. Separators not contained in `d` cannot produce
    /// it and are skipped without running the inner loop.
    pub fn not_yet_seen(&self, d: &VertexSet, s: &VertexSet, t: &VertexSet, c: &VertexSet) -> bool {
        let prev = self.prev.expect("restart check needs a previous level");
        for s2 in SeparatorStream::new(self.view, self.meter.clone()) {
            let is_current = s2 == *s;
            if !s2.is_subset(d) || s2.contains(self.vi) || is_minimal_separator(&prev, &s2) {
                debug_assert!(!is_current);
                continue;
            }
            let target = d.difference(&s2);
            let comps: Vec<VertexSet> = self
                .view
                .components_of(&s2)
                .full_components()
                .copied()
                .collect();
            if !is_current && !comps.iter().any(|c2| target.is_subset(c2)) {
                continue;
            }
            self.meter.hold(comps.len());
            let verdict = self.first_match(&comps, &target, is_current.then_some((t, c)));
            self.meter.release(comps.len());
            match verdict {
                Some(found_current) => return found_current,
                None => debug_assert!(!is_current),
            }
        }
        unreachable!("restart never reached the current triple")
    }

    /// Runs the `T` and `C` loops for one `S`. Returns `Some(true)` on
    /// reaching the current `(t, c)`, `Some(false)` on an earlier match.
    fn first_match(
        &self,
        comps: &[VertexSet],
        target: &VertexSet,
        current: Option<(&VertexSet, &VertexSet)>,
    ) -> Option<bool> {
        for t2 in SeparatorStream::new(self.view, self.meter.clone()) {
            for c2 in comps {
                if let Some((t, c)) = current {
                    if t2 == *t && c2 == c {
                        return Some(true);
                    }
                }
                if target.is_subset(c2) && t2.intersection(c2) == *target {
                    return Some(false);
                }
            }
        }
        None
    }

    pub fn level(&self) -> usize {
        self.level
    }
}

impl Drop for GenCursor<'_> {
    fn drop(&mut self) {
        let held = self.current_s.is_some() as usize
            + self.current_t.is_some() as usize
            + self.full_components.len();
        self.meter.release(held);
    }
}
