//! Polynomial-space enumeration of the minimal separators of a graph.
//!
//! Every minimal separator `S` of a view has at least two full components,
//! and for a fixed component `A` of `G \ S` we have `S = N(A)`. The stream
//! therefore enumerates pairs `(root, A)` where `A` is a connected set with
//! smallest vertex `root` and `N(A)` is a minimal separator having `A` as a
//! full component. A separator is emitted only from the full component
//! holding the smallest vertex of all its full components, so each one is
//! produced once without remembering earlier outputs.
//!
//! For a fixed root the sets `A` are found by a binary-partition search
//! over `(inside, outside)` constraints. A node is expanded only if some
//! solution `A` with `inside ⊆ A` and `A ∩ outside = ∅` exists. That test is
//! exact: for every component `D` of `G \ N[inside]`, take the component of
//! `root` in `G \ N(D)`. This is the smallest admissible `A` that keeps `D`
//! on the other side, and a solution exists iff one of these avoids
//! `outside`. Each node has at least one solution below it and the search
//! depth is at most `n`, so the delay is polynomial and the stack holds at
//! most `n + 1` frames of two sets each.

use std::collections::BTreeSet;
use std::rc::Rc;

use crate::error::OracleError;
use crate::graph::GraphView;
use crate::metrics::Meter;
use crate::vertex_set::{Vertex, VertexSet};

/// Default largest `n` accepted by [`separators_oracle`].
pub const SEPARATOR_ORACLE_BUDGET: usize = 15;

const SETS_PER_FRAME: usize = 2;

#[derive(Clone, Copy, Debug)]
struct Frame {
    inside: VertexSet,
    outside: VertexSet,
}

/// A resumable stream over the minimal separators of a view.
///
/// Output order is deterministic: grouped by the smallest vertex of the
/// canonical full component, ascending, then in search order.
pub struct SeparatorStream<'g> {
    view: GraphView<'g>,
    meter: Rc<Meter>,
    roots: VertexSet,
    root: Vertex,
    stack: Vec<Frame>,
}

/// Starts a stream over the minimal separators of `view`.
pub fn separators<'g>(view: &GraphView<'g>) -> SeparatorStream<'g> {
    SeparatorStream::new(*view, Meter::shared())
}

impl<'g> SeparatorStream<'g> {
    /// A stream reporting into `meter`.
    pub fn new(view: GraphView<'g>, meter: Rc<Meter>) -> Self {
        // the pending-root cursor
        meter.hold(1);
        SeparatorStream {
            view,
            meter,
            roots: view.vertices(),
            root: 0,
            stack: Vec::new(),
        }
    }

    pub fn view(&self) -> &GraphView<'g> {
        &self.view
    }

    /// Vertex sets currently held by this stream.
    pub fn retained_sets(&self) -> usize {
        1 + SETS_PER_FRAME * self.stack.len()
    }

    fn push(&mut self, frame: Frame) {
        self.meter.hold(SETS_PER_FRAME);
        self.stack.push(frame);
    }

    fn pop(&mut self) -> Option<Frame> {
        let f = self.stack.pop()?;
        self.meter.release(SETS_PER_FRAME);
        Some(f)
    }

    /// Whether some connected `A ⊇ inside` avoiding `outside` has `N(A)` as
    /// a minimal separator with `A` full.
    fn admits_solution(&self, inside: &VertexSet, outside: &VertexSet) -> bool {
        let view = &self.view;
        let closed = view.closed_neighborhood(inside);
        let mut rest = view.vertices().difference(&closed);
        while let Some(v) = rest.first() {
            let d = view.component_containing(v, &rest);
            rest = rest.difference(&d);
            let boundary = view.neighborhood(&d);
            let allowed = view.vertices().difference(&boundary);
            let a = view.component_containing(self.root, &allowed);
            if a.is_disjoint(outside) {
                return true;
            }
        }
        false
    }

    /// Whether `side` holds the smallest vertex over all full components of
    /// `s = N(side)`.
    fn is_canonical(&self, s: &VertexSet, side: &VertexSet) -> bool {
        let view = &self.view;
        // Only vertices below the root can beat it.
        let mut rest = view.vertices().difference(s).difference(side);
        while let Some(v) = rest.first() {
            if v > self.root {
                break;
            }
            let c = view.component_containing(v, &rest);
            rest = rest.difference(&c);
            if view.is_full(&c, s) {
                return false;
            }
        }
        true
    }

    fn start_next_root(&mut self) -> bool {
        while let Some(root) = self.roots.first() {
            self.roots.remove(root);
            self.root = root;
            let outside = self
                .view
                .vertices()
                .iter()
                .take_while(|&u| u < root)
                .collect::<VertexSet>();
            let frame = Frame {
                inside: VertexSet::singleton(root),
                outside,
            };
            if self.admits_solution(&frame.inside, &frame.outside) {
                self.push(frame);
                return true;
            }
        }
        false
    }
}

impl Iterator for SeparatorStream<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let Some(frame) = self.pop() else {
                if self.start_next_root() {
                    continue;
                }
                return None;
            };
            let boundary = self.view.neighborhood(&frame.inside);
            match boundary.difference(&frame.outside).first() {
                None => {
                    // Every larger A would meet `outside`: A = inside.
                    if self.is_canonical(&boundary, &frame.inside) {
                        self.meter.count_separator();
                        return Some(boundary);
                    }
                }
                Some(v) => {
                    let excluded = Frame {
                        inside: frame.inside,
                        outside: frame.outside.with(v),
                    };
                    let included = Frame {
                        inside: frame.inside.with(v),
                        outside: frame.outside,
                    };
                    if self.admits_solution(&excluded.inside, &excluded.outside) {
                        self.push(excluded);
                    }
                    if self.admits_solution(&included.inside, &included.outside) {
                        self.push(included);
                    }
                }
            }
        }
    }
}

impl Drop for SeparatorStream<'_> {
    fn drop(&mut self) {
        self.meter.release(1 + SETS_PER_FRAME * self.stack.len());
    }
}

/// All minimal separators of `view` by exhaustive subset scan, straight from
/// the definition: `S` is a minimal `(a, b)`-separator when `a` and `b` lie
/// in different components of `G \ S` and, for every `s ∈ S`, they are
/// connected in `G \ (S \ {s})`.
pub fn separators_oracle(view: &GraphView<'_>) -> Result<BTreeSet<VertexSet>, OracleError> {
    separators_oracle_with_budget(view, SEPARATOR_ORACLE_BUDGET)
}

pub fn separators_oracle_with_budget(
    view: &GraphView<'_>,
    budget: usize,
) -> Result<BTreeSet<VertexSet>, OracleError> {
    let members = view.vertices().to_vec();
    let n = members.len();
    if n > budget {
        return Err(OracleError::BudgetExceeded { n, budget });
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << n) {
        let s: VertexSet = (0..n)
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| members[b])
            .collect();
        if separates_some_pair_minimally(view, &s) {
            out.insert(s);
        }
    }
    Ok(out)
}

fn connected_avoiding(view: &GraphView<'_>, a: Vertex, b: Vertex, removed: &VertexSet) -> bool {
    let allowed = view.vertices().difference(removed);
    view.component_containing(a, &allowed).contains(b)
}

fn separates_some_pair_minimally(view: &GraphView<'_>, s: &VertexSet) -> bool {
    let rest = view.vertices().difference(s).to_vec();
    for (i, &a) in rest.iter().enumerate() {
        for &b in &rest[i + 1..] {
            if connected_avoiding(view, a, b, s) {
                continue;
            }
            if s.iter()
                .all(|x| connected_avoiding(view, a, b, &s.without(x)))
            {
                return true;
            }
        }
    }
    false
}
