//! Brute-force ground truth for small graphs.
//!
//! Two oracles compute the PMCs of a view independently:
//!
//! * [`pmc_oracle_triangulation`] follows the definition. It runs the
//!   elimination game for every vertex ordering, minimises each
//!   triangulation, and collects the maximal cliques. Every minimal
//!   triangulation is the elimination game of one of its perfect
//!   elimination orderings, so all of them are reached.
//! * [`pmc_oracle_scan`] tests every non-empty subset with the
//!   full-component characterisation.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::check::pmc_test;
use crate::error::OracleError;
use crate::graph::{Graph, GraphView};
use crate::vertex_set::{Vertex, VertexSet};

/// Largest `n` accepted by [`pmc_oracle_triangulation`] (`n!` orderings).
pub const TRIANGULATION_ORACLE_BUDGET: usize = 7;
/// Largest `n` accepted by [`pmc_oracle_scan`] (`2^n` subsets).
pub const SCAN_ORACLE_BUDGET: usize = 15;

/// A chordal supergraph `H = (V, E ∪ F)` of a view, with a perfect
/// elimination ordering of `H` as its certificate.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub base: Graph,
    /// Vertex set of the triangulated view.
    pub vertices: VertexSet,
    /// Fill edges `(u, v)` with `u < v`.
    pub fill: BTreeSet<(Vertex, Vertex)>,
    pub elimination_order: Vec<Vertex>,
}

impl Triangulation {
    fn adjacency_with(&self, fill: &BTreeSet<(Vertex, Vertex)>) -> Vec<VertexSet> {
        let mut adj: Vec<VertexSet> = (1..=self.base.n())
            .map(|v| {
                if self.vertices.contains(v) {
                    self.base.neighbors(v).intersection(&self.vertices)
                } else {
                    VertexSet::new()
                }
            })
            .collect();
        for &(u, v) in fill {
            adj[u - 1].insert(v);
            adj[v - 1].insert(u);
        }
        adj
    }

    /// Adjacency of `H`, indexed by `label - 1`.
    pub fn adjacency(&self) -> Vec<VertexSet> {
        self.adjacency_with(&self.fill)
    }

    /// Checks that the stored ordering is a perfect elimination ordering of
    /// `H`.
    pub fn is_certified(&self) -> bool {
        let mut covered = VertexSet::new();
        for &v in &self.elimination_order {
            covered.insert(v);
        }
        covered == self.vertices
            && self.elimination_order.len() == self.vertices.len()
            && is_perfect_elimination_order(&self.adjacency(), &self.elimination_order)
    }

    /// No single fill edge can be dropped while staying chordal.
    pub fn is_minimal(&self) -> bool {
        self.fill.iter().all(|e| {
            let mut fewer = self.fill.clone();
            fewer.remove(e);
            chordal_order(&self.adjacency_with(&fewer), self.vertices).is_none()
        })
    }

    /// No proper subset of the fill is a triangulation. Exponential in the
    /// fill size; intended for graphs with at most five vertices.
    pub fn is_minimal_exhaustive(&self) -> bool {
        let fill: Vec<_> = self.fill.iter().copied().collect();
        let full = (1u64 << fill.len()) - 1;
        (0..full).all(|mask| {
            let subset: BTreeSet<_> = (0..fill.len())
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| fill[b])
                .collect();
            chordal_order(&self.adjacency_with(&subset), self.vertices).is_none()
        })
    }

    /// Maximal cliques of `H`, read off the elimination ordering: each
    /// vertex together with its later neighbours, keeping the
    /// inclusion-maximal ones.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let adj = self.adjacency();
        let mut later = self.vertices;
        let mut candidates = Vec::new();
        for &v in &self.elimination_order {
            later.remove(v);
            candidates.push(adj[v - 1].intersection(&later).with(v));
        }
        let mut out: Vec<VertexSet> = candidates
            .iter()
            .filter(|c| !candidates.iter().any(|d| d != *c && c.is_subset(d)))
            .copied()
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn is_perfect_elimination_order(adj: &[VertexSet], order: &[Vertex]) -> bool {
    let mut later: VertexSet = order.iter().copied().collect();
    for &v in order {
        later.remove(v);
        let nb = adj[v - 1].intersection(&later);
        for u in nb {
            if !nb.without(u).is_subset(&adj[u - 1]) {
                return false;
            }
        }
    }
    true
}

/// A perfect elimination ordering of the graph on `vertices` given by `adj`,
/// or `None` if it is not chordal. Uses maximum cardinality search.
pub fn chordal_order(adj: &[VertexSet], vertices: VertexSet) -> Option<Vec<Vertex>> {
    let mut numbered = VertexSet::new();
    let mut visit = Vec::with_capacity(vertices.len());
    while numbered != vertices {
        let v = vertices
            .difference(&numbered)
            .iter()
            .max_by_key(|&u| {
                (
                    adj[u - 1].intersection(&numbered).len(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("unnumbered vertex");
        numbered.insert(v);
        visit.push(v);
    }
    visit.reverse();
    is_perfect_elimination_order(adj, &visit).then_some(visit)
}

/// Eliminates the vertices of `view` in `order`, turning each eliminated
/// vertex's remaining neighbourhood into a clique.
pub fn elimination_game(view: &GraphView<'_>, order: &[Vertex]) -> Triangulation {
    let vertices = view.vertices();
    assert_eq!(
        order.iter().copied().collect::<VertexSet>(),
        vertices,
        "order must be a permutation of the view"
    );
    assert_eq!(
        order.len(),
        vertices.len(),
        "order must not repeat vertices"
    );
    let mut adj: Vec<VertexSet> = (1..=view.graph().n())
        .map(|v| {
            if vertices.contains(v) {
                view.neighbors(v)
            } else {
                VertexSet::new()
            }
        })
        .collect();
    let mut remaining = vertices;
    let mut fill = BTreeSet::new();
    for &v in order {
        remaining.remove(v);
        let nb = adj[v - 1].intersection(&remaining);
        for (a, b) in nb.iter().tuple_combinations() {
            if !adj[a - 1].contains(b) {
                adj[a - 1].insert(b);
                adj[b - 1].insert(a);
                fill.insert((a, b));
            }
        }
    }
    Triangulation {
        base: view.graph().clone(),
        vertices,
        fill,
        elimination_order: order.to_vec(),
    }
}

/// Drops fill edges one at a time, always the lexicographically smallest
/// removable one, until every remaining fill edge is needed for
/// chordality.
pub fn minimize_triangulation(t: &Triangulation) -> Triangulation {
    let mut fill = t.fill.clone();
    let mut order = t.elimination_order.clone();
    'outer: loop {
        for e in fill.iter().copied().collect::<Vec<_>>() {
            let mut fewer = fill.clone();
            fewer.remove(&e);
            let candidate = Triangulation {
                fill: fewer,
                ..t.clone()
            };
            if let Some(peo) = chordal_order(&candidate.adjacency(), t.vertices) {
                fill = candidate.fill;
                order = peo;
                continue 'outer;
            }
        }
        break;
    }
    Triangulation {
        base: t.base.clone(),
        vertices: t.vertices,
        fill,
        elimination_order: order,
    }
}

/// PMCs as the maximal cliques of the minimal triangulations reached from
/// every elimination ordering.
pub fn pmc_oracle_triangulation(view: &GraphView<'_>) -> Result<BTreeSet<VertexSet>, OracleError> {
    let n = view.order();
    if n > TRIANGULATION_ORACLE_BUDGET {
        return Err(OracleError::BudgetExceeded {
            n,
            budget: TRIANGULATION_ORACLE_BUDGET,
        });
    }
    let mut out = BTreeSet::new();
    let members = view.vertices().to_vec();
    for order in members.iter().copied().permutations(n) {
        let t = minimize_triangulation(&elimination_game(view, &order));
        out.extend(t.maximal_cliques());
    }
    Ok(out)
}

/// Cliques collected by [`pmc_oracle_triangulation`] that fail the
/// characterisation test. Empty unless one of the two routes is wrong.
pub fn triangulation_diagnostics(view: &GraphView<'_>) -> Result<Vec<VertexSet>, OracleError> {
    Ok(pmc_oracle_triangulation(view)?
        .into_iter()
        .filter(|k| !pmc_test(view, k))
        .collect())
}

/// PMCs by testing every non-empty subset of the view.
pub fn pmc_oracle_scan(view: &GraphView<'_>) -> Result<BTreeSet<VertexSet>, OracleError> {
    let members = view.vertices().to_vec();
    let n = members.len();
    if n > SCAN_ORACLE_BUDGET {
        return Err(OracleError::BudgetExceeded {
            n,
            budget: SCAN_ORACLE_BUDGET,
        });
    }
    let mut out = BTreeSet::new();
    for mask in 1u64..(1u64 << n) {
        let k: VertexSet = (0..n)
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| members[b])
            .collect();
        if pmc_test(view, &k) {
            out.insert(k);
        }
    }
    Ok(out)
}
