//! Membership tests for potential maximal cliques and minimal separators,
//! and the single-vertex extension step.

use crate::error::CheckError;
use crate::graph::{Graph, GraphView};
use crate::vertex_set::{Vertex, VertexSet};

/// A set to be tested against the prefix graph `G_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PmcCandidate {
    pub set: VertexSet,
    pub level: usize,
}

impl PmcCandidate {
    pub fn check(&self, g: &Graph) -> Result<bool, CheckError> {
        let view = g
            .prefix(self.level)
            .map_err(|_| CheckError::NotInGraph { set: self.set })?;
        is_pmc(&view, &self.set)
    }
}

/// Tests whether `k` is a potential maximal clique of `view`.
///
/// `k` is a PMC iff no component of `view \ k` is full for `k`, and every
/// non-adjacent pair `x, y` in `k` has a component `C` of `view \ k` with
/// `x, y ∈ N(C)`.
pub fn is_pmc(view: &GraphView<'_>, k: &VertexSet) -> Result<bool, CheckError> {
    if k.is_empty() {
        return Err(CheckError::EmptySet);
    }
    if !k.is_subset(&view.vertices()) {
        return Err(CheckError::NotInGraph { set: *k });
    }
    Ok(pmc_test(view, k))
}

/// [`is_pmc`] without argument validation: the empty set and sets reaching
/// outside the view are simply not PMCs.
pub(crate) fn pmc_test(view: &GraphView<'_>, k: &VertexSet) -> bool {
    if k.is_empty() || !k.is_subset(&view.vertices()) {
        return false;
    }
    let mut rest = view.vertices().difference(k);
    // N(C) ∩ K for every component C of view \ K
    let mut borders: Vec<VertexSet> = Vec::new();
    while let Some(v) = rest.first() {
        let c = view.component_containing(v, &rest);
        rest = rest.difference(&c);
        let border = view.neighborhood(&c);
        if border == *k {
            return false;
        }
        borders.push(border);
    }
    for x in k {
        let missing = k.difference(&view.neighbors(x)).without(x);
        if missing.is_empty() {
            continue;
        }
        let mut seen = VertexSet::new();
        for b in borders.iter().filter(|b| b.contains(x)) {
            seen = seen.union(b);
        }
        if !missing.is_subset(&seen) {
            return false;
        }
    }
    true
}

/// Tests whether `s` is a minimal separator of `view`, i.e. whether
/// `view \ s` has at least two components that are full for `s`.
///
/// For a disconnected view the empty set qualifies.
pub fn is_minimal_separator(view: &GraphView<'_>, s: &VertexSet) -> bool {
    if !s.is_subset(&view.vertices()) {
        return false;
    }
    let mut rest = view.vertices().difference(s);
    let mut full = 0;
    while let Some(v) = rest.first() {
        let c = view.component_containing(v, &rest);
        rest = rest.difference(&c);
        if view.is_full(&c, s) {
            full += 1;
            if full == 2 {
                return true;
            }
        }
    }
    false
}

/// Extends a PMC `k` of `G_{i-1}` to the unique PMC of `g_next = G_i` among
/// `k` and `k ∪ {v}`, where `v = v_i`.
///
/// Both candidates are tested. Finding neither or both is reported as
/// [`CheckError::Inconsistent`].
pub fn extend_pmc(
    g_next: &GraphView<'_>,
    k: &VertexSet,
    v: Vertex,
) -> Result<VertexSet, CheckError> {
    if k.is_empty() {
        return Err(CheckError::EmptySet);
    }
    let grown = k.with(v);
    if !grown.is_subset(&g_next.vertices()) {
        return Err(CheckError::NotInGraph { set: grown });
    }
    match (pmc_test(g_next, &grown), pmc_test(g_next, k)) {
        (true, false) => Ok(grown),
        (false, true) => Ok(*k),
        (true, true) => Err(CheckError::Inconsistent {
            set: *k,
            vertex: v,
            detail: "both candidates are PMCs",
        }),
        (false, false) => Err(CheckError::Inconsistent {
            set: *k,
            vertex: v,
            detail: "neither candidate is a PMC",
        }),
    }
}
