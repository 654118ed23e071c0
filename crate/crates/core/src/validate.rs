//! Cross-checks the three enumerators against the two oracles.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::check::pmc_test;
use crate::enumerate::{enumerate_bt, enumerate_nondup_with, DfsStream, EnumOptions};
use crate::error::{CheckError, OracleError};
use crate::graph::Graph;
use crate::oracle::{pmc_oracle_scan, pmc_oracle_triangulation, TRIANGULATION_ORACLE_BUDGET};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Bt,
    Nondup,
    Dfs,
    Scan,
    Triangulation,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Bt,
        Method::Nondup,
        Method::Dfs,
        Method::Scan,
        Method::Triangulation,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Bt => "bt",
            Method::Nondup => "nondup",
            Method::Dfs => "dfs",
            Method::Scan => "scan-oracle",
            Method::Triangulation => "triangulation-oracle",
        }
    }

    /// Whether the method's stream must be free of repeats.
    fn emits_once(self) -> bool {
        matches!(self, Method::Nondup | Method::Dfs)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidateError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// What one method produced.
#[derive(Clone, Debug)]
pub struct MethodResult {
    pub method: Method,
    /// Emission order, repeats included.
    pub stream: Vec<VertexSet>,
    pub distinct: BTreeSet<VertexSet>,
    pub duplicates: usize,
}

impl MethodResult {
    fn new(method: Method, stream: Vec<VertexSet>) -> MethodResult {
        let distinct: BTreeSet<VertexSet> = stream.iter().copied().collect();
        let duplicates = stream.len() - distinct.len();
        MethodResult {
            method,
            stream,
            distinct,
            duplicates,
        }
    }
}

/// A set on which a method and the reference disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub method: Method,
    pub set: VertexSet,
    /// `true` if the method produced the set and the reference did not.
    pub spurious: bool,
}

/// A depth-first emission whose origin breaks the bookkeeping rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginFault {
    pub pmc: VertexSet,
    pub origin_level: usize,
    pub origin: VertexSet,
    pub detail: &'static str,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub results: Vec<MethodResult>,
    /// Methods not run because the graph is over their budget.
    pub skipped: Vec<Method>,
    pub mismatches: Vec<Mismatch>,
    pub origin_faults: Vec<OriginFault>,
}

impl ValidationReport {
    pub fn result(&self, method: Method) -> Option<&MethodResult> {
        self.results.iter().find(|r| r.method == method)
    }

    /// Repeats in the streams that must be duplicate-free.
    pub fn forbidden_duplicates(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.method.emits_once())
            .map(|r| r.duplicates)
            .sum()
    }

    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
            && self.origin_faults.is_empty()
            && self.forbidden_duplicates() == 0
    }

    /// A short description of the first problem found, if any.
    pub fn first_problem(&self) -> Option<String> {
        if let Some(m) = self.mismatches.first() {
            let how = if m.spurious {
                "produced but not a PMC"
            } else {
                "missing"
            };
            return Some(format!("{}: {{{}}} {how}", m.method, m.set));
        }
        for r in &self.results {
            if r.method.emits_once() && r.duplicates > 0 {
                let mut seen = BTreeSet::new();
                let repeated = r
                    .stream
                    .iter()
                    .find(|s| !seen.insert(**s))
                    .expect("a repeat exists");
                return Some(format!(
                    "{}: {{{}}} emitted more than once",
                    r.method, repeated
                ));
            }
        }
        self.origin_faults.first().map(|f| {
            format!(
                "dfs: {{{}}} from level {} seed {{{}}}: {}",
                f.pmc, f.origin_level, f.origin, f.detail
            )
        })
    }
}

/// Runs all five methods on `g` and compares them.
///
/// The scan oracle is the reference and is required. The triangulation
/// oracle is skipped on graphs above its budget. `options` is passed to the
/// gated enumerators, so a gate can be switched off to see the check fail.
pub fn validate(g: &Graph, options: &EnumOptions) -> Result<ValidationReport, ValidateError> {
    let reference = pmc_oracle_scan(&g.view())?;
    let mut results = vec![
        MethodResult::new(Method::Bt, enumerate_bt(g).pmcs),
        MethodResult::new(Method::Nondup, enumerate_nondup_with(g, options).pmcs),
    ];

    let mut dfs = DfsStream::with_options(g, options);
    let mut emissions = Vec::new();
    while let Some(e) = dfs.next_emission() {
        emissions.push(e?);
    }
    results.push(MethodResult::new(
        Method::Dfs,
        emissions.iter().map(|e| e.pmc).collect(),
    ));
    results.push(MethodResult::new(
        Method::Scan,
        reference.iter().copied().collect(),
    ));

    let mut skipped = Vec::new();
    if g.n() <= TRIANGULATION_ORACLE_BUDGET {
        let sets = pmc_oracle_triangulation(&g.view())?;
        results.push(MethodResult::new(
            Method::Triangulation,
            sets.into_iter().collect(),
        ));
    } else {
        skipped.push(Method::Triangulation);
    }

    let mut mismatches = Vec::new();
    for r in &results {
        for set in r.distinct.difference(&reference) {
            mismatches.push(Mismatch {
                method: r.method,
                set: *set,
                spurious: true,
            });
        }
        for set in reference.difference(&r.distinct) {
            mismatches.push(Mismatch {
                method: r.method,
                set: *set,
                spurious: false,
            });
        }
    }

    let mut origin_faults = Vec::new();
    let mut origins = BTreeSet::new();
    for e in &emissions {
        let fault = |detail| OriginFault {
            pmc: e.pmc,
            origin_level: e.origin_level,
            origin: e.origin,
            detail,
        };
        if e.origin_level > 1 {
            let prev = g.prefix_unchecked(e.origin_level - 1);
            if pmc_test(&prev, &e.origin) {
                origin_faults.push(fault("seed is already a PMC of the previous prefix"));
            }
        }
        if !origins.insert((e.origin_level, e.origin)) {
            origin_faults.push(fault("seed generated twice"));
        }
    }

    Ok(ValidationReport {
        results,
        skipped,
        mismatches,
        origin_faults,
    })
}

/// The graph in edge-list form together with its vertex ordering, for
/// reproducing a failure.
pub fn counterexample_dump(g: &Graph, report: &ValidationReport) -> String {
    let order: Vec<String> = g.ordering().iter().map(|v| v.to_string()).collect();
    let mut out = String::new();
    out.push_str(&g.to_edge_list());
    out.push_str(&format!("# ordering: {}\n", order.join(" ")));
    if let Some(p) = report.first_problem() {
        out.push_str(&format!("# problem: {p}\n"));
    }
    out
}
