//! The three PMC enumerators.

mod bt;
mod dfs;
mod gen;
mod nondup;

use std::fmt;
use std::str::FromStr;

pub use bt::enumerate_bt;
pub use dfs::{enumerate_dfs, DfsStream, Emission};
pub use nondup::enumerate_nondup;

use crate::error::CheckError;
use crate::graph::Graph;
use crate::metrics::Metrics;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Incremental enumeration with stored, hash-deduplicated levels.
    Bt,
    /// Incremental enumeration with duplicate-avoidance gates.
    Nondup,
    /// Depth-first, polynomial-space enumeration.
    Dfs,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Bt, Algorithm::Nondup, Algorithm::Dfs];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Bt => "bt",
            Algorithm::Nondup => "nondup",
            Algorithm::Dfs => "dfs",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bt" => Ok(Algorithm::Bt),
            "nondup" => Ok(Algorithm::Nondup),
            "dfs" => Ok(Algorithm::Dfs),
            other => Err(format!(
                "unknown algorithm '{other}' (expected bt, nondup or dfs)"
            )),
        }
    }
}

/// The duplicate-avoidance gates applied to separator-derived candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    /// (i) `D` is produced by no earlier `(S, T, C)` triple.
    NotYetSeen,
    /// (ii) `S` is not a PMC of `G_{i-1}` (guards `S ∪ {v_i}`).
    SeparatorNotPrevPmc,
    /// (iii) `D` is not a PMC of `G_{i-1}`.
    CandidateNotPrevPmc,
    /// (iv) `T ∩ C ≠ {v_i}`.
    NotSingleNewVertex,
    /// (v) when `v_i ∈ T ∩ C`: `D \ {v_i}` is neither a PMC of `G_{i-1}`
    /// nor a minimal separator of `G_i`.
    NewVertexCheck,
}

impl Gate {
    pub const ALL: [Gate; 5] = [
        Gate::NotYetSeen,
        Gate::SeparatorNotPrevPmc,
        Gate::CandidateNotPrevPmc,
        Gate::NotSingleNewVertex,
        Gate::NewVertexCheck,
    ];

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// Roman numeral label, `i` through `v`.
    pub fn label(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v"][self as usize]
    }
}

impl FromStr for Gate {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Gate::ALL
            .into_iter()
            .find(|g| g.label() == s)
            .ok_or_else(|| format!("unknown gate '{s}' (expected i, ii, iii, iv or v)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GateSet(u8);

impl GateSet {
    pub const fn all() -> GateSet {
        GateSet(0b1_1111)
    }

    pub const fn none() -> GateSet {
        GateSet(0)
    }

    pub fn without(self, gate: Gate) -> GateSet {
        GateSet(self.0 & !gate.bit())
    }

    pub fn contains(self, gate: Gate) -> bool {
        self.0 & gate.bit() != 0
    }
}

impl Default for GateSet {
    fn default() -> Self {
        GateSet::all()
    }
}

/// Knobs shared by the gated enumerators. `bt` ignores them.
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumOptions {
    pub gates: GateSet,
    /// Run the restart check after the other gates rather than directly
    /// after the `G_i` test. The output is the same either way; only the
    /// amount of work differs.
    pub restart_check_last: bool,
}

impl EnumOptions {
    pub(crate) fn gen_config(&self) -> gen::GenConfig {
        gen::GenConfig {
            gates: self.gates,
            restart_check_last: self.restart_check_last,
        }
    }
}

/// The PMCs produced by one run, in emission order, with its metrics.
#[derive(Clone, Debug)]
pub struct Run {
    pub algorithm: Algorithm,
    pub pmcs: Vec<VertexSet>,
    pub metrics: Metrics,
}

impl Run {
    pub fn sorted(&self) -> Vec<VertexSet> {
        let mut v = self.pmcs.clone();
        v.sort();
        v
    }
}

/// Runs `algorithm` to completion.
pub fn enumerate(
    g: &Graph,
    algorithm: Algorithm,
    options: &EnumOptions,
) -> Result<Run, CheckError> {
    match algorithm {
        Algorithm::Bt => Ok(enumerate_bt(g)),
        Algorithm::Nondup => Ok(nondup::enumerate_nondup_with(g, options)),
        Algorithm::Dfs => dfs::DfsStream::with_options(g, options).run(),
    }
}

pub use nondup::enumerate_nondup_with;


#[cfg(test)]
mod enumerator_tests {
    use super::*;
    use crate::families::{gen_family, Family};
    use crate::oracle::pmc_oracle_scan;
    use proptest::prelude::*;

    fn sets(list: &[&[usize]]) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = list.iter().map(|s| s.iter().copied().collect()).collect();
        v.sort();
        v
    }

    fn all_runs(g: &Graph) -> Vec<Run> {
        Algorithm::ALL
            .iter()
            .map(|&a| enumerate(g, a, &EnumOptions::default()).unwrap())
            .collect()
    }

    #[test]
    fn cycle_four() {
        let g = gen_family(&Family::Cycle { n: 4 }).unwrap();
        let want = sets(&[&[1, 2, 3], &[1, 3, 4], &[1, 2, 4], &[2, 3, 4]]);
        for run in all_runs(&g) {
            assert_eq!(run.pmcs.len(), 4, "{}", run.algorithm);
            assert_eq!(run.sorted(), want, "{}", run.algorithm);
        }
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1).unwrap();
        for run in all_runs(&g) {
            assert_eq!(run.pmcs, vec![VertexSet::from([1])]);
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=6 {
            let g = gen_family(&Family::Complete { n }).unwrap();
            for run in all_runs(&g) {
                assert_eq!(run.pmcs, vec![VertexSet::full(n)], "K{n} {}", run.algorithm);
            }
        }
    }

    #[test]
    fn path_three() {
        let g = gen_family(&Family::Path { n: 3 }).unwrap();
        for run in all_runs(&g) {
            assert_eq!(run.sorted(), sets(&[&[1, 2], &[2, 3]]));
            assert_eq!(run.pmcs.len(), 2);
        }
    }

    #[test]
    fn theta_six_depth_first_matches_nondup() {
        let g = gen_family(&Family::Theta { k: 6 }).unwrap();
        let n = g.n();
        let dfs = enumerate(&g, Algorithm::Dfs, &EnumOptions::default()).unwrap();
        let nondup = enumerate(&g, Algorithm::Nondup, &EnumOptions::default()).unwrap();
        assert_eq!(dfs.pmcs.len(), nondup.pmcs.len());
        assert_eq!(dfs.sorted(), nondup.sorted());
        assert!(dfs.metrics.peak_retained_sets <= 8 * n * n * n);
        assert!(dfs.pmcs.len() * n >= 1 << 6);
    }

    #[test]
    fn restart_position_does_not_change_output() {
        let g = gen_family(&Family::Theta { k: 3 }).unwrap();
        let last = EnumOptions {
            restart_check_last: true,
            ..Default::default()
        };
        for a in [Algorithm::Nondup, Algorithm::Dfs] {
            let x = enumerate(&g, a, &EnumOptions::default()).unwrap();
            let y = enumerate(&g, a, &last).unwrap();
            assert_eq!(x.pmcs, y.pmcs);
        }
    }

    #[test]
    fn ungated_generator_repeats_sets() {
        let g = gen_family(&Family::Theta { k: 3 }).unwrap();
        let none = EnumOptions {
            gates: GateSet::none(),
            ..Default::default()
        };
        let run = enumerate(&g, Algorithm::Nondup, &none).unwrap();
        let bt = enumerate_bt(&g);
        assert!(run.pmcs.len() > bt.pmcs.len());
        let mut distinct = run.sorted();
        distinct.dedup();
        assert_eq!(distinct, bt.pmcs);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=8)
            .prop_flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                (
                    Just(n),
                    proptest::collection::vec(any::<bool>(), pairs),
                    any::<u64>(),
                )
            })
            .prop_map(|(n, bits, seed)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges)
                    .unwrap()
                    .with_seeded_ordering(seed)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn enumerators_match_scan_oracle(g in arb_graph()) {
            let want: Vec<VertexSet> = pmc_oracle_scan(&g.view()).unwrap().into_iter().collect();
            for run in all_runs(&g) {
                prop_assert_eq!(run.pmcs.len(), want.len());
                prop_assert_eq!(run.sorted(), want.clone());
            }
        }
    }
}
