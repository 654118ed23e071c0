use std::rc::Rc;
use std::time::Instant;

use crate::check::pmc_test;
use crate::error::CheckError;
use crate::graph::Graph;
use crate::metrics::{Meter, Metrics};
use crate::vertex_set::VertexSet;

use super::gen::GenCursor;
use super::{Algorithm, EnumOptions, Run};

/// One output of the depth-first enumerator together with where it came
/// from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Emission {
    /// A PMC of the whole graph.
    pub pmc: VertexSet,
    /// The level `i` whose generator produced the seed.
    pub origin_level: usize,
    /// The seed: a PMC of `G_i` that is not a PMC of `G_{i-1}`.
    pub origin: VertexSet,
}

/// Depth-first PMC enumeration in polynomial space.
///
/// For `i = 1..=n` the generator for `G_i` yields its new PMCs one at a
/// time. Each is immediately carried up through `G_{i+1}, ..., G_n`, taking
/// `π ∪ {v_j}` when that is a PMC of `G_j` and `π` otherwise, and emitted.
/// No PMC is stored; the live state is one generator with its separator
/// streams plus the set being extended.
pub struct DfsStream<'g> {
    graph: &'g Graph,
    options: EnumOptions,
    meter: Rc<Meter>,
    level: usize,
    gen: Option<GenCursor<'g>>,
    yields: u64,
    started: Instant,
    failed: bool,
}

/// Starts the depth-first enumeration of `g`.
pub fn enumerate_dfs(g: &Graph) -> DfsStream<'_> {
    DfsStream::with_options(g, &EnumOptions::default())
}

impl<'g> DfsStream<'g> {
    pub fn with_options(g: &'g Graph, options: &EnumOptions) -> DfsStream<'g> {
        DfsStream {
            graph: g,
            options: *options,
            meter: Meter::shared(),
            level: 0,
            gen: None,
            yields: 0,
            started: Instant::now(),
            failed: false,
        }
    }

    /// Counters so far. `wall_time` is measured from stream creation.
    pub fn metrics(&self) -> Metrics {
        Metrics::from_meter(&self.meter, self.yields, self.started.elapsed())
    }

    /// The next PMC with its origin, `None` when exhausted.
    pub fn next_emission(&mut self) -> Option<Result<Emission, CheckError>> {
        if self.failed {
            return None;
        }
        loop {
            if self.gen.is_none() {
                if self.level >= self.graph.n() {
                    return None;
                }
                self.level += 1;
                self.gen = Some(GenCursor::new(
                    self.graph,
                    self.level,
                    self.options.gen_config(),
                    self.meter.clone(),
                ));
            }
            let gen = self.gen.as_mut().expect("generator present");
            match gen.next_candidate() {
                Some(origin) => {
                    let level = gen.level();
                    return Some(match self.extend(level, origin) {
                        Ok(pmc) => {
                            self.yields += 1;
                            Ok(Emission {
                                pmc,
                                origin_level: level,
                                origin,
                            })
                        }
                        Err(e) => {
                            self.failed = true;
                            Err(e)
                        }
                    });
                }
                None => self.gen = None,
            }
        }
    }

    /// Carries a PMC of `G_level` up to a PMC of `G_n`.
    fn extend(&self, level: usize, origin: VertexSet) -> Result<VertexSet, CheckError> {
        self.meter.hold(1);
        let mut pi = origin;
        let mut result = Ok(());
        for j in level + 1..=self.graph.n() {
            let view = self.graph.prefix_unchecked(j);
            let vj = self.graph.vertex_at(j);
            let grown = pi.with(vj);
            self.meter.count_pmc_test();
            if pmc_test(&view, &grown) {
                pi = grown;
                continue;
            }
            self.meter.count_pmc_test();
            if !pmc_test(&view, &pi) {
                result = Err(CheckError::Inconsistent {
                    set: pi,
                    vertex: vj,
                    detail: "neither candidate is a PMC",
                });
                break;
            }
        }
        self.meter.release(1);
        result.map(|_| pi)
    }

    /// Drains the stream.
    pub fn run(mut self) -> Result<Run, CheckError> {
        let mut pmcs = Vec::new();
        for item in self.by_ref() {
            pmcs.push(item?);
        }
        Ok(Run {
            algorithm: Algorithm::Dfs,
            pmcs,
            metrics: self.metrics(),
        })
    }
}

impl Iterator for DfsStream<'_> {
    type Item = Result<VertexSet, CheckError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_emission().map(|r| r.map(|e| e.pmc))
    }
}
