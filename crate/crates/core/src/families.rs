//! Deterministic graph families used by tests and benchmarks.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::FamilyError;
use crate::graph::Graph;
use crate::vertex_set::Vertex;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    /// Two hubs `1` and `2` joined by `k` paths with two internal vertices
    /// each: `1 - (2j+1) - (2j+2) - 2` for `j = 1..=k`.
    Theta {
        k: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// `G(n, p)` drawn from a ChaCha8 generator seeded with `seed`.
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Theta { .. } => "theta",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Random { .. } => "random",
        }
    }

    /// A short identifier such as `theta-k3` or `random-n8-p0.4-s7`.
    pub fn id(&self) -> String {
        self.to_string()
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        gen_family(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Theta { k } => write!(f, "theta-k{k}"),
            Family::Path { n } => write!(f, "path-n{n}"),
            Family::Cycle { n } => write!(f, "cycle-n{n}"),
            Family::Complete { n } => write!(f, "complete-n{n}"),
            Family::Random { n, p, seed } => write!(f, "random-n{n}-p{p}-s{seed}"),
        }
    }
}

/// The family kinds, for command-line selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Theta,
    Path,
    Cycle,
    Complete,
    Random,
}

impl FamilyKind {
    /// The family member of the given size. `size` is `k` for theta and
    /// `n` for the others.
    pub fn with_size(self, size: usize, p: f64, seed: u64) -> Family {
        match self {
            FamilyKind::Theta => Family::Theta { k: size },
            FamilyKind::Path => Family::Path { n: size },
            FamilyKind::Cycle => Family::Cycle { n: size },
            FamilyKind::Complete => Family::Complete { n: size },
            FamilyKind::Random => Family::Random { n: size, p, seed },
        }
    }
}

impl FromStr for FamilyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "theta" => Ok(FamilyKind::Theta),
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            "complete" => Ok(FamilyKind::Complete),
            "random" => Ok(FamilyKind::Random),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

fn invalid(family: &Family, message: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams {
        family: family.name().to_string(),
        message: message.into(),
    }
}

pub fn gen_family(family: &Family) -> Result<Graph, FamilyError> {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let n = match *family {
        Family::Theta { k } => {
            if k == 0 {
                return Err(invalid(family, "k must be at least 1"));
            }
            for j in 1..=k {
                let (x, y) = (2 * j + 1, 2 * j + 2);
                edges.extend([(1, x), (x, y), (y, 2)]);
            }
            2 * k + 2
        }
        Family::Path { n } => {
            if n == 0 {
                return Err(invalid(family, "n must be at least 1"));
            }
            edges.extend((1..n).map(|v| (v, v + 1)));
            n
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(invalid(family, "a cycle needs at least 3 vertices"));
            }
            edges.extend((1..n).map(|v| (v, v + 1)));
            edges.push((n, 1));
            n
        }
        Family::Complete { n } => {
            if n == 0 {
                return Err(invalid(family, "n must be at least 1"));
            }
            for u in 1..=n {
                edges.extend((u + 1..=n).map(|v| (u, v)));
            }
            n
        }
        Family::Random { n, p, seed } => {
            if n == 0 {
                return Err(invalid(family, "n must be at least 1"));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(invalid(family, "p must lie in [0, 1]"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            n
        }
    };
    Ok(Graph::from_edges(n, &edges)?)
}

/// Every labelled graph on `n` vertices, one per subset of the
/// `n(n-1)/2` possible edges, in mask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many labelled graphs to enumerate");
    (0u32..(1u32 << pairs.len())).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    })
}
