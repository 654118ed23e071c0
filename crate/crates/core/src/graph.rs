//! Immutable undirected graphs with a fixed vertex ordering, prefix views
//! and connectivity primitives.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::vertex_set::{Vertex, VertexSet, MAX_VERTICES};

/// A simple undirected graph on the vertices `1..=n`.
///
/// The graph also carries an ordering `v_1, ..., v_n` of its vertices. The
/// prefix graph `G_i` is the subgraph induced by `{v_1, ..., v_i}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
    ordering: Vec<Vertex>,
    // prefixes[i] = {v_1, ..., v_i}
    prefixes: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from 1-based edges. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut b = Builder::new(n)?;
        for (idx, &(u, v)) in edges.iter().enumerate() {
            b.add_edge(u, v, idx + 1)?;
        }
        Ok(b.finish())
    }

    /// The graph without edges on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, &[])
    }

    pub fn parse(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
        match format {
            GraphFormat::EdgeList => parse_edge_list(text),
            GraphFormat::Dimacs => parse_dimacs(text),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adjacency[v - 1]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u - 1].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        self.prefixes[self.n]
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (1..=self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The vertex ordering, `ordering()[i - 1] = v_i`.
    pub fn ordering(&self) -> &[Vertex] {
        &self.ordering
    }

    /// `v_i` for `1 <= i <= n`.
    #[inline]
    pub fn vertex_at(&self, i: usize) -> Vertex {
        self.ordering[i - 1]
    }

    /// Returns a copy of this graph using `order` as `v_1, ..., v_n`.
    pub fn with_ordering(&self, order: &[Vertex]) -> Result<Graph, GraphError> {
        if order.len() != self.n {
            return Err(GraphError::InvalidOrdering(format!(
                "expected {} vertices, got {}",
                self.n,
                order.len()
            )));
        }
        let mut seen = VertexSet::new();
        for &v in order {
            if v == 0 || v > self.n {
                return Err(GraphError::InvalidOrdering(format!(
                    "vertex {v} outside 1..={}",
                    self.n
                )));
            }
            if seen.contains(v) {
                return Err(GraphError::InvalidOrdering(format!("vertex {v} repeated")));
            }
            seen.insert(v);
        }
        let mut g = self.clone();
        g.ordering = order.to_vec();
        g.prefixes = prefix_sets(&g.ordering);
        Ok(g)
    }

    /// Returns a copy of this graph with a uniformly random ordering drawn
    /// from a ChaCha8 generator seeded with `seed`.
    pub fn with_seeded_ordering(&self, seed: u64) -> Graph {
        let mut order: Vec<Vertex> = (1..=self.n).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        self.with_ordering(&order)
            .expect("shuffle is a permutation")
    }

    /// The whole graph as a view. Equivalent to `prefix(n)`.
    pub fn view(&self) -> GraphView<'_> {
        GraphView {
            graph: self,
            vertices: self.vertices(),
            level: Some(self.n),
        }
    }

    /// The prefix graph `G_i`.
    pub fn prefix(&self, i: usize) -> Result<GraphView<'_>, GraphError> {
        if i == 0 || i > self.n {
            return Err(GraphError::LevelOutOfRange {
                level: i,
                n: self.n,
            });
        }
        Ok(self.prefix_unchecked(i))
    }

    #[inline]
    pub(crate) fn prefix_unchecked(&self, i: usize) -> GraphView<'_> {
        GraphView {
            graph: self,
            vertices: self.prefixes[i],
            level: Some(i),
        }
    }

    /// The subgraph induced by `vertices`.
    pub fn induced(&self, vertices: VertexSet) -> GraphView<'_> {
        GraphView {
            graph: self,
            vertices: vertices.intersection(&self.vertices()),
            level: None,
        }
    }

    /// Edge-list rendering with an `n m` header, readable by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("ordering", &self.ordering)
            .finish()
    }
}

fn prefix_sets(ordering: &[Vertex]) -> Vec<VertexSet> {
    let mut prefixes = Vec::with_capacity(ordering.len() + 1);
    let mut acc = VertexSet::new();
    prefixes.push(acc);
    for &v in ordering {
        acc.insert(v);
        prefixes.push(acc);
    }
    prefixes
}

struct Builder {
    n: usize,
    adjacency: Vec<VertexSet>,
}

impl Builder {
    fn new(n: usize) -> Result<Builder, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Builder {
            n,
            adjacency: vec![VertexSet::new(); n],
        })
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex, line: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange {
                    line,
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if self.adjacency[u - 1].contains(v) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        self.adjacency[u - 1].insert(v);
        self.adjacency[v - 1].insert(u);
        Ok(())
    }

    fn finish(self) -> Graph {
        let ordering: Vec<Vertex> = (1..=self.n).collect();
        let prefixes = prefix_sets(&ordering);
        Graph {
            n: self.n,
            adjacency: self.adjacency,
            ordering,
            prefixes,
        }
    }
}

/// Supported graph file formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// One `u v` pair per line, with an optional leading `n m` header.
    EdgeList,
    /// `p edge n m` followed by `e u v` lines.
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#') || line.starts_with('%')
}

fn parse_number(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse::<usize>().map_err(|_| GraphError::Parse {
        line,
        message: format!("expected a non-negative integer, found '{tok}'"),
    })
}

fn parse_pair(line_no: usize, toks: &[&str]) -> Result<(usize, usize), GraphError> {
    if toks.len() != 2 {
        return Err(GraphError::Parse {
            line: line_no,
            message: format!("expected two integers, found {} fields", toks.len()),
        });
    }
    Ok((
        parse_number(toks[0], line_no)?,
        parse_number(toks[1], line_no)?,
    ))
}

/// Parses the edge-list format.
///
/// The first data line is read as an `n m` header when exactly `m` data lines
/// follow it; otherwise every line is an edge and `n` is the largest label.
fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        rows.push((idx + 1, parse_pair(idx + 1, &toks)?));
    }
    let (n, edges) = match rows.first() {
        Some(&(_, (n, m))) if m == rows.len() - 1 => (n, &rows[1..]),
        _ => {
            let n = rows.iter().map(|&(_, (u, v))| u.max(v)).max().unwrap_or(0);
            (n, &rows[..])
        }
    };
    let mut b = Builder::new(n)?;
    for &(line, (u, v)) in edges {
        b.add_edge(u, v, line)?;
    }
    Ok(b.finish())
}

fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut builder: Option<(Builder, usize)> = None;
    let mut count = 0usize;
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if is_comment(line) || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if builder.is_some() {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: "duplicate problem line".into(),
                    });
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: "expected 'p edge <n> <m>'".into(),
                    });
                }
                let n = parse_number(toks[2], line_no)?;
                let m = parse_number(toks[3], line_no)?;
                builder = Some((Builder::new(n)?, m));
            }
            "e" => {
                let Some((b, _)) = builder.as_mut() else {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: "edge before problem line".into(),
                    });
                };
                let (u, v) = parse_pair(line_no, &toks[1..])?;
                b.add_edge(u, v, line_no)?;
                count += 1;
            }
            other => {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("unknown line type '{other}'"),
                })
            }
        }
    }
    let Some((b, m)) = builder else {
        return Err(GraphError::Parse {
            line: last_line.max(1),
            message: "missing problem line".into(),
        });
    };
    if m != count {
        return Err(GraphError::Parse {
            line: last_line.max(1),
            message: format!("problem line declares {m} edges, found {count}"),
        });
    }
    Ok(b.finish())
}

/// A read-only induced subgraph.
#[derive(Clone, Copy)]
pub struct GraphView<'g> {
    graph: &'g Graph,
    vertices: VertexSet,
    level: Option<usize>,
}

impl<'g> GraphView<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    /// `Some(i)` when this view is the prefix graph `G_i`.
    pub fn level(&self) -> Option<usize> {
        self.level
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| self.neighbors(v).len())
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.graph.neighbors(v).intersection(&self.vertices)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && self.graph.has_edge(u, v)
    }

    /// Open neighbourhood `N(set)`: vertices of the view outside `set` with
    /// a neighbour in `set`.
    #[inline]
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut acc = VertexSet::new();
        for v in set {
            acc = acc.union(&self.graph.neighbors(v));
        }
        acc.intersection(&self.vertices).difference(set)
    }

    /// Closed neighbourhood `N[set] = set ∪ N(set)`, restricted to the view.
    #[inline]
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        self.neighborhood(set)
            .union(&set.intersection(&self.vertices))
    }

    /// The connected component of `allowed` (intersected with the view)
    /// containing `start`, or the empty set if `start` is not allowed.
    #[inline]
    pub fn component_containing(&self, start: Vertex, allowed: &VertexSet) -> VertexSet {
        let allowed = allowed.intersection(&self.vertices);
        if !allowed.contains(start) {
            return VertexSet::new();
        }
        let mut reached = VertexSet::singleton(start);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier {
                next = next.union(&self.graph.neighbors(v));
            }
            frontier = next.intersection(&allowed).difference(&reached);
            reached = reached.union(&frontier);
        }
        reached
    }

    /// Connected components of the view minus `removed`, ordered by their
    /// smallest vertex.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut rest = self.vertices.difference(removed);
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_containing(v, &rest);
            rest = rest.difference(&c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.first() {
            None => true,
            Some(v) => self.component_containing(v, &self.vertices) == self.vertices,
        }
    }

    /// Whether every vertex of `s` has a neighbour in `component`.
    #[inline]
    pub fn is_full(&self, component: &VertexSet, s: &VertexSet) -> bool {
        s.is_subset(&self.neighborhood(component))
    }

    /// Components of the view minus `s`, each flagged full or not.
    pub fn components_of(&self, s: &VertexSet) -> ComponentReport {
        let separator = s.intersection(&self.vertices);
        let components = self.components(&separator);
        let full = components
            .iter()
            .map(|c| self.is_full(c, &separator))
            .collect();
        ComponentReport {
            components,
            full,
            separator,
            level: self.level,
        }
    }
}

impl fmt::Debug for GraphView<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphView")
            .field("vertices", &self.vertices)
            .field("level", &self.level)
            .finish()
    }
}

/// The components of `G \ S` for some view `G`, each flagged full for `S`.
///
/// Any component is full for the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub components: Vec<VertexSet>,
    pub full: Vec<bool>,
    pub separator: VertexSet,
    pub level: Option<usize>,
}

impl ComponentReport {
    pub fn full_components(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.components
            .iter()
            .zip(self.full.iter())
            .filter(|(_, &f)| f)
            .map(|(c, _)| c)
    }

    pub fn full_count(&self) -> usize {
        self.full.iter().filter(|&&f| f).count()
    }
}
