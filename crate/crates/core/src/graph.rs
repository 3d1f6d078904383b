//! Simple undirected graphs: canonical storage, validation, connectivity and
//! the plain-text edge-list format.
//!
//! The edge-list format is line based. The first non-comment line holds
//! `n m`, followed by exactly `m` lines `u v` with 0-based vertex ids.
//! Lines starting with `#` (and blank lines) are ignored. Serialization
//! always emits edges in canonical sorted order.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge stored canonically with `u < v`.
///
/// The derived ordering is lexicographic on `(u, v)`, which every module
/// uses for deterministic tie-breaking.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Self-loops are representable here
    /// and rejected by [`Graph::validate`].
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Connectivity {
    Any,
    Required,
}

/// A validated simple undirected graph on vertices `0..n`.
///
/// Immutable after construction. Edges are kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

/// Per-vertex degrees and their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub volume: usize,
}

impl Graph {
    /// Validates a raw edge list without requiring connectivity.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        Self::validate(n, edges, Connectivity::Any)
    }

    /// Validates a raw edge list and requires the result to be connected.
    pub fn connected<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        Self::validate(n, edges, Connectivity::Required)
    }

    pub fn validate<I, E>(n: usize, edges: I, connectivity: Connectivity) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut canon = Vec::new();
        for e in edges {
            let e = e.into();
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if e.v >= n {
                return Err(Error::VertexOutOfRange { u: e.u, v: e.v, n });
            }
            canon.push(e);
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        let g = Graph { n, edges: canon };
        if connectivity == Connectivity::Required && !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        adj
    }

    /// True iff a single breadth-first traversal from vertex 0 reaches every
    /// vertex.
    pub fn is_connected(&self) -> bool {
        reached_from_zero(self.n, &self.edges, None) == self.n
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n && self.is_connected()
    }

    /// True iff removing `e` disconnects a connected graph. Traversal based.
    pub fn is_bridge(&self, e: Edge) -> bool {
        self.contains_edge(e) && reached_from_zero(self.n, &self.edges, Some(e)) < self.n
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0; self.n];
        for e in &self.edges {
            degrees[e.u] += 1;
            degrees[e.v] += 1;
        }
        let volume = degrees.iter().sum();
        DegreeProfile { degrees, volume }
    }

    pub fn without_edge(&self, e: Edge) -> Result<Self> {
        let idx = self.edges.binary_search(&e).map_err(|_| Error::MissingEdge(e))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { n: self.n, edges })
    }

    /// The subgraph keeping every vertex but only `keep` edges. Every kept
    /// edge must belong to this graph.
    pub fn edge_subgraph(&self, keep: &[Edge]) -> Result<Self> {
        for &e in keep {
            if !self.contains_edge(e) {
                return Err(Error::MissingEdge(e));
            }
        }
        Graph::new(self.n, keep.iter().copied())
    }
}

fn reached_from_zero(n: usize, edges: &[Edge], skip: Option<Edge>) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &e in edges {
        if Some(e) == skip {
            continue;
        }
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count
}

/// Parses the edge-list text format. Connectivity is not checked here.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("missing \"n m\" header".into()))?;
    let (n, m) = parse_pair(header).map_err(Error::MalformedHeader)?;

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(Error::MalformedEdgeLine {
                line: lineno,
                reason: format!("more than the {m} edges declared in the header"),
            });
        }
        let (u, v) = parse_pair(line).map_err(|reason| Error::MalformedEdgeLine { line: lineno, reason })?;
        edges.push(Edge::new(u, v));
    }
    if edges.len() != m {
        return Err(Error::MalformedEdgeLine {
            line: text.lines().count(),
            reason: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> std::result::Result<usize, String> {
        let tok = it.next().ok_or_else(|| format!("missing {what} in {line:?}"))?;
        tok.parse::<usize>()
            .map_err(|_| format!("{what} {tok:?} is not a non-negative integer"))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(format!("unexpected trailing token {extra:?}"));
    }
    Ok((a, b))
}

/// Canonical text form; no trailing newline.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n, g.m());
    for e in &g.edges {
        out.push('\n');
        out.push_str(&format!("{} {}", e.u, e.v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_duplicate_after_canonicalization() {
        assert_eq!(
            Graph::new(4, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(Edge::new(0, 1)))
        );
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { n: 3, .. })
        ));
        assert_eq!(Graph::new(0, Vec::<Edge>::new()), Err(Error::EmptyGraph));
    }

    #[test]
    fn k4_is_valid() {
        let g = k4();
        assert_eq!(g.m(), 6);
        assert!(g.is_connected());
        assert!(!g.is_tree());
    }

    #[test]
    fn disconnected_when_required() {
        assert_eq!(Graph::connected(4, [(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert!(Graph::new(4, [(0, 1), (2, 3)]).is_ok());
    }

    #[test]
    fn connectivity_examples() {
        assert!(k4().is_connected());
        assert!(!Graph::new(2, Vec::<Edge>::new()).unwrap().is_connected());
        let p5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(p5.is_connected());
        assert!(p5.is_tree());
        assert!(Graph::new(1, Vec::<Edge>::new()).unwrap().is_connected());
    }

    #[test]
    fn degree_profiles() {
        let p = k4().degree_profile();
        assert_eq!(p.degrees, vec![3, 3, 3, 3]);
        assert_eq!(p.volume, 12);
        let s4 = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap().degree_profile();
        assert_eq!(s4.degrees, vec![3, 1, 1, 1]);
        assert_eq!(s4.volume, 6);
    }

    #[test]
    fn parse_and_serialize() {
        let s4 = parse_graph("4 3\n0 1\n0 2\n0 3").unwrap();
        assert_eq!(s4, Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap());
        let k3 = Graph::new(3, [(2, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(serialize_graph(&k3), "3 3\n0 1\n0 2\n1 2");
        assert!(matches!(
            parse_graph("4 1\n0 4"),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_comments_and_errors() {
        let g = parse_graph("# a comment\n3 2\n# inner\n0 1\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
        assert!(matches!(parse_graph(""), Err(Error::MalformedHeader(_))));
        assert!(matches!(parse_graph("3"), Err(Error::MalformedHeader(_))));
        assert!(matches!(parse_graph("x 2"), Err(Error::MalformedHeader(_))));
        assert!(matches!(
            parse_graph("3 2\n0 1"),
            Err(Error::MalformedEdgeLine { .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n0 1\n1 2"),
            Err(Error::MalformedEdgeLine { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n0 -1"),
            Err(Error::MalformedEdgeLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n0 1 2"),
            Err(Error::MalformedEdgeLine { .. })
        ));
    }

    #[test]
    fn bridges_by_traversal() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(g.is_bridge(Edge::new(0, 3)));
        assert!(!g.is_bridge(Edge::new(1, 2)));
        assert!(!g.is_bridge(Edge::new(2, 3)));
    }

    #[test]
    fn without_edge_requires_membership() {
        let g = k4();
        let h = g.without_edge(Edge::new(0, 1)).unwrap();
        assert_eq!(h.m(), 5);
        assert_eq!(h.without_edge(Edge::new(0, 1)), Err(Error::MissingEdge(Edge::new(0, 1))));
    }
}
