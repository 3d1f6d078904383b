use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, Edge, Graph};

/// A connected acyclic spanning subgraph: exactly `n - 1` edges, connected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    graph: Graph,
}

impl SpanningTree {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.m() + 1 != graph.n() {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                graph.m(),
                graph.n()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::NotATree("edges do not connect every vertex".into()));
        }
        Ok(SpanningTree { graph })
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        Self::new(Graph::new(n, edges)?)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    pub fn as_graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        self.graph.degree_profile()
    }

    pub fn max_degree(&self) -> usize {
        self.degree_profile().degrees.into_iter().max().unwrap_or(0)
    }

    /// Is this the star `S_n`: one vertex adjacent to all others?
    pub fn is_star(&self) -> bool {
        self.n() <= 2 || self.max_degree() == self.n() - 1
    }

    /// Is this the path `P_n`: maximum degree at most 2?
    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }
}
