//! Uniform random spanning trees (Wilson's loop-erased random walks), used
//! as the comparison population for extracted trees.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{serialize_graph, Edge, Graph};
use crate::metrics::{apsp, compactness_from, Compactness};
use crate::rng::{seeded_rng, stream_rng};
use crate::tree::SpanningTree;

/// Samples a uniform spanning tree by loop-erased random walks into a tree
/// grown from `root`.
pub fn wilson_tree_with_rng<R: Rng>(g: &Graph, root: usize, rng: &mut R) -> Result<SpanningTree> {
    let n = g.n();
    if root >= n {
        return Err(Error::VertexOutOfRange { u: root, v: root, n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = g.adjacency();
    let mut in_tree = vec![false; n];
    let mut next = vec![usize::MAX; n];
    in_tree[root] = true;
    for start in 0..n {
        // Overwriting `next` on revisits erases loops implicitly.
        let mut u = start;
        while !in_tree[u] {
            let nbrs = &adj[u];
            u = {
                let w = nbrs[rng.random_range(0..nbrs.len())];
                next[u] = w;
                w
            };
        }
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u];
        }
    }
    let edges = (0..n).filter(|&u| u != root).map(|u| Edge::new(u, next[u]));
    SpanningTree::from_edges(n, edges)
}

pub fn wilson_random_tree(g: &Graph, root: usize, seed: u64) -> Result<SpanningTree> {
    wilson_tree_with_rng(g, root, &mut seeded_rng(seed))
}

/// One random spanning tree per root vertex, with per-tree statistics.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomTreeSuite {
    pub seed: u64,
    /// Tree `i` is grown from root `i`.
    pub trees: Vec<SpanningTree>,
    pub compactness: Vec<Compactness>,
    pub diameters: Vec<usize>,
}

impl RandomTreeSuite {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn mean_compactness(&self) -> f64 {
        mean(self.compactness.iter().map(Compactness::value))
    }

    pub fn min_compactness(&self) -> Option<Compactness> {
        self.compactness.iter().copied().min()
    }

    pub fn max_compactness(&self) -> Option<Compactness> {
        self.compactness.iter().copied().max()
    }

    pub fn mean_diameter(&self) -> f64 {
        mean(self.diameters.iter().map(|&d| d as f64))
    }

    /// Edge-list blocks, one per tree, each preceded by a `# tree <i>` line.
    pub fn to_edge_lists(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.trees.iter().enumerate() {
            out.push_str(&format!("# tree {i} root {i}\n"));
            out.push_str(&serialize_graph(t.as_graph()));
            out.push('\n');
        }
        out
    }

    pub fn stats_csv(&self) -> String {
        let mut out = String::from("tree,root,compactness,diameter\n");
        for (i, (c, d)) in self.compactness.iter().zip(&self.diameters).enumerate() {
            out.push_str(&format!("{i},{i},{},{d}\n", c.value()));
        }
        out
    }
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let (sum, count) = xs.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    if count == 0 {
        f64::NAN
    } else {
        sum / count as f64
    }
}

/// `n` trees, tree `i` rooted at vertex `i` and drawn from stream `i` of
/// the master seed.
pub fn random_tree_suite(g: &Graph, seed: u64) -> Result<RandomTreeSuite> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut suite = RandomTreeSuite {
        seed,
        trees: Vec::with_capacity(g.n()),
        compactness: Vec::with_capacity(g.n()),
        diameters: Vec::with_capacity(g.n()),
    };
    for root in 0..g.n() {
        let tree = wilson_tree_with_rng(g, root, &mut stream_rng(seed, root as u64))?;
        let d = apsp(tree.as_graph())?;
        suite.compactness.push(compactness_from(&d));
        suite.diameters.push(d.max() as usize);
        suite.trees.push(tree);
    }
    Ok(suite)
}
