//! Hop-count distances, compactness and diameter.
//!
//! Compactness is the mean hop distance over all `n²` ordered vertex pairs,
//! zero diagonal included: `C(G) = (1/n²) Σᵢ Σⱼ D(vᵢ, vⱼ)`. It is kept as
//! the exact integer total so trees on the same vertex set compare exactly.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// All-pairs hop counts of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Sum over all ordered pairs.
    pub fn total(&self) -> u64 {
        self.data.iter().map(|&d| u64::from(d)).sum()
    }
}

/// Breadth-first hop counts from every vertex.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let adj = g.adjacency();
    let mut data = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut data[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            let dx = row[x];
            for &y in &adj[x] {
                if row[y] == u32::MAX {
                    row[y] = dx + 1;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        if reached < n {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, data })
}

/// Exact compactness value `total / n²`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Compactness {
    total: u64,
    n: u64,
}

impl Compactness {
    pub fn new(total: u64, n: usize) -> Self {
        Compactness { total, n: n as u64 }
    }

    /// Sum of hop distances over ordered pairs.
    pub fn total_distance(&self) -> u64 {
        self.total
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn value(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        self.total as f64 / (self.n * self.n) as f64
    }
}

impl PartialOrd for Compactness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Compactness {
    /// Compares the rational values `total / n²` exactly.
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = u128::from(self.total) * u128::from(other.n) * u128::from(other.n);
        let rhs = u128::from(other.total) * u128::from(self.n) * u128::from(self.n);
        lhs.cmp(&rhs).then(self.n.cmp(&other.n))
    }
}

impl fmt::Display for Compactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

pub fn compactness(g: &Graph) -> Result<Compactness> {
    Ok(compactness_from(&apsp(g)?))
}

pub fn compactness_from(d: &DistanceMatrix) -> Compactness {
    Compactness::new(d.total(), d.n())
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(apsp(g)?.max() as usize)
}

/// True iff `candidate` is a subset of the edges of `g` with exactly
/// `n - 1` distinct edges that connect every vertex.
pub fn validate_spanning_tree(g: &Graph, candidate: &[Edge]) -> bool {
    if candidate.len() + 1 != g.n() || !candidate.iter().all(|&e| g.contains_edge(e)) {
        return false;
    }
    match Graph::new(g.n(), candidate.iter().copied()) {
        Ok(t) => t.is_connected(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (0, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn apsp_examples() {
        let d = apsp(&path(2)).unwrap();
        assert_eq!(d.row(0), &[0, 1]);
        assert_eq!(d.row(1), &[1, 0]);
        let d = apsp(&complete(4)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), u32::from(i != j));
            }
        }
        assert_eq!(apsp(&path(4)).unwrap().max(), 3);
        assert_eq!(apsp(&Graph::new(3, [(0, 1)]).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn compactness_examples() {
        assert_eq!(compactness(&path(2)).unwrap().value(), 0.5);
        assert_eq!(compactness(&complete(4)).unwrap().value(), 0.75);
        assert_eq!(compactness(&star(4)).unwrap().value(), 1.125);
        assert_eq!(compactness(&path(4)).unwrap().value(), 1.25);
        assert_eq!(compactness(&path(1)).unwrap().value(), 0.0);
    }

    #[test]
    fn compactness_ordering_is_exact() {
        let s = compactness(&star(4)).unwrap();
        let p = compactness(&path(4)).unwrap();
        assert!(s < p);
        assert_eq!(Compactness::new(18, 4).cmp(&s), Ordering::Equal);
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(diameter(&complete(n)).unwrap(), 1);
        }
        assert_eq!(diameter(&star(4)).unwrap(), 2);
        assert_eq!(diameter(&path(4)).unwrap(), 3);
    }

    #[test]
    fn spanning_tree_validation() {
        let k4 = complete(4);
        let e = |a, b| Edge::new(a, b);
        assert!(validate_spanning_tree(&k4, &[e(0, 1), e(0, 2), e(0, 3)]));
        assert!(!validate_spanning_tree(&k4, &[e(0, 1), e(0, 2), e(1, 2)]));
        let p4 = path(4);
        assert!(validate_spanning_tree(&p4, p4.edges()));
        assert!(!validate_spanning_tree(&p4, &[e(0, 1), e(1, 2), e(0, 3)]));
        assert!(!validate_spanning_tree(&k4, &[e(0, 1), e(0, 1), e(0, 3)]));
    }
}
