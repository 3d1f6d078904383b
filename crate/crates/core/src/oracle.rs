//! Brute-force ground truth for small graphs.
//!
//! Everything here counts combinatorial objects directly (spanning trees,
//! rooted spanning forests, connected bi-partitions) in exact integer
//! arithmetic, so it can check the dense linear algebra independently.
//!
//! Notation for the forest census: `F_k` is the set of spanning rooted
//! forests with `k` edges (so `n − k` trees, each with one root), and
//! `F_k^{ij}` the subset where `i` and `j` share a tree rooted at `i`.

use crate::error::{Error, Result};
use crate::extraction::ExtractionMode;
use crate::forest::{forest_determinant, forest_matrix, laplacian_pseudoinverse};
use crate::graph::{Edge, Graph};
use crate::metrics::{compactness, Compactness};
use crate::tree::SpanningTree;

pub const ENUMERATION_MAX_VERTICES: usize = 10;
pub const ENUMERATION_MAX_TREES: u128 = 1_000_000;
pub const CENSUS_MAX_EDGES: usize = 20;
pub const BIPARTITION_MAX_VERTICES: usize = 6;

/// Tolerance for comparing dense matrix entries with census ratios.
pub const IDENTITY_TOL: f64 = 1e-9;

/// Number of spanning trees: the determinant of the Laplacian with row and
/// column 0 removed, by fraction-free (Bareiss) elimination. Zero for a
/// disconnected graph.
pub fn kirchhoff_tree_count(g: &Graph) -> Result<u128> {
    let n = g.n();
    if n == 1 {
        return Ok(1);
    }
    let k = n - 1;
    let mut a = vec![vec![0i128; k]; k];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        for (x, y) in [(u, v), (v, u)] {
            if x > 0 {
                a[x - 1][x - 1] += 1;
                if y > 0 {
                    a[x - 1][y - 1] -= 1;
                }
            }
        }
    }
    let overflow = || Error::TooLarge("spanning-tree count overflows 128 bits".into());
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = a[i][j]
                    .checked_mul(a[p][p])
                    .and_then(|x| a[i][p].checked_mul(a[p][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or_else(overflow)?;
                a[i][j] = num / prev;
            }
        }
        prev = a[p][p];
    }
    let det = sign * a[k - 1][k - 1];
    u128::try_from(det).map_err(|_| Error::NumericalFailure(format!("negative tree count {det}")))
}

/// Every spanning tree of a connected graph, in a deterministic order.
///
/// Include/exclude search over the canonical edge order: an edge is
/// included when it joins two components, and excluded only while the
/// remaining edges can still connect the graph, so every leaf is a tree.
pub fn enumerate_spanning_trees(g: &Graph) -> Result<Vec<SpanningTree>> {
    if g.n() > ENUMERATION_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the enumeration limit of {ENUMERATION_MAX_VERTICES}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let count = kirchhoff_tree_count(g)?;
    if count > ENUMERATION_MAX_TREES {
        return Err(Error::TooLarge(format!(
            "{count} spanning trees exceeds the enumeration limit of {ENUMERATION_MAX_TREES}"
        )));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut chosen = Vec::with_capacity(g.n());
    let labels: Vec<usize> = (0..g.n()).collect();
    tree_search(g, 0, &labels, &mut chosen, &mut out)?;
    Ok(out)
}

fn tree_search(
    g: &Graph,
    idx: usize,
    labels: &[usize],
    chosen: &mut Vec<Edge>,
    out: &mut Vec<SpanningTree>,
) -> Result<()> {
    if chosen.len() + 1 == g.n() {
        out.push(SpanningTree::from_edges(g.n(), chosen.iter().copied())?);
        return Ok(());
    }
    let Some(&e) = g.edges().get(idx) else {
        return Ok(());
    };
    let (lu, lv) = (labels[e.u()], labels[e.v()]);
    if lu != lv {
        let merged: Vec<usize> = labels.iter().map(|&l| if l == lv { lu } else { l }).collect();
        chosen.push(e);
        tree_search(g, idx + 1, &merged, chosen, out)?;
        chosen.pop();
    }
    if still_spans(g, chosen, idx + 1) {
        tree_search(g, idx + 1, labels, chosen, out)?;
    }
    Ok(())
}

fn still_spans(g: &Graph, chosen: &[Edge], from: usize) -> bool {
    let mut dsu = Dsu::new(g.n());
    let mut comps = g.n();
    for &e in chosen.iter().chain(&g.edges()[from..]) {
        if dsu.union(e.u(), e.v()) {
            comps -= 1;
        }
    }
    comps == 1
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Exact counts of spanning rooted forests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCensus {
    n: usize,
    by_edges: Vec<u64>,
    rooted: Vec<u64>,
    total: u64,
}

impl ForestCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `ε(F_k)`; zero for `k ≥ n`.
    pub fn forests(&self, k: usize) -> u64 {
        self.by_edges.get(k).copied().unwrap_or(0)
    }

    /// `ε(F_k^{ij})`.
    pub fn rooted(&self, k: usize, i: usize, j: usize) -> u64 {
        if k >= self.n {
            return 0;
        }
        self.rooted[(k * self.n + i) * self.n + j]
    }

    /// `Σ_k ε(F_k^{ij})`.
    pub fn rooted_all(&self, i: usize, j: usize) -> u64 {
        (0..self.n).map(|k| self.rooted(k, i, j)).sum()
    }

    /// Total number of spanning rooted forests, `Σ_k ε(F_k)`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Structural invariants every census must satisfy; returns the first
    /// violation found.
    pub fn check_consistency(&self, tree_count: u128) -> std::result::Result<(), String> {
        let n = self.n;
        if self.forests(0) != 1 {
            return Err(format!("ε(F_0) = {}", self.forests(0)));
        }
        for i in 0..n {
            for j in 0..n {
                let expected = u64::from(i == j);
                if self.rooted(0, i, j) != expected {
                    return Err(format!("ε(F_0^{{{i}{j}}}) = {}", self.rooted(0, i, j)));
                }
            }
            if u128::from(self.rooted(n - 1, i, i)) != tree_count {
                return Err(format!("ε(F_{{n-1}}^{{{i}{i}}}) ≠ tree count {tree_count}"));
            }
        }
        let sum: u64 = self.by_edges.iter().sum();
        if sum != self.total {
            return Err(format!("total {} ≠ Σ_k ε(F_k) = {sum}", self.total));
        }
        Ok(())
    }
}

/// Scans every edge subset, keeps the acyclic ones, and attributes each
/// forest's `Π |component|` rootings to the root choices they contain.
pub fn enumerate_rooted_forests(g: &Graph) -> Result<ForestCensus> {
    if g.m() > CENSUS_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges exceeds the census limit of {CENSUS_MAX_EDGES}",
            g.m()
        )));
    }
    let n = g.n();
    let mut census = ForestCensus {
        n,
        by_edges: vec![0; n],
        rooted: vec![0; n * n * n],
        total: 0,
    };
    let mut chosen = Vec::with_capacity(n);
    let labels: Vec<usize> = (0..n).collect();
    forest_search(g, 0, &labels, &mut chosen, &mut census);
    Ok(census)
}

fn forest_search(g: &Graph, idx: usize, labels: &[usize], chosen: &mut Vec<Edge>, census: &mut ForestCensus) {
    let Some(&e) = g.edges().get(idx) else {
        record_forest(labels, chosen.len(), census);
        return;
    };
    forest_search(g, idx + 1, labels, chosen, census);
    let (lu, lv) = (labels[e.u()], labels[e.v()]);
    if lu != lv {
        let merged: Vec<usize> = labels.iter().map(|&l| if l == lv { lu } else { l }).collect();
        chosen.push(e);
        forest_search(g, idx + 1, &merged, chosen, census);
        chosen.pop();
    }
}

fn record_forest(labels: &[usize], k: usize, census: &mut ForestCensus) {
    let n = labels.len();
    let mut size = vec![0u64; n];
    for &l in labels {
        size[l] += 1;
    }
    let rootings: u64 = size.iter().filter(|&&s| s > 0).product();
    census.by_edges[k] += rootings;
    census.total += rootings;
    for i in 0..n {
        let per_root = rootings / size[labels[i]];
        for j in 0..n {
            if labels[j] == labels[i] {
                census.rooted[(k * n + i) * n + j] += per_root;
            }
        }
    }
}

/// The bi-partition identity for one edge `(i, j)`:
/// `ε(F_{n−2}^{ii}) − ε(F_{n−2}^{ij}) + ε(F_{n−2}^{jj}) − ε(F_{n−2}^{ji}) = n · τᵢⱼ`,
/// where `τᵢⱼ = Σ |T(S)| |T(S′)|` over vertex bi-partitions into two
/// connected halves separating `i` from `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitionReport {
    pub edge: Edge,
    pub lhs: i128,
    pub rhs: i128,
    pub tau: u128,
    /// Bi-partitions with both halves connected and the edge crossing.
    pub contributing_partitions: usize,
}

impl BipartitionReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn verify_bipartition_identity(g: &Graph, edge: Edge) -> Result<BipartitionReport> {
    let census = enumerate_rooted_forests(g)?;
    bipartition_with_census(g, &census, edge)
}

fn bipartition_with_census(g: &Graph, census: &ForestCensus, edge: Edge) -> Result<BipartitionReport> {
    let n = g.n();
    if n > BIPARTITION_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceeds the bi-partition limit of {BIPARTITION_MAX_VERTICES}"
        )));
    }
    if !g.contains_edge(edge) {
        return Err(Error::MissingEdge(edge));
    }
    let (i, j) = edge.endpoints();
    let k = n - 2;
    let f = |a, b| i128::from(census.rooted(k, a, b));
    let lhs = f(i, i) - f(i, j) + f(j, j) - f(j, i);

    let mut tau = 0u128;
    let mut contributing = 0;
    for mask in 0u32..(1 << n) {
        if mask & (1 << i) == 0 || mask & (1 << j) != 0 {
            continue;
        }
        let side: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let other: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
        let (s, s2) = (induced_subgraph(g, &side)?, induced_subgraph(g, &other)?);
        if !s.is_connected() || !s2.is_connected() {
            continue;
        }
        contributing += 1;
        tau += kirchhoff_tree_count(&s)? * kirchhoff_tree_count(&s2)?;
    }
    let rhs = n as i128 * tau as i128;
    Ok(BipartitionReport { edge, lhs, rhs, tau, contributing_partitions: contributing })
}

/// The subgraph induced by `vertices`, relabelled to `0..vertices.len()`.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let mut index = vec![usize::MAX; g.n()];
    for (new, &old) in vertices.iter().enumerate() {
        index[old] = new;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|e| index[e.u()] != usize::MAX && index[e.v()] != usize::MAX)
        .map(|e| Edge::new(index[e.u()], index[e.v()]));
    Graph::new(vertices.len(), edges)
}

/// One named check with its worst deviation.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub max_deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, max_deviation: f64) {
        self.checks.push(Check { name, passed, max_deviation });
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,status,max_deviation\n");
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "fail" };
            out.push_str(&format!("{},{status},{:e}\n", c.name, c.max_deviation));
        }
        out
    }
}

pub const CHECK_FOREST_MATRIX: &str = "forest_matrix_ratio";
pub const CHECK_PSEUDOINVERSE: &str = "pseudoinverse_dense_forests";
pub const CHECK_DETERMINANT: &str = "matrix_forest_determinant";
pub const CHECK_TREE_COUNT: &str = "spanning_forest_tree_count";
pub const CHECK_SINGLE_EDGE: &str = "single_edge_forests";
pub const CHECK_CENSUS: &str = "census_consistency";
pub const CHECK_BIPARTITION: &str = "bipartition_identity";

/// Checks the dense matrices against the rooted-forest census:
///
/// * `Qᵢⱼ = Σ_k ε(F_k^{ij}) / Σ_k ε(F_k)`
/// * `L⁺ᵢⱼ = (ε(F_{n−2}^{ij}) − ε(F_{n−2})/n) / ε(F_{n−1})` (connected only)
/// * `det(I + L)` equals the total forest count
/// * `ε(F_{n−1}^{ij}) = |T(G)|` for all `i, j` (connected only)
/// * `ε(F_1^{ii}) = 2m − d(vᵢ)`
/// * census consistency, and the bi-partition identity on every edge when
///   `n ≤ 6` and the graph is connected.
pub fn verify_forest_identities(g: &Graph) -> Result<VerificationReport> {
    let census = enumerate_rooted_forests(g)?;
    let n = g.n();
    let connected = g.is_connected();
    let mut report = VerificationReport::default();

    let q = forest_matrix::<f64>(g)?;
    let total = census.total() as f64;
    let dev = max_over_pairs(n, |i, j| (q[(i, j)] - census.rooted_all(i, j) as f64 / total).abs());
    report.push(CHECK_FOREST_MATRIX, dev <= IDENTITY_TOL, dev);

    if connected && n >= 2 {
        let lp = laplacian_pseudoinverse::<f64>(g)?;
        let dense = census.forests(n - 1) as f64;
        let two_trees = census.forests(n - 2) as f64;
        let dev = max_over_pairs(n, |i, j| {
            let expected = (census.rooted(n - 2, i, j) as f64 - two_trees / n as f64) / dense;
            (lp[(i, j)] - expected).abs()
        });
        report.push(CHECK_PSEUDOINVERSE, dev <= IDENTITY_TOL, dev);
    }

    let det = forest_determinant::<f64>(g)?;
    report.push(CHECK_DETERMINANT, det.round() == total, (det - total).abs() / total);

    let tree_count = kirchhoff_tree_count(g)?;
    if connected {
        let dev = max_over_pairs(n, |i, j| {
            (census.rooted(n - 1, i, j) as f64 - tree_count as f64).abs()
        });
        report.push(CHECK_TREE_COUNT, dev == 0.0, dev);
    }

    if n >= 2 {
        let profile = g.degree_profile();
        let dev = (0..n)
            .map(|i| (census.rooted(1, i, i) as f64 - (2 * g.m() - profile.degrees[i]) as f64).abs())
            .fold(0.0, f64::max);
        report.push(CHECK_SINGLE_EDGE, dev == 0.0, dev);
    }

    let consistent = if connected { census.check_consistency(tree_count).is_ok() } else { true };
    report.push(CHECK_CENSUS, consistent, if consistent { 0.0 } else { 1.0 });

    if connected && (2..=BIPARTITION_MAX_VERTICES).contains(&n) {
        let mut dev = 0.0f64;
        for &e in g.edges() {
            let b = bipartition_with_census(g, &census, e)?;
            dev = dev.max((b.lhs - b.rhs).abs() as f64);
        }
        report.push(CHECK_BIPARTITION, dev == 0.0, dev);
    }
    Ok(report)
}

fn max_over_pairs(n: usize, f: impl Fn(usize, usize) -> f64) -> f64 {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| f(i, j)).fold(0.0, f64::max)
}

/// The exact optimum of compactness over all spanning trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalTrees {
    pub value: Compactness,
    /// How many spanning trees attain `value`.
    pub multiplicity: usize,
    pub example: SpanningTree,
}

/// Minimum (most compact) or maximum (least compact) compactness over every
/// spanning tree.
pub fn exact_extremal_tree(g: &Graph, mode: ExtractionMode) -> Result<ExtremalTrees> {
    let trees = enumerate_spanning_trees(g)?;
    let mut best: Option<ExtremalTrees> = None;
    for t in trees {
        let c = compactness(t.as_graph())?;
        match &mut best {
            None => best = Some(ExtremalTrees { value: c, multiplicity: 1, example: t }),
            Some(b) if c == b.value => b.multiplicity += 1,
            Some(b) => {
                let better = match mode {
                    ExtractionMode::Mcst => c < b.value,
                    ExtractionMode::Lcst => c > b.value,
                };
                if better {
                    *b = ExtremalTrees { value: c, multiplicity: 1, example: t };
                }
            }
        }
    }
    best.ok_or_else(|| Error::NumericalFailure("connected graph without spanning trees".into()))
}
