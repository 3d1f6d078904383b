//! Rank-and-regress extraction of most/least compact spanning trees.
//!
//! Each round computes the forest distance `Δ` and effective resistance `Ω`
//! of every surviving edge, skips bridges (`Ω ≈ 1`), and deletes the
//! non-bridge edge with the largest `Δ` (most compact mode) or the smallest
//! `Δ` (least compact mode). The graph stays connected throughout, and after
//! `m − (n − 1)` rounds the surviving edges form a spanning tree.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forest::{edge_metrics, EdgeMetric, ForestMatrices};
use crate::graph::{Edge, Graph};
use crate::rng::seeded_rng;
use crate::scalar::Scalar;
use crate::tree::SpanningTree;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtractionMode {
    /// Most compact spanning tree: delete the maximum-`Δ` edge.
    Mcst,
    /// Least compact spanning tree: delete the minimum-`Δ` edge.
    Lcst,
}

impl fmt::Display for ExtractionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtractionMode::Mcst => "mcst",
            ExtractionMode::Lcst => "lcst",
        })
    }
}

impl FromStr for ExtractionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "mcst" => Ok(ExtractionMode::Mcst),
            "lcst" => Ok(ExtractionMode::Lcst),
            other => Err(format!("unknown mode {other:?}, expected mcst or lcst")),
        }
    }
}

/// How `Q` and `L⁺` are refreshed between rounds.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum UpdateStrategy {
    /// Two fresh factorizations per round.
    #[default]
    Recompute,
    /// Rank-one downdates of the previous round's matrices.
    Downdate,
}

/// Which edge to delete when several share the extremal `Δ`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// The lexicographically smallest canonical edge.
    #[default]
    Lexicographic,
    /// A uniformly random tied edge, from a generator seeded once per run.
    Seeded(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtractionOptions {
    pub strategy: UpdateStrategy,
    pub tie_break: TieBreak,
    /// Stop as soon as every surviving edge is a bridge.
    pub early_stop: bool,
    /// Keep every edge metric of every round in the trace (O(m²) memory).
    pub keep_metrics: bool,
}

impl Default for ExtractionOptions {
    fn default() -> Self {
        ExtractionOptions {
            strategy: UpdateStrategy::Recompute,
            tie_break: TieBreak::Lexicographic,
            early_stop: true,
            keep_metrics: false,
        }
    }
}

impl ExtractionOptions {
    pub fn fast() -> Self {
        ExtractionOptions { strategy: UpdateStrategy::Downdate, ..Self::default() }
    }
}

/// One deletion round.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationRecord<T> {
    pub iteration: usize,
    /// Metrics of every edge alive at the start of the round; empty unless
    /// `keep_metrics` was set.
    pub edge_metrics: Vec<EdgeMetric<T>>,
    pub bridges_skipped: Vec<Edge>,
    pub deleted_edge: Edge,
    pub deleted_delta: T,
    pub deleted_omega: T,
    /// Edge count after the deletion.
    pub edges_remaining: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtractionTrace<T> {
    pub mode: ExtractionMode,
    pub n: usize,
    pub initial_edges: usize,
    pub records: Vec<IterationRecord<T>>,
    pub early_stopped: bool,
    pub result: SpanningTree,
}

impl<T: Scalar> ExtractionTrace<T> {
    pub fn deleted_edges(&self) -> Vec<Edge> {
        self.records.iter().map(|r| r.deleted_edge).collect()
    }
}

pub const TRACE_CSV_HEADER: &str =
    "iteration,deleted_u,deleted_v,delta,omega,n_bridges_skipped,n_edges_remaining";

/// One CSV row per deletion round, header first, `\n` line endings.
pub fn trace_to_csv<T: Scalar>(trace: &ExtractionTrace<T>) -> String {
    let mut out = String::from(TRACE_CSV_HEADER);
    out.push('\n');
    for r in &trace.records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.iteration,
            r.deleted_edge.u(),
            r.deleted_edge.v(),
            r.deleted_delta.to_f64_lossy(),
            r.deleted_omega.to_f64_lossy(),
            r.bridges_skipped.len(),
            r.edges_remaining
        ));
    }
    out
}

/// All non-bridge metrics within `tie_tol` of the extremal `Δ`, in
/// canonical edge order. Empty when every edge is a bridge.
pub fn extremal_ties<T: Scalar>(
    metrics: &[EdgeMetric<T>],
    mode: ExtractionMode,
    tie_tol: T,
) -> Vec<EdgeMetric<T>> {
    let candidates = metrics.iter().filter(|m| !m.is_bridge());
    let best = candidates.clone().map(|m| m.delta).reduce(|a, b| match mode {
        ExtractionMode::Mcst => a.max(b),
        ExtractionMode::Lcst => a.min(b),
    });
    let Some(best) = best else {
        return Vec::new();
    };
    let mut ties: Vec<_> = candidates.filter(|m| (m.delta - best).abs() <= tie_tol).copied().collect();
    ties.sort_by_key(|m| m.edge);
    ties
}

/// The extremal non-bridge edge, lexicographically smallest among ties.
/// `None` means every edge is a bridge.
pub fn select_extremal_edge<T: Scalar>(
    metrics: &[EdgeMetric<T>],
    mode: ExtractionMode,
    tie_tol: T,
) -> Option<EdgeMetric<T>> {
    extremal_ties(metrics, mode, tie_tol).into_iter().next()
}

/// Runs rank-and-regress one round at a time.
pub struct Extractor<T> {
    mode: ExtractionMode,
    options: ExtractionOptions,
    graph: Graph,
    initial_edges: usize,
    matrices: Option<ForestMatrices<T>>,
    rng: Option<ChaCha8Rng>,
    records: Vec<IterationRecord<T>>,
    early_stopped: bool,
}

impl<T: Scalar> Extractor<T> {
    pub fn new(graph: &Graph, mode: ExtractionMode, options: ExtractionOptions) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let rng = match options.tie_break {
            TieBreak::Lexicographic => None,
            TieBreak::Seeded(seed) => Some(seeded_rng(seed)),
        };
        Ok(Extractor {
            mode,
            options,
            graph: graph.clone(),
            initial_edges: graph.m(),
            matrices: None,
            rng,
            records: Vec::new(),
            early_stopped: false,
        })
    }

    /// The graph after all deletions so far.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The matrices the downdate path is carrying, if any.
    pub fn matrices(&self) -> Option<&ForestMatrices<T>> {
        self.matrices.as_ref()
    }

    pub fn records(&self) -> &[IterationRecord<T>] {
        &self.records
    }

    pub fn is_done(&self) -> bool {
        self.early_stopped || self.graph.m() < self.graph.n()
    }

    fn current_matrices(&mut self) -> Result<ForestMatrices<T>> {
        match self.options.strategy {
            UpdateStrategy::Recompute => ForestMatrices::compute(&self.graph),
            UpdateStrategy::Downdate => match self.matrices.take() {
                Some(m) => Ok(m),
                None => ForestMatrices::compute(&self.graph),
            },
        }
    }

    /// Performs one deletion. Returns `Ok(None)` once finished.
    pub fn step(&mut self) -> Result<Option<&IterationRecord<T>>> {
        if self.is_done() {
            return Ok(None);
        }
        let mut matrices = self.current_matrices()?;
        let metrics = edge_metrics(&self.graph, &matrices);
        let ties = extremal_ties(&metrics, self.mode, T::tie_tol());
        let chosen = match (&mut self.rng, ties.len()) {
            (_, 0) => None,
            (Some(rng), k) => Some(ties[rng.random_range(0..k)]),
            (None, _) => Some(ties[0]),
        };
        let Some(chosen) = chosen else {
            if self.options.early_stop {
                self.early_stopped = true;
                return Ok(None);
            }
            return Err(Error::NumericalFailure(format!(
                "every one of {} surviving edges reads as a bridge on {} vertices",
                self.graph.m(),
                self.graph.n()
            )));
        };

        if self.options.strategy == UpdateStrategy::Downdate {
            matrices.downdate(chosen.edge, chosen.delta, chosen.omega)?;
            self.matrices = Some(matrices);
        }
        self.graph = self.graph.without_edge(chosen.edge)?;
        debug_assert!(self.graph.is_connected(), "deleting {} disconnected the graph", chosen.edge);

        let bridges_skipped = metrics.iter().filter(|m| m.is_bridge()).map(|m| m.edge).collect();
        self.records.push(IterationRecord {
            iteration: self.records.len(),
            edge_metrics: if self.options.keep_metrics { metrics } else { Vec::new() },
            bridges_skipped,
            deleted_edge: chosen.edge,
            deleted_delta: chosen.delta,
            deleted_omega: chosen.omega,
            edges_remaining: self.graph.m(),
        });
        Ok(self.records.last())
    }

    pub fn finish(mut self) -> Result<(SpanningTree, ExtractionTrace<T>)> {
        while self.step()?.is_some() {}
        let tree = SpanningTree::new(self.graph).map_err(|e| {
            Error::NumericalFailure(format!("extraction stopped without a spanning tree: {e}"))
        })?;
        let trace = ExtractionTrace {
            mode: self.mode,
            n: tree.n(),
            initial_edges: self.initial_edges,
            records: self.records,
            early_stopped: self.early_stopped,
            result: tree.clone(),
        };
        Ok((tree, trace))
    }
}

/// Extracts a most or least compact spanning tree of a connected graph.
pub fn extract<T: Scalar>(
    graph: &Graph,
    mode: ExtractionMode,
    options: &ExtractionOptions,
) -> Result<(SpanningTree, ExtractionTrace<T>)> {
    Extractor::new(graph, mode, options.clone())?.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn triangle_pendant() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap()
    }

    fn metric(u: usize, v: usize, delta: f64, omega: f64) -> EdgeMetric<f64> {
        EdgeMetric { edge: Edge::new(u, v), delta, omega }
    }

    #[test]
    fn k4_end_states() {
        let opts = ExtractionOptions::default();
        let (t, trace) = extract::<f64>(&complete(4), ExtractionMode::Mcst, &opts).unwrap();
        assert!(t.is_star());
        assert_eq!(trace.records.len(), 3);
        let (t, trace) = extract::<f64>(&complete(4), ExtractionMode::Lcst, &opts).unwrap();
        assert!(t.is_path());
        assert_eq!(trace.records.len(), 3);
    }

    #[test]
    fn tree_input_is_returned_unchanged() {
        let p5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        for mode in [ExtractionMode::Mcst, ExtractionMode::Lcst] {
            let (t, trace) = extract::<f64>(&p5, mode, &ExtractionOptions::default()).unwrap();
            assert_eq!(t.as_graph(), &p5);
            assert!(trace.records.is_empty());
        }
    }

    #[test]
    fn bridge_is_skipped_in_favor_of_triangle_edge() {
        let opts = ExtractionOptions { keep_metrics: true, ..Default::default() };
        let (t, trace) = extract::<f64>(&triangle_pendant(), ExtractionMode::Mcst, &opts).unwrap();
        let r = &trace.records[0];
        assert_eq!(r.deleted_edge, Edge::new(1, 2));
        assert_eq!(r.bridges_skipped, vec![Edge::new(0, 3)]);
        assert!((r.deleted_delta - 0.5).abs() < 1e-12);
        assert_eq!(r.edge_metrics.len(), 4);
        assert_eq!(t.edges(), &[Edge::new(0, 1), Edge::new(0, 2), Edge::new(0, 3)]);
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            extract::<f64>(&g, ExtractionMode::Mcst, &ExtractionOptions::default()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn selection_examples() {
        let k4: Vec<_> = complete(4).edges().iter().map(|e| metric(e.u(), e.v(), 0.4, 0.5)).collect();
        assert_eq!(
            select_extremal_edge(&k4, ExtractionMode::Mcst, 1e-12).unwrap().edge,
            Edge::new(0, 1)
        );
        assert_eq!(extremal_ties(&k4, ExtractionMode::Lcst, 1e-12).len(), 6);

        let tp = vec![
            metric(0, 1, 0.475, 2.0 / 3.0),
            metric(0, 2, 0.475, 2.0 / 3.0),
            metric(0, 3, 0.6, 1.0),
            metric(1, 2, 0.5, 2.0 / 3.0),
        ];
        assert_eq!(select_extremal_edge(&tp, ExtractionMode::Mcst, 1e-12).unwrap().edge, Edge::new(1, 2));
        assert_eq!(select_extremal_edge(&tp, ExtractionMode::Lcst, 1e-12).unwrap().edge, Edge::new(0, 1));

        let tree = vec![metric(0, 1, 0.6, 1.0), metric(1, 2, 0.5, 1.0 - 1e-12)];
        assert!(select_extremal_edge(&tree, ExtractionMode::Mcst, 1e-12).is_none());
    }

    #[test]
    fn near_ties_within_tolerance_pick_smallest_edge() {
        let ms = vec![metric(2, 3, 0.4 + 5e-13, 0.5), metric(0, 1, 0.4, 0.5), metric(1, 2, 0.39, 0.5)];
        assert_eq!(select_extremal_edge(&ms, ExtractionMode::Mcst, 1e-12).unwrap().edge, Edge::new(0, 1));
    }

    #[test]
    fn seeded_tie_break_is_reproducible_and_valid() {
        let g = complete(6);
        let opts = ExtractionOptions { tie_break: TieBreak::Seeded(7), ..Default::default() };
        let (a, ta) = extract::<f64>(&g, ExtractionMode::Mcst, &opts).unwrap();
        let (b, tb) = extract::<f64>(&g, ExtractionMode::Mcst, &opts).unwrap();
        assert_eq!(a, b);
        assert_eq!(ta.deleted_edges(), tb.deleted_edges());
        assert!(a.is_star());
    }

    #[test]
    fn trace_csv_layout() {
        let (_, trace) =
            extract::<f64>(&triangle_pendant(), ExtractionMode::Mcst, &ExtractionOptions::default()).unwrap();
        let csv = trace_to_csv(&trace);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], TRACE_CSV_HEADER);
        assert!(lines[1].starts_with("0,1,2,0.5"));
        assert!(lines[1].ends_with(",1,3"));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("MCST".parse::<ExtractionMode>(), Ok(ExtractionMode::Mcst));
        assert_eq!("lcst".parse::<ExtractionMode>(), Ok(ExtractionMode::Lcst));
        assert!("mst".parse::<ExtractionMode>().is_err());
    }
}
