//! Most and least compact spanning trees of simple connected graphs.
//!
//! A spanning tree is *most compact* when its mean hop distance over all
//! vertex pairs is minimal among the graph's spanning trees, and *least
//! compact* when it is maximal. [`extraction::extract`] approximates both by
//! deleting one edge per round, ranked by the forest distance derived from
//! `(I + L)⁻¹`, while effective resistances from `L⁺` keep bridges in place.
//!
//! The dense algebra is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix it to `f64`, which every caller in this workspace uses.
//! Exact cross-checks live in [`oracle`].

pub mod baselines;
pub mod error;
pub mod extraction;
pub mod forest;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod metrics;
pub mod oracle;
pub mod rng;
pub mod scalar;
pub mod tree;

pub use error::{Error, Result};
pub use extraction::{extract, ExtractionMode, ExtractionOptions, TieBreak, UpdateStrategy};
pub use graph::{parse_graph, serialize_graph, Connectivity, DegreeProfile, Edge, Graph};
pub use metrics::Compactness;
pub use scalar::Scalar;
pub use tree::SpanningTree;

pub type Matrix64 = linalg::Matrix<f64>;
pub type ForestMatrices64 = forest::ForestMatrices<f64>;
pub type EdgeMetric64 = forest::EdgeMetric<f64>;
pub type IterationRecord64 = extraction::IterationRecord<f64>;
pub type ExtractionTrace64 = extraction::ExtractionTrace<f64>;
pub type Extractor64 = extraction::Extractor<f64>;

pub type Matrix32 = linalg::Matrix<f32>;
pub type ForestMatrices32 = forest::ForestMatrices<f32>;
pub type ExtractionTrace32 = extraction::ExtractionTrace<f32>;

/// [`extract`] in double precision.
pub fn extract64(
    graph: &Graph,
    mode: ExtractionMode,
    options: &ExtractionOptions,
) -> Result<(SpanningTree, ExtractionTrace64)> {
    extract::<f64>(graph, mode, options)
}
