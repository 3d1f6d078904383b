//! Batch comparison of extracted trees against random spanning trees over
//! seeded ER and BA graph suites.
//!
//! Every row is a pure function of the suite config, so rows may be
//! computed in parallel; they are sorted by `(n, parameter, graph_id)`
//! before being written.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use compact_span::baselines::random_tree_suite;
use compact_span::generators::{generate, Family, GeneratorSpec};
use compact_span::metrics::{apsp, compactness_from};
use compact_span::rng::stream_rng;
use compact_span::{extract64, ExtractionMode, ExtractionOptions, Graph};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::svg::{line_chart, Series};

pub const THREADS_ENV: &str = "COMPACT_SPAN_THREADS";

/// Mixed into graph seeds to seed the random-tree suites.
const SUITE_SEED_SALT: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Er,
    Ba,
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteKind::Er => "er",
            SuiteKind::Ba => "ba",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub kind: SuiteKind,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub rho_min: f64,
    pub rho_max: f64,
    pub attach_min: usize,
    pub attach_max: usize,
    pub seed: u64,
    pub extraction: ExtractionOptions,
}

impl SuiteConfig {
    pub fn er(count: usize, seed: u64) -> Self {
        SuiteConfig {
            kind: SuiteKind::Er,
            count,
            n_min: 10,
            n_max: 99,
            rho_min: 0.25,
            rho_max: 0.5,
            attach_min: 1,
            attach_max: 2,
            seed,
            extraction: ExtractionOptions::default(),
        }
    }

    pub fn ba(count: usize, seed: u64) -> Self {
        SuiteConfig { kind: SuiteKind::Ba, ..Self::er(count, seed) }
    }

    fn validate(&self) -> CliResult<()> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(CliError::Usage(format!("bad order range [{}, {}]", self.n_min, self.n_max)));
        }
        if !(0.0..=1.0).contains(&self.rho_min) || self.rho_min > self.rho_max || self.rho_max > 1.0 {
            return Err(CliError::Usage(format!("bad rho range [{}, {}]", self.rho_min, self.rho_max)));
        }
        if self.attach_min == 0 || self.attach_min > self.attach_max {
            return Err(CliError::Usage(format!(
                "bad attach range [{}, {}]",
                self.attach_min, self.attach_max
            )));
        }
        Ok(())
    }

    /// The generator spec of every graph, in generation order.
    pub fn specs(&self) -> Vec<GeneratorSpec> {
        let mut rng = stream_rng(self.seed, u64::MAX);
        (0..self.count)
            .map(|_| {
                let n = rng.random_range(self.n_min..=self.n_max);
                let family = match self.kind {
                    SuiteKind::Er => {
                        let rho = rng.random_range(self.rho_min..=self.rho_max);
                        Family::Er { rho: (rho * 1e4).round() / 1e4 }
                    }
                    SuiteKind::Ba => {
                        let attach = rng.random_range(self.attach_min..=self.attach_max);
                        Family::Ba { attach: attach.min(n - 1) }
                    }
                };
                GeneratorSpec::new(family, n, rng.random())
            })
            .collect()
    }
}

/// One CSV row. `runtime_ms` is kept out of the CSV so reruns are
/// byte-identical; it goes to a separate timing file.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub graph_id: usize,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub parameter: f64,
    pub seed: u64,
    pub c_graph: Option<f64>,
    pub c_mcst: Option<f64>,
    pub c_lcst: Option<f64>,
    pub c_random_mean: Option<f64>,
    pub c_random_min: Option<f64>,
    pub c_random_max: Option<f64>,
    pub diam_graph: Option<usize>,
    pub diam_mcst: Option<usize>,
    pub diam_lcst: Option<usize>,
    pub diam_random_mean: Option<f64>,
    pub error: String,
    #[serde(skip)]
    pub runtime_ms: f64,
}

pub const RECORD_CSV_HEADER: &str = "graph_id,family,n,m,parameter,seed,c_graph,c_mcst,c_lcst,\
c_random_mean,c_random_min,c_random_max,diam_graph,diam_mcst,diam_lcst,diam_random_mean,error";

impl ExperimentRecord {
    fn blank(graph_id: usize, spec: &GeneratorSpec) -> Self {
        let parameter = match spec.family {
            Family::Er { rho } => rho,
            Family::Ba { attach } => attach as f64,
            _ => 0.0,
        };
        ExperimentRecord {
            graph_id,
            family: spec.family.name().to_string(),
            n: spec.n,
            m: 0,
            parameter,
            seed: spec.seed,
            c_graph: None,
            c_mcst: None,
            c_lcst: None,
            c_random_mean: None,
            c_random_min: None,
            c_random_max: None,
            diam_graph: None,
            diam_mcst: None,
            diam_lcst: None,
            diam_random_mean: None,
            error: String::new(),
            runtime_ms: 0.0,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.error.is_empty()
    }

    /// Relative excess of the extracted most compact tree over the random
    /// mean; positive when the random trees are more compact on average.
    pub fn mcst_excess_over_random(&self) -> Option<f64> {
        Some((self.c_mcst? - self.c_random_mean?) / self.c_random_mean?)
    }
}

fn measure(graph: &Graph, record: &mut ExperimentRecord, options: &ExtractionOptions) -> compact_span::Result<()> {
    record.m = graph.m();
    let d = apsp(graph)?;
    record.c_graph = Some(compactness_from(&d).value());
    record.diam_graph = Some(d.max() as usize);

    for mode in [ExtractionMode::Mcst, ExtractionMode::Lcst] {
        let (tree, _) = extract64(graph, mode, options)?;
        let d = apsp(tree.as_graph())?;
        let (c, diam) = (Some(compactness_from(&d).value()), Some(d.max() as usize));
        match mode {
            ExtractionMode::Mcst => (record.c_mcst, record.diam_mcst) = (c, diam),
            ExtractionMode::Lcst => (record.c_lcst, record.diam_lcst) = (c, diam),
        }
    }

    let suite = random_tree_suite(graph, record.seed ^ SUITE_SEED_SALT)?;
    record.c_random_mean = Some(suite.mean_compactness());
    record.c_random_min = suite.min_compactness().map(|c| c.value());
    record.c_random_max = suite.max_compactness().map(|c| c.value());
    record.diam_random_mean = Some(suite.mean_diameter());
    Ok(())
}

/// Builds one row; failures are recorded in the row, not propagated.
pub fn run_row(graph_id: usize, spec: &GeneratorSpec, options: &ExtractionOptions) -> ExperimentRecord {
    let start = Instant::now();
    let mut record = ExperimentRecord::blank(graph_id, spec);
    let outcome = generate(spec).and_then(|g| measure(&g, &mut record, options));
    if let Err(e) = outcome {
        record.error = e.to_string();
    }
    record.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    record
}

/// Runs a whole suite and returns rows sorted by order, then parameter.
pub fn run_suite(config: &SuiteConfig) -> CliResult<Vec<ExperimentRecord>> {
    config.validate()?;
    let specs = config.specs();
    let rows = || -> Vec<ExperimentRecord> {
        specs.par_iter().enumerate().map(|(id, spec)| run_row(id, spec, &config.extraction)).collect()
    };
    let mut rows = match thread_cap() {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(rows),
        None => rows(),
    };
    rows.sort_by(|a, b| {
        a.n.cmp(&b.n).then(a.parameter.total_cmp(&b.parameter)).then(a.graph_id.cmp(&b.graph_id))
    });
    Ok(rows)
}

/// `COMPACT_SPAN_THREADS`, when set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&t| t > 0)
}

pub fn records_to_csv(rows: &[ExperimentRecord]) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv buffer: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn timings_to_csv(rows: &[ExperimentRecord]) -> String {
    let mut out = String::from("graph_id,runtime_ms\n");
    for r in rows {
        out.push_str(&format!("{},{:.3}\n", r.graph_id, r.runtime_ms));
    }
    out
}

/// The compactness panel and the diameter panel, four series each, over
/// rows in CSV order.
pub fn render_charts(kind: SuiteKind, rows: &[ExperimentRecord]) -> (String, String) {
    let ok: Vec<&ExperimentRecord> = rows.iter().filter(|r| r.is_ok()).collect();
    let col = |f: &dyn Fn(&ExperimentRecord) -> Option<f64>| -> Vec<f64> {
        ok.iter().map(|r| f(r).unwrap_or(f64::NAN)).collect()
    };
    let compactness = vec![
        Series::new("G", col(&|r| r.c_graph)),
        Series::new("MCST", col(&|r| r.c_mcst)),
        Series::new("LCST", col(&|r| r.c_lcst)),
        Series::new("random mean", col(&|r| r.c_random_mean)),
    ];
    let diameter = vec![
        Series::new("G", col(&|r| r.diam_graph.map(|d| d as f64))),
        Series::new("MCST", col(&|r| r.diam_mcst.map(|d| d as f64))),
        Series::new("LCST", col(&|r| r.diam_lcst.map(|d| d as f64))),
        Series::new("random mean", col(&|r| r.diam_random_mean)),
    ];
    let family = match kind {
        SuiteKind::Er => "ER graphs (by n, then rho)",
        SuiteKind::Ba => "BA graphs (by n, then attach count)",
    };
    (
        line_chart(&format!("Average shortest path distance: {family}"), "mean hops", &compactness),
        line_chart(&format!("Diameter: {family}"), "hops", &diameter),
    )
}

/// Paths written by [`write_suite`].
#[derive(Clone, Debug)]
pub struct SuiteOutputs {
    pub csv: std::path::PathBuf,
    pub timings: std::path::PathBuf,
    pub compactness_svg: std::path::PathBuf,
    pub diameter_svg: std::path::PathBuf,
}

pub fn write_suite(kind: SuiteKind, rows: &[ExperimentRecord], dir: &Path) -> CliResult<SuiteOutputs> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let out = SuiteOutputs {
        csv: dir.join(format!("{kind}_suite.csv")),
        timings: dir.join(format!("{kind}_timings.csv")),
        compactness_svg: dir.join(format!("{kind}_compactness.svg")),
        diameter_svg: dir.join(format!("{kind}_diameter.svg")),
    };
    let (c_svg, d_svg) = render_charts(kind, rows);
    for (path, body) in [
        (&out.csv, records_to_csv(rows)?),
        (&out.timings, timings_to_csv(rows)),
        (&out.compactness_svg, c_svg),
        (&out.diameter_svg, d_svg),
    ] {
        std::fs::write(path, body).map_err(|e| CliError::io(path, e))?;
    }
    Ok(out)
}
