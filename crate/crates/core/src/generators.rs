//! Benchmark graph families: complete, star, path, Erdős–Rényi `G(n, ρ)`
//! and Barabási–Albert preferential attachment.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::rng::seeded_rng;

/// ER samples are redrawn until connected, at most this many times.
pub const ER_MAX_RETRIES: usize = 1000;

/// Largest supported attachment count for BA graphs.
pub const BA_MAX_ATTACH: usize = 3;

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Family {
    Complete,
    Star,
    Path,
    /// Each pair is an edge independently with probability `rho`.
    Er { rho: f64 },
    /// Every new vertex attaches to `attach` distinct existing vertices.
    Ba { attach: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Path => "path",
            Family::Er { .. } => "er",
            Family::Ba { .. } => "ba",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GeneratorSpec { family, n, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        match self.family {
            Family::Er { rho } if !(0.0..=1.0).contains(&rho) => {
                Err(Error::InvalidSpec(format!("rho {rho} outside [0, 1]")))
            }
            Family::Ba { attach } if attach == 0 || attach > BA_MAX_ATTACH => Err(Error::InvalidSpec(
                format!("attach count {attach} outside [1, {BA_MAX_ATTACH}]"),
            )),
            Family::Ba { attach } if self.n <= attach => Err(Error::InvalidSpec(format!(
                "BA graphs need n > attach count (n = {}, attach = {attach})",
                self.n
            ))),
            _ => Ok(()),
        }
    }
}

/// Builds the graph a spec describes. Deterministic in `(spec, seed)`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    match spec.family {
        Family::Complete => Ok(complete(n)),
        Family::Star => Ok(star(n)),
        Family::Path => Ok(path(n)),
        Family::Er { rho } => erdos_renyi(n, rho, &mut seeded_rng(spec.seed)),
        Family::Ba { attach } => barabasi_albert(n, attach, &mut seeded_rng(spec.seed)),
    }
}

/// `K_n`. Panics if `n == 0`.
pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("K_n is simple")
}

/// `S_n` centred at vertex 0. Panics if `n == 0`.
pub fn star(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (0, i))).expect("S_n is simple")
}

/// `P_n` visiting vertices in index order. Panics if `n == 0`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("P_n is simple")
}

/// Connected `G(n, rho)`, redrawn up to [`ER_MAX_RETRIES`] times.
pub fn erdos_renyi<R: Rng>(n: usize, rho: f64, rng: &mut R) -> Result<Graph> {
    GeneratorSpec::new(Family::Er { rho }, n, 0).validate()?;
    for _ in 0..ER_MAX_RETRIES {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random::<f64>() < rho {
                    edges.push(Edge::new(i, j));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::ConnectivityRetriesExhausted(ER_MAX_RETRIES))
}

/// Preferential attachment seeded with a clique on `attach + 1` vertices.
/// Every later vertex picks `attach` distinct targets with probability
/// proportional to their current degree, so the result has exactly
/// `C(attach + 1, 2) + attach · (n − attach − 1)` edges.
pub fn barabasi_albert<R: Rng>(n: usize, attach: usize, rng: &mut R) -> Result<Graph> {
    GeneratorSpec::new(Family::Ba { attach }, n, 0).validate()?;
    let mut edges = Vec::new();
    // One entry per edge endpoint: sampling uniformly from it is sampling
    // vertices proportionally to degree.
    let mut endpoints = Vec::new();
    for i in 0..=attach {
        for j in i + 1..=attach {
            edges.push(Edge::new(i, j));
            endpoints.extend([i, j]);
        }
    }
    let mut targets = Vec::with_capacity(attach);
    for v in attach + 1..n {
        targets.clear();
        while targets.len() < attach {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push(Edge::new(t, v));
            endpoints.extend([t, v]);
        }
    }
    Graph::new(n, edges)
}
