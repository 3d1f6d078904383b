//! Subcommand implementations. Every command computes its full output
//! before touching the filesystem, so a failed run leaves no partial files.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use compact_span::baselines::random_tree_suite;
use compact_span::extraction::trace_to_csv;
use compact_span::generators::{generate, Family, GeneratorSpec};
use compact_span::metrics::{apsp, compactness_from};
use compact_span::oracle::{
    exact_extremal_tree, kirchhoff_tree_count, verify_forest_identities, ENUMERATION_MAX_VERTICES,
};
use compact_span::{
    extract64, parse_graph, serialize_graph, ExtractionMode, ExtractionOptions, Graph, TieBreak,
    UpdateStrategy,
};

use crate::cli::{
    BaselineArgs, Command, ExperimentArgs, ExtractArgs, GenArgs, GenFamily, MetricsArgs, OracleArgs,
    Suite, Switch,
};
use crate::error::{CliError, CliResult};
use crate::experiment::{run_suite, write_suite, SuiteConfig, SuiteKind};

pub fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Extract(a) => cmd_extract(&a),
        Command::Gen(a) => cmd_gen(&a),
        Command::Metrics(a) => cmd_metrics(&a),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Baseline(a) => cmd_baseline(&a),
        Command::Experiment(a) => cmd_experiment(&a).map(|_| ()),
    }
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    Ok(parse_graph(&text)?)
}

/// Writes to `path`, or to stdout when there is none.
fn emit(path: Option<&Path>, body: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| if body.ends_with('\n') { Ok(()) } else { out.write_all(b"\n") })
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

pub fn cmd_extract(args: &ExtractArgs) -> CliResult<()> {
    let graph = read_graph(&args.input)?;
    let options = ExtractionOptions {
        strategy: if args.fast { UpdateStrategy::Downdate } else { UpdateStrategy::Recompute },
        tie_break: args.seed.map_or(TieBreak::Lexicographic, TieBreak::Seeded),
        early_stop: args.early_stop == Switch::On,
        keep_metrics: false,
    };
    let (tree, trace) = extract64(&graph, args.mode.into(), &options)?;
    let tree_text = serialize_graph(tree.as_graph());
    let trace_text = trace_to_csv(&trace);
    if let Some(p) = &args.trace {
        std::fs::write(p, trace_text).map_err(|e| CliError::io(p, e))?;
    }
    emit(args.output.as_deref(), &tree_text)
}

pub fn cmd_gen(args: &GenArgs) -> CliResult<()> {
    let family = match args.family {
        GenFamily::Complete => Family::Complete,
        GenFamily::Star => Family::Star,
        GenFamily::Path => Family::Path,
        GenFamily::Er => Family::Er { rho: args.rho },
        GenFamily::Ba => Family::Ba { attach: args.m_attach },
    };
    let graph = generate(&GeneratorSpec::new(family, args.n, args.seed))?;
    emit(args.output.as_deref(), &serialize_graph(&graph))
}

/// `metric,value` rows for one graph.
pub fn metrics_report(graph: &Graph) -> CliResult<String> {
    let d = apsp(graph)?;
    let c = compactness_from(&d);
    let profile = graph.degree_profile();
    let mut out = String::from("metric,value\n");
    let _ = writeln!(out, "n,{}", graph.n());
    let _ = writeln!(out, "m,{}", graph.m());
    let _ = writeln!(out, "compactness,{}", c.value());
    let _ = writeln!(out, "total_distance,{}", c.total_distance());
    let _ = writeln!(out, "diameter,{}", d.max());
    let _ = writeln!(out, "max_degree,{}", profile.degrees.iter().max().copied().unwrap_or(0));
    let _ = writeln!(out, "min_degree,{}", profile.degrees.iter().min().copied().unwrap_or(0));
    let _ = writeln!(out, "volume,{}", profile.volume);
    let _ = writeln!(out, "is_tree,{}", graph.is_tree());
    Ok(out)
}

pub fn cmd_metrics(args: &MetricsArgs) -> CliResult<()> {
    let graph = read_graph(&args.input)?;
    emit(args.output.as_deref(), &metrics_report(&graph)?)
}

/// Tree counts, exact optima for both modes, and the forest identity
/// checks, as a `key,value` block followed by the check CSV.
pub fn oracle_report(graph: &Graph) -> CliResult<String> {
    if graph.n() > ENUMERATION_MAX_VERTICES {
        return Err(compact_span::Error::TooLarge(format!(
            "{} vertices, oracle limit is {ENUMERATION_MAX_VERTICES}",
            graph.n()
        ))
        .into());
    }
    let trees = kirchhoff_tree_count(graph)?;
    let mcst = exact_extremal_tree(graph, ExtractionMode::Mcst)?;
    let lcst = exact_extremal_tree(graph, ExtractionMode::Lcst)?;
    let mut out = String::from("key,value\n");
    let _ = writeln!(out, "spanning_trees,{trees}");
    let _ = writeln!(out, "mcst_optimum,{}", mcst.value.value());
    let _ = writeln!(out, "mcst_optimal_trees,{}", mcst.multiplicity);
    let _ = writeln!(out, "lcst_optimum,{}", lcst.value.value());
    let _ = writeln!(out, "lcst_optimal_trees,{}", lcst.multiplicity);
    for mode in [ExtractionMode::Mcst, ExtractionMode::Lcst] {
        let (tree, _) = extract64(graph, mode, &ExtractionOptions::default())?;
        let c = compactness_from(&apsp(tree.as_graph())?);
        let _ = writeln!(out, "{mode}_extracted,{}", c.value());
    }
    out.push('\n');
    match verify_forest_identities(graph) {
        Ok(report) => out.push_str(&report.to_csv()),
        Err(compact_span::Error::TooLarge(reason)) => {
            let _ = writeln!(out, "# forest identities skipped: {reason}");
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

pub fn cmd_oracle(args: &OracleArgs) -> CliResult<()> {
    let graph = read_graph(&args.input)?;
    emit(args.output.as_deref(), &oracle_report(&graph)?)
}

pub fn cmd_baseline(args: &BaselineArgs) -> CliResult<()> {
    let graph = read_graph(&args.input)?;
    let suite = random_tree_suite(&graph, args.seed)?;
    if let Some(p) = &args.stats {
        std::fs::write(p, suite.stats_csv()).map_err(|e| CliError::io(p, e))?;
    }
    emit(args.output.as_deref(), &suite.to_edge_lists())
}

pub fn suite_config(args: &ExperimentArgs) -> SuiteConfig {
    let kind = match args.suite {
        Suite::Er => SuiteKind::Er,
        Suite::Ba => SuiteKind::Ba,
    };
    let count = args.count.unwrap_or(match kind {
        SuiteKind::Er => 50,
        SuiteKind::Ba => 36,
    });
    let (rho_min, rho_max) = args.rho.map_or((args.rho_min, args.rho_max), |r| (r, r));
    let (attach_min, attach_max) = args.m_attach.map_or((args.attach_min, args.attach_max), |a| (a, a));
    SuiteConfig {
        kind,
        count,
        n_min: args.n_min,
        n_max: args.n_max,
        rho_min,
        rho_max,
        attach_min,
        attach_max,
        seed: args.seed,
        extraction: if args.fast { ExtractionOptions::fast() } else { ExtractionOptions::default() },
    }
}

pub fn cmd_experiment(args: &ExperimentArgs) -> CliResult<crate::experiment::SuiteOutputs> {
    let config = suite_config(args);
    let rows = run_suite(&config)?;
    let failed = rows.iter().filter(|r| !r.is_ok()).count();
    let out = write_suite(config.kind, &rows, &args.output)?;
    eprintln!(
        "{} suite: {} rows ({failed} failed) -> {}",
        config.kind,
        rows.len(),
        out.csv.display()
    );
    Ok(out)
}
