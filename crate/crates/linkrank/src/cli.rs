//! The `linkrank` command line.
//!
//! Exit codes: 0 success, 2 input, parse or configuration error, 3 when
//! `--strict` is set and the ranking did not converge.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkrank_core::community::{rank_nodes, select_communities};
use linkrank_core::generate::{self, Model};
use linkrank_core::{
    overlap, Algorithm, DirectedGraph, Norm, PageRankMode, PhitsConfig, RankingConfig,
    SalsaMethod, Selection,
};
use thiserror::Error;

use crate::export::{export_dot, export_graphml};
use crate::formats::{parse_graph, write_edge_list, InputFormat};
use crate::report::{write_report, ConfigEcho, Real, RunReport};
use crate::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "linkrank", version, about = "Link-analysis ranking and community-page detection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank every node and write a JSON report.
    Rank(RankArgs),
    /// Rank, then report zero-out-degree pages among the top candidates.
    Detect(DetectArgs),
    /// Write a synthetic graph as an edge list.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Indegree,
    Pagerank,
    Hits,
    Salsa,
    Phits,
    Hubavg,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Indegree => Algorithm::InDegree,
            AlgoArg::Pagerank => Algorithm::PageRank,
            AlgoArg::Hits => Algorithm::Hits,
            AlgoArg::Salsa => Algorithm::Salsa,
            AlgoArg::Phits => Algorithm::Phits,
            AlgoArg::Hubavg => Algorithm::HubAvg,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edges,
    Matrix,
    Fbjson,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edges => InputFormat::Edges,
            FormatArg::Matrix => InputFormat::Matrix,
            FormatArg::Fbjson => InputFormat::FbJson,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    L1,
    L2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SalsaArg {
    ClosedForm,
    PowerIteration,
}

#[derive(Debug, Clone, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub algo: AlgoArg,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "edges")]
    pub format: FormatArg,
    /// Undamped PageRank (sinks keep their rank) instead of the damped form.
    #[arg(long)]
    pub paper_faithful: bool,
    #[arg(long, default_value_t = 0.85)]
    pub damping: f64,
    /// Output norm; defaults to l2 for hits/hubavg and l1 otherwise.
    #[arg(long, value_enum)]
    pub norm: Option<NormArg>,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, default_value_t = 1000)]
    pub max_iters: usize,
    #[arg(long, value_enum, default_value = "closed-form")]
    pub salsa_method: SalsaArg,
    /// Number of PHITS factors (required for --algo phits).
    #[arg(long)]
    pub factors: Option<usize>,
    #[arg(long, default_value_t = 8)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 500)]
    pub max_em_iters: usize,
    #[arg(long, default_value_t = 1e-7)]
    pub ll_tol: f64,
    /// Report JSON destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Exit with status 3 when the ranking did not converge.
    #[arg(long)]
    pub strict: bool,
    /// Include wall time in the report (makes reports non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    /// Candidate pool size; defaults to max(1, n/100).
    #[arg(long, conflicts_with = "threshold")]
    pub top_k: Option<usize>,
    /// Keep candidates scoring at least this much.
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub graphml: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Cycle,
    Star,
    Bipartite,
    Tkc,
    Planted,
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Comma-separated values, positional or `key=value`:
    /// cycle n; star k; bipartite hubs,authorities;
    /// tkc dense_hubs,dense_authorities,sparse_hubs;
    /// planted pages,members_per_page,decoys; random n,p.
    #[arg(long, default_value = "")]
    pub params: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge list destination; stdout when absent. Isolated nodes are not written.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] linkrank_core::Error),
}

/// Runs the CLI with explicit streams; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Rank(a) => run_rank(&a, None, stdout),
        Command::Detect(a) => run_rank(&a.rank, Some(&a), stdout),
        Command::Gen(a) => run_gen(&a, stdout).map(|()| EXIT_OK),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "linkrank: {e}");
            EXIT_INPUT
        }
    }
}

fn ranking_config(a: &RankArgs) -> RankingConfig {
    RankingConfig {
        max_iters: a.max_iters,
        tol: a.tol,
        norm: a.norm.map(|n| match n {
            NormArg::L1 => Norm::L1,
            NormArg::L2 => Norm::L2,
        }),
        pagerank_mode: if a.paper_faithful { PageRankMode::PaperFaithful } else { PageRankMode::Damped },
        damping: a.damping,
        salsa_method: match a.salsa_method {
            SalsaArg::ClosedForm => SalsaMethod::ClosedForm,
            SalsaArg::PowerIteration => SalsaMethod::PowerIteration,
        },
    }
}

fn read_to_string(path: &std::path::Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write_file(path: &std::path::Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_graph(a: &RankArgs) -> Result<DirectedGraph, CliError> {
    let text = read_to_string(&a.input)?;
    parse_graph(&text, a.format.into())
        .map_err(|source| CliError::Parse { path: a.input.display().to_string(), source })
}

fn run_rank(a: &RankArgs, detect: Option<&DetectArgs>, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let algorithm: Algorithm = a.algo.into();
    let cfg = ranking_config(a);
    cfg.validate()?;
    let phits_cfg = match (algorithm, a.factors) {
        (Algorithm::Phits, None) => return Err(CliError::Usage("--algo phits needs --factors".into())),
        (_, f) => f.map(|factors| PhitsConfig {
            factors,
            max_em_iters: a.max_em_iters,
            ll_tol: a.ll_tol,
            restarts: a.restarts,
            seed: a.seed,
        }),
    };
    let g = load_graph(a)?;
    let started = Instant::now();
    let ranked = rank_nodes(&g, algorithm, &cfg, phits_cfg.as_ref())?;

    let selection = detect.map(|d| match (d.top_k, d.threshold) {
        (_, Some(t)) => Selection::Threshold(t),
        (Some(k), None) => Selection::TopK(k),
        (None, None) => Selection::TopK((g.n() / 100).max(1)),
    });
    let echo = ConfigEcho {
        input: a.input.display().to_string(),
        format: InputFormat::from(a.format).to_string(),
        algorithm: algorithm.to_string(),
        pagerank_mode: if a.paper_faithful { "paper-faithful" } else { "damped" }.into(),
        damping: Real(a.damping),
        norm: match cfg.norm_for(algorithm) {
            Norm::L1 => "l1",
            Norm::L2 => "l2",
        }
        .into(),
        tol: Real(a.tol),
        max_iters: a.max_iters,
        salsa_method: match a.salsa_method {
            SalsaArg::ClosedForm => "closed-form",
            SalsaArg::PowerIteration => "power-iteration",
        }
        .into(),
        factors: a.factors,
        restarts: a.restarts,
        seed: a.seed,
        max_em_iters: a.max_em_iters,
        ll_tol: Real(a.ll_tol),
        top_k: match selection {
            Some(Selection::TopK(k)) => Some(k),
            _ => None,
        },
        threshold: match selection {
            Some(Selection::Threshold(t)) => Some(Real(t)),
            _ => None,
        },
    };
    let command = if detect.is_some() { "detect" } else { "rank" };
    let mut report = RunReport::new(command, &g, &ranked, echo);
    if let (Some(d), Some(selection)) = (detect, selection) {
        let communities = select_communities(&g, &ranked, selection)?;
        let ov = overlap(&communities);
        if let Some(path) = &d.dot {
            write_file(path, &export_dot(&g, Some(&communities)))?;
        }
        if let Some(path) = &d.graphml {
            write_file(path, &export_graphml(&g, Some(&communities)))?;
        }
        report = report.with_communities(&g, &communities, &ov);
    }
    if a.timing {
        report.wall_time_ms = Some(Real(started.elapsed().as_secs_f64() * 1e3));
    }
    let text = write_report(&report);
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?,
    }
    Ok(if a.strict && !ranked.converged { EXIT_NOT_CONVERGED } else { EXIT_OK })
}

/// Resolves `--params` against the model's ordered parameter names.
fn params<'a>(raw: &str, names: &[&'a str]) -> Result<Vec<(&'a str, String)>, CliError> {
    let items: Vec<&str> = raw.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let mut values: Vec<Option<String>> = vec![None; names.len()];
    for (pos, item) in items.iter().enumerate() {
        let (slot, value) = match item.split_once('=') {
            Some((k, v)) => {
                let slot = names
                    .iter()
                    .position(|n| *n == k.trim())
                    .ok_or_else(|| CliError::Usage(format!("unknown parameter {k:?}, expected one of {names:?}")))?;
                (slot, v.trim())
            }
            None if pos < names.len() => (pos, *item),
            None => return Err(CliError::Usage(format!("too many parameters, expected {names:?}"))),
        };
        values[slot] = Some(value.to_string());
    }
    names
        .iter()
        .zip(values)
        .map(|(n, v)| v.map(|v| (*n, v)).ok_or_else(|| CliError::Usage(format!("missing parameter {n:?}"))))
        .collect()
}

fn num<T: std::str::FromStr>(name: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| CliError::Usage(format!("parameter {name:?}: cannot parse {v:?}")))
}

pub fn parse_model(model: ModelArg, raw: &str) -> Result<Model, CliError> {
    let p = |names: &[&'static str]| params(raw, names);
    Ok(match model {
        ModelArg::Cycle => {
            let v = p(&["n"])?;
            Model::Cycle { n: num("n", &v[0].1)? }
        }
        ModelArg::Star => {
            let v = p(&["k"])?;
            Model::Star { k: num("k", &v[0].1)? }
        }
        ModelArg::Bipartite => {
            let v = p(&["hubs", "authorities"])?;
            Model::Bipartite { hubs: num("hubs", &v[0].1)?, authorities: num("authorities", &v[1].1)? }
        }
        ModelArg::Tkc => {
            let v = p(&["dense_hubs", "dense_authorities", "sparse_hubs"])?;
            Model::Tkc {
                dense_hubs: num("dense_hubs", &v[0].1)?,
                dense_authorities: num("dense_authorities", &v[1].1)?,
                sparse_hubs: num("sparse_hubs", &v[2].1)?,
            }
        }
        ModelArg::Planted => {
            let v = p(&["pages", "members_per_page", "decoys"])?;
            Model::Planted {
                pages: num("pages", &v[0].1)?,
                members_per_page: num("members_per_page", &v[1].1)?,
                decoys: num("decoys", &v[2].1)?,
            }
        }
        ModelArg::Random => {
            let v = p(&["n", "p"])?;
            Model::Random { n: num("n", &v[0].1)?, p: num("p", &v[1].1)? }
        }
    })
}

fn run_gen(a: &GenArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let model = parse_model(a.model, &a.params)?;
    let g = generate::generate(&model, a.seed)?;
    let text = write_edge_list(&g);
    match &a.out {
        Some(path) => write_file(path, &text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positional_and_named_params() {
        assert_eq!(
            parse_model(ModelArg::Tkc, "4,4,6").unwrap(),
            Model::Tkc { dense_hubs: 4, dense_authorities: 4, sparse_hubs: 6 }
        );
        assert_eq!(
            parse_model(ModelArg::Random, "p=0.2, n=50").unwrap(),
            Model::Random { n: 50, p: 0.2 }
        );
        assert!(parse_model(ModelArg::Star, "").is_err());
        assert!(parse_model(ModelArg::Star, "k=x").is_err());
        assert!(parse_model(ModelArg::Star, "1,2").is_err());
        assert!(parse_model(ModelArg::Cycle, "m=3").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["linkrank", "rank"], &mut out, &mut err), EXIT_INPUT);
        let code = run(
            ["linkrank", "detect", "--algo", "hits", "--input", "x", "--top-k", "2", "--threshold", "0.1"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_INPUT);
        assert_eq!(run(["linkrank", "--help"], &mut out, &mut err), EXIT_OK);
    }
}
