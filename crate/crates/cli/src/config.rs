//! Run configuration: built-in defaults, an optional TOML config file,
//! and command-line flags, in increasing order of precedence.

use std::path::{Path, PathBuf};

use clap::Args;
use serde::Deserialize;

use rjcd_core::io::ColumnMap;
use rjcd_core::{Error, Result};

pub const DEFAULT_THRESHOLD: f64 = 0.05;
pub const DEFAULT_K: usize = 5;
pub const DEFAULT_TAU: f64 = 2.0;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_OUT: &str = "out";

/// Flags shared by every subcommand. Unset flags fall back to the
/// config file, then to the built-in defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Judgments CSV: query_id,rank,assessor_id,label
    #[arg(long, value_name = "FILE")]
    pub judgments: Option<PathBuf>,

    /// Snippets CSV: query_id,rank,title,snippet,url
    #[arg(long, value_name = "FILE")]
    pub snippets: Option<PathBuf>,

    /// Queries CSV: query,info_need,category
    #[arg(long, value_name = "FILE")]
    pub queries: Option<PathBuf>,

    /// Tie overrides CSV: query_id,rank,verdict
    #[arg(long, value_name = "FILE")]
    pub overrides: Option<PathBuf>,

    /// Preference profiles CSV: query_id,topic1,topic2
    #[arg(long, value_name = "FILE")]
    pub profiles: Option<PathBuf>,

    /// Training corpus TSV: topic<TAB>text
    #[arg(long, value_name = "FILE")]
    pub corpus: Option<PathBuf>,

    /// Re-ranked ordering CSV produced by the rerank command
    #[arg(long, value_name = "FILE")]
    pub reranked: Option<PathBuf>,

    /// Evaluation summary CSV, the input of correlate
    #[arg(long, value_name = "FILE")]
    pub summary: Option<PathBuf>,

    /// Convergence threshold for gating (default: 0.05)
    #[arg(long, value_name = "RHO")]
    pub threshold: Option<f64>,

    /// Neighbour count for label smoothing, capped per query at
    /// list length - 1 (default: 5)
    #[arg(long, value_name = "N")]
    pub k: Option<usize>,

    /// Classifier-margin threshold for the merge step, in nats
    /// (default: 2.0)
    #[arg(long, value_name = "NATS")]
    pub tau: Option<f64>,

    /// Random seed for simulation (default: 0)
    #[arg(long, value_name = "SEED")]
    pub seed: Option<u64>,

    /// Output directory (default: out)
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Column remapping for non-standard headers,
    /// e.g. query_id=qid,rank=pos
    #[arg(long, value_name = "MAP")]
    pub columns: Option<String>,
}

/// The same knobs, as an optional TOML file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub judgments: Option<PathBuf>,
    pub snippets: Option<PathBuf>,
    pub queries: Option<PathBuf>,
    pub overrides: Option<PathBuf>,
    pub profiles: Option<PathBuf>,
    pub corpus: Option<PathBuf>,
    pub reranked: Option<PathBuf>,
    pub summary: Option<PathBuf>,
    pub threshold: Option<f64>,
    pub k: Option<usize>,
    pub tau: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub columns: Option<String>,
}

pub fn load_file_config(path: &Path) -> Result<FileConfig> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_owned(),
        source: e,
    })?;
    toml::from_str(&raw).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// Fully resolved configuration for one command invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub judgments: Option<PathBuf>,
    pub snippets: Option<PathBuf>,
    pub queries: Option<PathBuf>,
    pub overrides: Option<PathBuf>,
    pub profiles: Option<PathBuf>,
    pub corpus: Option<PathBuf>,
    pub reranked: Option<PathBuf>,
    pub summary: Option<PathBuf>,
    pub threshold: f64,
    pub k: usize,
    pub tau: f64,
    pub seed: u64,
    pub out: PathBuf,
    pub columns: Option<ColumnMap>,
}

impl RunConfig {
    pub fn resolve(args: CommonArgs, file: FileConfig) -> Result<RunConfig> {
        let threshold = args
            .threshold
            .or(file.threshold)
            .unwrap_or(DEFAULT_THRESHOLD);
        if !(0.0..=1.0).contains(&threshold) {
            return Err(Error::InvalidInput(format!(
                "--threshold must lie in [0, 1], got {threshold}"
            )));
        }
        let k = args.k.or(file.k).unwrap_or(DEFAULT_K);
        if k == 0 {
            return Err(Error::InvalidInput("--k must be at least 1".into()));
        }
        let columns = match args.columns.or(file.columns) {
            Some(spec) => Some(spec.parse::<ColumnMap>()?),
            None => None,
        };
        Ok(RunConfig {
            judgments: args.judgments.or(file.judgments),
            snippets: args.snippets.or(file.snippets),
            queries: args.queries.or(file.queries),
            overrides: args.overrides.or(file.overrides),
            profiles: args.profiles.or(file.profiles),
            corpus: args.corpus.or(file.corpus),
            reranked: args.reranked.or(file.reranked),
            summary: args.summary.or(file.summary),
            threshold,
            k,
            tau: args.tau.or(file.tau).unwrap_or(DEFAULT_TAU),
            seed: args.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            out: args.out.or(file.out).unwrap_or_else(|| DEFAULT_OUT.into()),
            columns,
        })
    }
}

/// Rejects a missing input path with the flag the user should pass.
pub fn require<'a>(field: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path> {
    field
        .as_deref()
        .ok_or_else(|| Error::InvalidInput(format!("{flag} is required for this command")))
}
