//! One function per subcommand, all returning the shared error type so
//! the entry point can map failures onto exit codes.

use std::collections::BTreeMap;
use std::fs;

use rjcd_core::error::{Error, Result};
use rjcd_core::eval::{
    gate_queries, improvement, pr_curve, GatePartition, PrCurve, RecallLevelProfile,
};
use rjcd_core::io::{
    load_corpus, load_judgments, load_ordering, load_overrides, load_profiles, load_queries,
    load_snippets, load_summary, write_correlation_csv, write_gate_csv, write_judgments_csv,
    write_pr_curve_csv, write_profile_csv, write_reports, write_reranked_csv, write_rjcd_csv,
    write_summary_csv, write_sweep_csv, Dataset, QueryEvaluation, QuerySummary, ReportBundle,
    RerankedRow,
};
use rjcd_core::judgment::{JudgmentMatrix, RjcdReport, TieOverrides};
use rjcd_core::nb::{Classification, NbModel};
use rjcd_core::rerank::{knn_smooth, merge, rerank_order, Snippet};
use rjcd_core::sim::{simulate_panel, sweep, PanelConfig};
use rjcd_core::stats::pearson;
use rjcd_core::topic::OdpTopic;

use crate::config::{require, RunConfig};

/// For each query, the original ranks in new-rank order.
type Orderings = BTreeMap<String, Vec<u32>>;

fn ensure_out(config: &RunConfig) -> Result<()> {
    fs::create_dir_all(&config.out).map_err(|e| Error::Io {
        path: config.out.clone(),
        source: e,
    })
}

fn load_judgment_matrices(config: &RunConfig) -> Result<Vec<JudgmentMatrix>> {
    let path = require(&config.judgments, "--judgments")?;
    load_judgments(path, config.columns.as_ref())
}

/// `rjcd`: convergence scores per query, written to `rjcd.csv`.
pub fn rjcd(config: &RunConfig) -> Result<()> {
    let matrices = load_judgment_matrices(config)?;
    let reports: Vec<RjcdReport> = matrices.iter().map(JudgmentMatrix::rjcd).collect();
    ensure_out(config)?;
    let path = write_rjcd_csv(&config.out, &reports)?;
    for report in &reports {
        println!(
            "{}: rho={:.4} (AN={}, JN={})",
            report.query_id, report.rho, report.an, report.jn
        );
    }
    println!("wrote {}", path.display());
    Ok(())
}

/// `gate`: split queries at the convergence threshold.
pub fn gate(config: &RunConfig) -> Result<()> {
    let matrices = load_judgment_matrices(config)?;
    let reports = matrices.iter().map(JudgmentMatrix::rjcd).collect();
    let partition = gate_queries(reports, config.threshold);
    ensure_out(config)?;
    let path = write_gate_csv(&config.out, &partition)?;
    println!(
        "kept {} of {} queries at threshold {}",
        partition.kept.len(),
        partition.kept.len() + partition.excluded.len(),
        config.threshold
    );
    for report in &partition.excluded {
        println!("excluded {}: rho={:.4}", report.query_id, report.rho);
    }
    println!("wrote {}", path.display());
    Ok(())
}

fn empty_curve(query_id: &str) -> PrCurve {
    PrCurve {
        query_id: query_id.to_owned(),
        total_relevant: 0,
        points: Vec::new(),
    }
}

fn curve_and_profile(
    query_id: &str,
    flags: &[bool],
    total_relevant: usize,
) -> Result<(PrCurve, RecallLevelProfile)> {
    if total_relevant == 0 {
        return Ok((empty_curve(query_id), RecallLevelProfile::new([0.0; 10])));
    }
    let curve = pr_curve(query_id, flags, total_relevant)?;
    let profile = RecallLevelProfile::from_curve(&curve);
    Ok((curve, profile))
}

/// Evaluates every query: baseline PR curve and profile from the rank
/// order, plus the re-ranked pair when an ordering is available. With no
/// ordering the treated run equals the baseline and improvement is 0.
fn evaluate_queries(
    matrices: &[JudgmentMatrix],
    overrides: &TieOverrides,
    orderings: &Orderings,
) -> Result<Vec<QueryEvaluation>> {
    matrices
        .iter()
        .map(|matrix| {
            let query_id = matrix.query_id();
            let qrels = matrix.qrels(overrides)?;
            let flags = qrels.flags();
            let total = qrels.relevant_count();
            if total == 0 {
                eprintln!("warning: query {query_id:?} has no relevant items");
            }
            let (baseline_curve, baseline_profile) = curve_and_profile(query_id, flags, total)?;

            let reranked = match orderings.get(query_id) {
                Some(order) => {
                    if order.len() != flags.len()
                        || order.iter().any(|&r| r == 0 || r as usize > flags.len())
                    {
                        return Err(Error::InvalidInput(format!(
                            "re-ranked ordering for query {query_id:?} does not cover \
                             ranks 1..={}",
                            flags.len()
                        )));
                    }
                    let treated_flags: Vec<bool> =
                        order.iter().map(|&r| flags[(r - 1) as usize]).collect();
                    Some(curve_and_profile(query_id, &treated_flags, total)?)
                }
                None => None,
            };

            let report = matrix.rjcd();
            let baseline_mean = baseline_profile.mean();
            let (reranked_mean, gain) = match &reranked {
                Some((_, profile)) => (profile.mean(), improvement(&baseline_profile, profile)),
                None => (baseline_mean, 0.0),
            };
            Ok(QueryEvaluation {
                summary: QuerySummary {
                    query_id: query_id.to_owned(),
                    rho: report.rho,
                    an: report.an,
                    jn: report.jn,
                    mean_precision_baseline: baseline_mean,
                    mean_precision_reranked: reranked_mean,
                    improvement: gain,
                },
                baseline_curve,
                baseline_profile,
                reranked_curve: reranked.as_ref().map(|(c, _)| c.clone()),
                reranked_profile: reranked.map(|(_, p)| p),
            })
        })
        .collect()
}

fn load_overrides_opt(config: &RunConfig) -> Result<TieOverrides> {
    match &config.overrides {
        Some(path) => load_overrides(path, config.columns.as_ref()),
        None => Ok(TieOverrides::new()),
    }
}

fn validate_against_snippets(
    config: &RunConfig,
    matrices: &[JudgmentMatrix],
) -> Result<Option<BTreeMap<String, Vec<Snippet>>>> {
    let Some(path) = &config.snippets else {
        return Ok(None);
    };
    let snippets = load_snippets(path, config.columns.as_ref())?;
    let dataset = Dataset {
        queries: Vec::new(),
        snippets,
        judgments: matrices
            .iter()
            .map(|m| (m.query_id().to_owned(), m.clone()))
            .collect(),
        overrides: TieOverrides::new(),
    };
    dataset.validate()?;
    Ok(Some(dataset.snippets))
}

/// `eval`: per-query PR-curve and profile CSVs plus `summary.csv`.
pub fn eval(config: &RunConfig) -> Result<()> {
    let matrices = load_judgment_matrices(config)?;
    let overrides = load_overrides_opt(config)?;
    validate_against_snippets(config, &matrices)?;
    let orderings = match &config.reranked {
        Some(path) => load_ordering(path, config.columns.as_ref())?,
        None => BTreeMap::new(),
    };

    let evaluations = evaluate_queries(&matrices, &overrides, &orderings)?;
    ensure_out(config)?;
    for evaluation in &evaluations {
        let query_id = &evaluation.summary.query_id;
        write_pr_curve_csv(
            &config.out,
            query_id,
            "baseline",
            &evaluation.baseline_curve,
        )?;
        write_profile_csv(
            &config.out,
            query_id,
            "baseline",
            &evaluation.baseline_profile,
        )?;
        if let Some(curve) = &evaluation.reranked_curve {
            write_pr_curve_csv(&config.out, query_id, "reranked", curve)?;
        }
        if let Some(profile) = &evaluation.reranked_profile {
            write_profile_csv(&config.out, query_id, "reranked", profile)?;
        }
        println!(
            "{query_id}: mean precision {:.4} -> {:.4} (improvement {:+.4})",
            evaluation.summary.mean_precision_baseline,
            evaluation.summary.mean_precision_reranked,
            evaluation.summary.improvement
        );
    }
    let summaries: Vec<QuerySummary> = evaluations.iter().map(|e| e.summary.clone()).collect();
    let path = write_summary_csv(&config.out, &summaries)?;
    println!("wrote {}", path.display());
    Ok(())
}

/// `correlate`: Pearson r between ρ and improvement from a summary file.
pub fn correlate(config: &RunConfig) -> Result<()> {
    let path = require(&config.summary, "--summary")?;
    let rows = load_summary(path, config.columns.as_ref())?;
    let rhos: Vec<f64> = rows.iter().map(|r| r.rho).collect();
    let improvements: Vec<f64> = rows.iter().map(|r| r.improvement).collect();
    let result = pearson(&rhos, &improvements)?;
    ensure_out(config)?;
    let written = write_correlation_csv(&config.out, Some(&result))?;
    println!(
        "r={:.4} n={} t={:.4} p={:.6e}",
        result.r, result.n, result.t_stat, result.p_value
    );
    println!("wrote {}", written.display());
    Ok(())
}

/// Classifier labels for one query's snippet list: naive Bayes, then
/// neighbour smoothing (k capped at list length - 1), then the
/// margin-gated merge.
fn label_snippets(
    model: &NbModel,
    snippets: &[Snippet],
    k: usize,
    tau: f64,
) -> Result<Vec<OdpTopic>> {
    let classifications: Vec<Classification> =
        snippets.iter().map(|s| model.classify(&s.text())).collect();
    let nb_labels: Vec<OdpTopic> = classifications.iter().map(|c| c.topic).collect();
    let capped_k = k.min(snippets.len().saturating_sub(1));
    let smoothed = if capped_k == 0 {
        nb_labels
    } else {
        knn_smooth(snippets, &nb_labels, capped_k)?
    };
    merge(&classifications, &smoothed, tau)
}

fn rerank_dataset(
    config: &RunConfig,
    snippets: &BTreeMap<String, Vec<Snippet>>,
) -> Result<(Orderings, Vec<RerankedRow>)> {
    let corpus_path = require(&config.corpus, "--corpus")?;
    let profiles_path = require(&config.profiles, "--profiles")?;
    let corpus = load_corpus(corpus_path, config.columns.as_ref())?;
    let profiles = load_profiles(profiles_path, config.columns.as_ref())?;
    let model = NbModel::train(&corpus)?;

    let mut orderings = BTreeMap::new();
    let mut rows = Vec::new();
    for (query_id, list) in snippets {
        let profile = profiles.get(query_id).ok_or_else(|| {
            Error::InvalidInput(format!("no preference profile for query {query_id:?}"))
        })?;
        let topics = label_snippets(&model, list, config.k, config.tau)?;
        let order = rerank_order(&topics, profile);
        let mut original_ranks = Vec::with_capacity(order.len());
        for (position, &index) in order.iter().enumerate() {
            original_ranks.push(list[index].rank);
            rows.push(RerankedRow {
                query_id: query_id.clone(),
                new_rank: (position + 1) as u32,
                original_rank: list[index].rank,
                topic: topics[index],
            });
        }
        orderings.insert(query_id.clone(), original_ranks);
    }
    Ok((orderings, rows))
}

/// `rerank`: classify snippets and write the re-ranked ordering.
pub fn rerank(config: &RunConfig) -> Result<()> {
    let path = require(&config.snippets, "--snippets")?;
    let snippets = load_snippets(path, config.columns.as_ref())?;
    let (_, rows) = rerank_dataset(config, &snippets)?;
    ensure_out(config)?;
    let written = write_reranked_csv(&config.out, &rows)?;
    println!(
        "re-ranked {} snippets across {} queries",
        rows.len(),
        snippets.len()
    );
    println!("wrote {}", written.display());
    Ok(())
}

/// Extra knobs for `simulate`.
#[derive(Debug, Clone, clap::Args)]
pub struct SimulateArgs {
    /// Comma-separated unanimity probabilities to sweep
    /// (default: 0,0.25,0.5,0.75,1)
    #[arg(long = "p-unanimous", value_name = "LIST")]
    pub p_unanimous: Option<String>,

    /// Items per panel (default: 1000)
    #[arg(long, value_name = "N")]
    pub items: Option<usize>,

    /// Assessors per panel (default: 5)
    #[arg(long, value_name = "H")]
    pub assessors: Option<usize>,

    /// Consecutive seeds per probability, starting at --seed (default: 1)
    #[arg(long, value_name = "COUNT")]
    pub seeds: Option<u64>,

    /// Comma-separated draw weights for R,P,I,N (default: uniform)
    #[arg(long, value_name = "LIST")]
    pub weights: Option<String>,

    /// Also write the simulated panels as simulated_judgments.csv
    #[arg(long)]
    pub export_judgments: bool,
}

fn parse_float_list(spec: &str, flag: &str) -> Result<Vec<f64>> {
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidInput(format!("{flag}: bad number {part:?}")))
        })
        .collect()
}

/// `simulate`: sweep synthetic panels and write `sweep.csv`.
pub fn simulate(config: &RunConfig, args: &SimulateArgs) -> Result<()> {
    let probabilities = match &args.p_unanimous {
        Some(spec) => parse_float_list(spec, "--p-unanimous")?,
        None => vec![0.0, 0.25, 0.5, 0.75, 1.0],
    };
    let weights = match &args.weights {
        Some(spec) => {
            let values = parse_float_list(spec, "--weights")?;
            let array: [f64; 4] = values.try_into().map_err(|v: Vec<f64>| {
                Error::InvalidInput(format!("--weights needs exactly 4 values, got {}", v.len()))
            })?;
            array
        }
        None => [0.25; 4],
    };
    let items = args.items.unwrap_or(1000);
    let assessors = args.assessors.unwrap_or(5);
    let seed_count = args.seeds.unwrap_or(1).max(1);

    let mut configs = Vec::new();
    for &p_unanimous in &probabilities {
        for seed in config.seed..config.seed + seed_count {
            configs.push(PanelConfig {
                assessors,
                items,
                p_unanimous,
                label_weights: weights,
                seed,
            });
        }
    }

    let rows = sweep(&configs)?;
    ensure_out(config)?;
    let written = write_sweep_csv(&config.out, &rows)?;
    for row in &rows {
        println!(
            "p={:.2} seed={}: rho={:.4} (AN={}, JN={})",
            row.p_unanimous, row.seed, row.rho, row.an, row.jn
        );
    }
    println!("wrote {}", written.display());

    if args.export_judgments {
        let panels: Vec<JudgmentMatrix> =
            configs.iter().map(simulate_panel).collect::<Result<_>>()?;
        let path = config.out.join("simulated_judgments.csv");
        write_judgments_csv(&path, &panels)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// `report`: the full workflow — convergence, re-ranking when inputs
/// allow it, evaluation, gating, correlation, and every report file.
pub fn report(config: &RunConfig) -> Result<()> {
    let matrices = load_judgment_matrices(config)?;
    let overrides = load_overrides_opt(config)?;
    let snippets = validate_against_snippets(config, &matrices)?;

    if let Some(path) = &config.queries {
        let records = load_queries(path, config.columns.as_ref())?;
        let known: Vec<&str> = records.iter().map(|r| r.query.as_str()).collect();
        for matrix in &matrices {
            if !known.contains(&matrix.query_id()) {
                eprintln!(
                    "warning: query {:?} is not listed in {}",
                    matrix.query_id(),
                    path.display()
                );
            }
        }
    }

    ensure_out(config)?;
    let orderings = if let Some(path) = &config.reranked {
        load_ordering(path, config.columns.as_ref())?
    } else if let Some(snippets) = &snippets {
        if config.corpus.is_some() && config.profiles.is_some() {
            let (orderings, rows) = rerank_dataset(config, snippets)?;
            let written = write_reranked_csv(&config.out, &rows)?;
            println!("wrote {}", written.display());
            orderings
        } else {
            BTreeMap::new()
        }
    } else {
        BTreeMap::new()
    };

    let evaluations = evaluate_queries(&matrices, &overrides, &orderings)?;
    let reports: Vec<RjcdReport> = matrices.iter().map(JudgmentMatrix::rjcd).collect();
    let gate: GatePartition = gate_queries(reports, config.threshold);

    let rhos: Vec<f64> = evaluations.iter().map(|e| e.summary.rho).collect();
    let improvements: Vec<f64> = evaluations.iter().map(|e| e.summary.improvement).collect();
    let correlation = match pearson(&rhos, &improvements) {
        Ok(result) => {
            println!(
                "correlation of rho with improvement: r={:.4} n={} t={:.4} p={:.6e}",
                result.r, result.n, result.t_stat, result.p_value
            );
            Some(result)
        }
        Err(err) => {
            eprintln!("warning: correlation not computed: {err}");
            None
        }
    };

    let bundle = ReportBundle {
        evaluations,
        gate,
        correlation,
    };
    let written = write_reports(&bundle, &config.out)?;
    println!(
        "kept {} of {} queries at threshold {}",
        bundle.gate.kept.len(),
        bundle.gate.kept.len() + bundle.gate.excluded.len(),
        config.threshold
    );
    for path in &written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidInput(_) | Error::Parse(_) | Error::Io { .. } => 2,
        Error::UnresolvedTies { .. } => 3,
        Error::Numeric(_) => 4,
    }
}
