//! Report writers. CSV metric values are printed at a fixed four
//! decimals (p-values in scientific notation); file names are
//! deterministic functions of the query ids.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::eval::{GatePartition, PrCurve, RecallLevelProfile};
use crate::io::svg::{self, Series};
use crate::judgment::{JudgmentMatrix, RjcdReport};
use crate::rerank::Snippet;
use crate::sim::SweepRow;
use crate::stats::CorrelationResult;
use crate::topic::OdpTopic;

/// Per-query roll-up row of the evaluation summary.
#[derive(Debug, Clone, PartialEq)]
pub struct QuerySummary {
    pub query_id: String,
    pub rho: f64,
    pub an: usize,
    pub jn: usize,
    pub mean_precision_baseline: f64,
    pub mean_precision_reranked: f64,
    pub improvement: f64,
}

/// Curves and profiles behind one query's summary row.
#[derive(Debug, Clone)]
pub struct QueryEvaluation {
    pub summary: QuerySummary,
    pub baseline_curve: PrCurve,
    pub baseline_profile: RecallLevelProfile,
    pub reranked_curve: Option<PrCurve>,
    pub reranked_profile: Option<RecallLevelProfile>,
}

/// One output row of the re-ranker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RerankedRow {
    pub query_id: String,
    pub new_rank: u32,
    pub original_rank: u32,
    pub topic: OdpTopic,
}

/// Everything a full run produces, ready to be written as a report set.
#[derive(Debug, Clone, Default)]
pub struct ReportBundle {
    pub evaluations: Vec<QueryEvaluation>,
    pub gate: GatePartition,
    pub correlation: Option<CorrelationResult>,
}

fn fmt4(value: f64) -> String {
    format!("{value:.4}")
}

/// Maps a query id onto a safe, stable file-name fragment.
pub fn sanitize_query_id(query_id: &str) -> String {
    let cleaned: String = query_id
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { '_' })
        .collect();
    if cleaned.is_empty() {
        "query".to_owned()
    } else {
        cleaned
    }
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    csv::Writer::from_path(path).map_err(|e| csv_err(path, e))
}

fn csv_err(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::io(path, std::io::Error::other(format!("{other:?}"))),
    }
}

fn finish(path: &Path, mut writer: csv::Writer<fs::File>) -> Result<()> {
    writer.flush().map_err(|e| Error::io(path, e))
}

/// Writes `rjcd.csv`: one row per query with ρ, AN, and JN.
pub fn write_rjcd_csv(out_dir: &Path, reports: &[RjcdReport]) -> Result<PathBuf> {
    let path = out_dir.join("rjcd.csv");
    let mut writer = csv_writer(&path)?;
    writer
        .write_record(["query_id", "rho", "an", "jn"])
        .map_err(|e| csv_err(&path, e))?;
    for report in reports {
        writer
            .write_record([
                report.query_id.as_str(),
                &fmt4(report.rho),
                &report.an.to_string(),
                &report.jn.to_string(),
            ])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes `summary.csv` with the per-query evaluation roll-up.
pub fn write_summary_csv(out_dir: &Path, summaries: &[QuerySummary]) -> Result<PathBuf> {
    let path = out_dir.join("summary.csv");
    let mut writer = csv_writer(&path)?;
    writer
        .write_record([
            "query_id",
            "rho",
            "an",
            "jn",
            "mean_precision_baseline",
            "mean_precision_reranked",
            "improvement",
        ])
        .map_err(|e| csv_err(&path, e))?;
    for row in summaries {
        writer
            .write_record([
                row.query_id.as_str(),
                &fmt4(row.rho),
                &row.an.to_string(),
                &row.jn.to_string(),
                &fmt4(row.mean_precision_baseline),
                &fmt4(row.mean_precision_reranked),
                &fmt4(row.improvement),
            ])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes one query's PR curve as `pr_<query>_<run>.csv`.
pub fn write_pr_curve_csv(
    out_dir: &Path,
    query_id: &str,
    run: &str,
    curve: &PrCurve,
) -> Result<PathBuf> {
    let path = out_dir.join(format!("pr_{}_{run}.csv", sanitize_query_id(query_id)));
    let mut writer = csv_writer(&path)?;
    writer
        .write_record(["rank", "recall", "precision"])
        .map_err(|e| csv_err(&path, e))?;
    for point in &curve.points {
        writer
            .write_record([
                point.rank.to_string(),
                fmt4(point.recall),
                fmt4(point.precision),
            ])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes one query's recall-level profile as `profile_<query>_<run>.csv`.
/// Levels are percentages (10..100).
pub fn write_profile_csv(
    out_dir: &Path,
    query_id: &str,
    run: &str,
    profile: &RecallLevelProfile,
) -> Result<PathBuf> {
    let path = out_dir.join(format!("profile_{}_{run}.csv", sanitize_query_id(query_id)));
    let mut writer = csv_writer(&path)?;
    writer
        .write_record(["level", "precision"])
        .map_err(|e| csv_err(&path, e))?;
    for (i, value) in profile.values().iter().enumerate() {
        writer
            .write_record([((i + 1) * 10).to_string(), fmt4(*value)])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes `gate.csv`: every query with its ρ and kept/excluded status.
pub fn write_gate_csv(out_dir: &Path, partition: &GatePartition) -> Result<PathBuf> {
    let path = out_dir.join("gate.csv");
    let mut writer = csv_writer(&path)?;
    writer
        .write_record(["query_id", "rho", "status"])
        .map_err(|e| csv_err(&path, e))?;
    let mut rows: Vec<(&RjcdReport, &str)> = partition
        .kept
        .iter()
        .map(|r| (r, "kept"))
        .chain(partition.excluded.iter().map(|r| (r, "excluded")))
        .collect();
    rows.sort_by(|a, b| a.0.query_id.cmp(&b.0.query_id));
    for (report, status) in rows {
        writer
            .write_record([report.query_id.as_str(), &fmt4(report.rho), status])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes `correlation.csv`. `None` produces a header-only file, used
/// when the correlation was not computable (too few queries, constant
/// series).
pub fn write_correlation_csv(
    out_dir: &Path,
    result: Option<&CorrelationResult>,
) -> Result<PathBuf> {
    let path = out_dir.join("correlation.csv");
    let mut writer = csv_writer(&path)?;
    writer
        .write_record(["r", "n", "t_stat", "p_value"])
        .map_err(|e| csv_err(&path, e))?;
    if let Some(result) = result {
        writer
            .write_record([
                fmt4(result.r),
                result.n.to_string(),
                fmt4(result.t_stat),
                format!("{:.6e}", result.p_value),
            ])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes `sweep.csv` from simulated panels.
pub fn write_sweep_csv(out_dir: &Path, rows: &[SweepRow]) -> Result<PathBuf> {
    let path = out_dir.join("sweep.csv");
    let mut writer = csv_writer(&path)?;
    writer
        .write_record(["p_unanimous", "seed", "rho", "an", "jn"])
        .map_err(|e| csv_err(&path, e))?;
    for row in rows {
        writer
            .write_record([
                fmt4(row.p_unanimous),
                row.seed.to_string(),
                fmt4(row.rho),
                row.an.to_string(),
                row.jn.to_string(),
            ])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes `reranked.csv`: the new ordering with assigned topics.
pub fn write_reranked_csv(out_dir: &Path, rows: &[RerankedRow]) -> Result<PathBuf> {
    let path = out_dir.join("reranked.csv");
    let mut writer = csv_writer(&path)?;
    writer
        .write_record(["query_id", "new_rank", "original_rank", "topic"])
        .map_err(|e| csv_err(&path, e))?;
    for row in rows {
        writer
            .write_record([
                row.query_id.as_str(),
                &row.new_rank.to_string(),
                &row.original_rank.to_string(),
                row.topic.name(),
            ])
            .map_err(|e| csv_err(&path, e))?;
    }
    finish(&path, writer)?;
    Ok(path)
}

/// Writes judgment grids back to the canonical judgments schema.
pub fn write_judgments_csv(path: &Path, matrices: &[JudgmentMatrix]) -> Result<()> {
    let mut writer = csv_writer(path)?;
    writer
        .write_record(["query_id", "rank", "assessor_id", "label"])
        .map_err(|e| csv_err(path, e))?;
    for matrix in matrices {
        for (i, row) in matrix.rows().iter().enumerate() {
            for (assessor_id, label) in matrix.assessor_ids().iter().zip(row) {
                writer
                    .write_record([
                        matrix.query_id(),
                        &(i + 1).to_string(),
                        assessor_id,
                        &label.to_string(),
                    ])
                    .map_err(|e| csv_err(path, e))?;
            }
        }
    }
    finish(path, writer)
}

/// Writes snippet lists back to the canonical snippets schema.
pub fn write_snippets_csv(path: &Path, snippets: &BTreeMap<String, Vec<Snippet>>) -> Result<()> {
    let mut writer = csv_writer(path)?;
    writer
        .write_record(["query_id", "rank", "title", "snippet", "url"])
        .map_err(|e| csv_err(path, e))?;
    for (query_id, list) in snippets {
        for snippet in list {
            writer
                .write_record([
                    query_id.as_str(),
                    &snippet.rank.to_string(),
                    &snippet.title,
                    &snippet.summary,
                    &snippet.url,
                ])
                .map_err(|e| csv_err(path, e))?;
        }
    }
    finish(path, writer)
}

fn write_text(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).map_err(|e| Error::io(path, e))
}

/// Averages profiles level-by-level across queries.
fn mean_profile<'a>(profiles: impl Iterator<Item = &'a RecallLevelProfile>) -> Option<[f64; 10]> {
    let mut sums = [0.0f64; 10];
    let mut count = 0usize;
    for profile in profiles {
        for (sum, value) in sums.iter_mut().zip(profile.values()) {
            *sum += value;
        }
        count += 1;
    }
    if count == 0 {
        return None;
    }
    Some(sums.map(|s| s / count as f64))
}

/// Writes the full report set into `out_dir` and returns the paths:
/// `rjcd.csv`, `summary.csv`, per-query curve and profile CSVs,
/// `gate.csv`, `correlation.csv`, and the two SVG charts.
pub fn write_reports(bundle: &ReportBundle, out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut written = Vec::new();

    let reports: Vec<RjcdReport> = bundle
        .evaluations
        .iter()
        .map(|e| RjcdReport {
            query_id: e.summary.query_id.clone(),
            an: e.summary.an,
            jn: e.summary.jn,
            rho: e.summary.rho,
            gammas: Vec::new(),
        })
        .collect();
    written.push(write_rjcd_csv(out_dir, &reports)?);

    let summaries: Vec<QuerySummary> = bundle
        .evaluations
        .iter()
        .map(|e| e.summary.clone())
        .collect();
    written.push(write_summary_csv(out_dir, &summaries)?);

    for evaluation in &bundle.evaluations {
        let query_id = &evaluation.summary.query_id;
        written.push(write_pr_curve_csv(
            out_dir,
            query_id,
            "baseline",
            &evaluation.baseline_curve,
        )?);
        written.push(write_profile_csv(
            out_dir,
            query_id,
            "baseline",
            &evaluation.baseline_profile,
        )?);
        if let Some(curve) = &evaluation.reranked_curve {
            written.push(write_pr_curve_csv(out_dir, query_id, "reranked", curve)?);
        }
        if let Some(profile) = &evaluation.reranked_profile {
            written.push(write_profile_csv(out_dir, query_id, "reranked", profile)?);
        }
    }

    written.push(write_gate_csv(out_dir, &bundle.gate)?);
    written.push(write_correlation_csv(out_dir, bundle.correlation.as_ref())?);

    // averaged recall-level precision, baseline vs re-ranked
    let levels = RecallLevelProfile::levels();
    let mut series = Vec::new();
    if let Some(mean) = mean_profile(bundle.evaluations.iter().map(|e| &e.baseline_profile)) {
        series.push(Series {
            name: "baseline".into(),
            points: levels.iter().copied().zip(mean).collect(),
        });
    }
    if let Some(mean) = mean_profile(
        bundle
            .evaluations
            .iter()
            .filter_map(|e| e.reranked_profile.as_ref()),
    ) {
        series.push(Series {
            name: "re-ranked".into(),
            points: levels.iter().copied().zip(mean).collect(),
        });
    }
    let pr_svg = out_dir.join("pr_curves.svg");
    write_text(
        &pr_svg,
        &svg::line_chart(
            "Mean precision at recall levels",
            "recall level",
            "precision",
            &series,
        ),
    )?;
    written.push(pr_svg);

    // per-query improvement bars with rho overlay, highest rho first
    let mut by_rho: Vec<&QueryEvaluation> = bundle.evaluations.iter().collect();
    by_rho.sort_by(|a, b| {
        b.summary
            .rho
            .partial_cmp(&a.summary.rho)
            .expect("rho is never NaN")
            .then_with(|| a.summary.query_id.cmp(&b.summary.query_id))
    });
    let categories: Vec<String> = by_rho.iter().map(|e| e.summary.query_id.clone()).collect();
    let improvements: Vec<f64> = by_rho.iter().map(|e| e.summary.improvement).collect();
    let rhos: Vec<f64> = by_rho.iter().map(|e| e.summary.rho).collect();
    let bars_svg = out_dir.join("improvement_vs_rjcd.svg");
    write_text(
        &bars_svg,
        &svg::bar_line_chart(
            "Precision improvement and convergence per query",
            &categories,
            &improvements,
            "improvement",
            &rhos,
            "rho",
        ),
    )?;
    written.push(bars_svg);

    Ok(written)
}
