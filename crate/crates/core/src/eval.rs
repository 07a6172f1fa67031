//! Ranked-list evaluation: contingency-table metrics, cumulative
//! precision-recall curves, recall-level precision profiles, per-query
//! improvement, and convergence-based query gating.

use crate::error::{Error, Result};
use crate::judgment::RjcdReport;

/// Binary confusion counts for one category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ContingencyTable {
    pub true_pos: u64,
    pub false_pos: u64,
    pub false_neg: u64,
    pub true_neg: u64,
}

impl ContingencyTable {
    pub fn new(true_pos: u64, false_pos: u64, false_neg: u64, true_neg: u64) -> Self {
        ContingencyTable {
            true_pos,
            false_pos,
            false_neg,
            true_neg,
        }
    }

    pub fn total(&self) -> u64 {
        self.true_pos + self.false_pos + self.false_neg + self.true_neg
    }

    /// TP / (TP + FP). Undefined when nothing was predicted positive.
    pub fn precision(&self) -> Result<f64> {
        let denom = self.true_pos + self.false_pos;
        if denom == 0 {
            return Err(Error::Numeric(
                "precision undefined: no positive predictions".into(),
            ));
        }
        Ok(self.true_pos as f64 / denom as f64)
    }

    /// TP / (TP + FN). Undefined when there are no positive items.
    pub fn recall(&self) -> Result<f64> {
        let denom = self.true_pos + self.false_neg;
        if denom == 0 {
            return Err(Error::Numeric("recall undefined: no relevant items".into()));
        }
        Ok(self.true_pos as f64 / denom as f64)
    }
}

/// Fraction of relevant items among the first `n` of a ranked list.
pub fn p_at_n(ranked: &[bool], n: usize) -> Result<f64> {
    if n == 0 || n > ranked.len() {
        return Err(Error::InvalidInput(format!(
            "P@N needs 1 <= n <= {}, got {n}",
            ranked.len()
        )));
    }
    let hits = ranked[..n].iter().filter(|&&r| r).count();
    Ok(hits as f64 / n as f64)
}

/// One point on a cumulative precision-recall curve, taken at a rank
/// holding a relevant item.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrPoint {
    /// 1-based rank in the evaluated ordering.
    pub rank: usize,
    /// Relevant items seen up to and including this rank.
    pub cum_relevant: usize,
    /// `cum_relevant / total_relevant`.
    pub recall: f64,
    /// `cum_relevant / rank`.
    pub precision: f64,
}

/// Cumulative precision-recall curve over one ranked list.
///
/// Points exist only at relevant ranks; precision at an irrelevant rank
/// is always dominated by the preceding relevant rank, so nothing is
/// lost for interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct PrCurve {
    pub query_id: String,
    /// Denominator used for recall.
    pub total_relevant: usize,
    pub points: Vec<PrPoint>,
}

/// Walks a ranked binary list and emits a [`PrPoint`] at every relevant rank.
///
/// `total_relevant` is the recall denominator; it must be at least the
/// number of relevant items present in the list.
pub fn pr_curve(
    query_id: impl Into<String>,
    ranked: &[bool],
    total_relevant: usize,
) -> Result<PrCurve> {
    if total_relevant == 0 {
        return Err(Error::InvalidInput(
            "total_relevant must be at least 1".into(),
        ));
    }
    let in_list = ranked.iter().filter(|&&r| r).count();
    if in_list > total_relevant {
        return Err(Error::InvalidInput(format!(
            "list holds {in_list} relevant items but total_relevant is {total_relevant}"
        )));
    }
    let mut points = Vec::with_capacity(in_list);
    let mut cum = 0usize;
    for (i, &rel) in ranked.iter().enumerate() {
        if rel {
            cum += 1;
            points.push(PrPoint {
                rank: i + 1,
                cum_relevant: cum,
                recall: cum as f64 / total_relevant as f64,
                precision: cum as f64 / (i + 1) as f64,
            });
        }
    }
    Ok(PrCurve {
        query_id: query_id.into(),
        total_relevant,
        points,
    })
}

/// Interpolated precision at the ten recall levels 10%, 20%, …, 100%.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecallLevelProfile {
    values: [f64; 10],
}

impl RecallLevelProfile {
    /// The ten recall levels, as fractions.
    pub fn levels() -> [f64; 10] {
        std::array::from_fn(|i| (i + 1) as f64 / 10.0)
    }

    pub fn new(values: [f64; 10]) -> Self {
        RecallLevelProfile { values }
    }

    /// Standard max-interpolation: the value at level L is the maximum
    /// precision over all curve points with recall ≥ L, or 0 if the
    /// curve never reaches L.
    pub fn from_curve(curve: &PrCurve) -> Self {
        let values = std::array::from_fn(|i| {
            let level = (i + 1) as f64 / 10.0;
            curve
                .points
                .iter()
                .filter(|p| p.recall >= level)
                .map(|p| p.precision)
                .fold(0.0, f64::max)
        });
        RecallLevelProfile { values }
    }

    pub fn values(&self) -> &[f64; 10] {
        &self.values
    }

    /// Arithmetic mean of the ten level precisions.
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / 10.0
    }
}

/// Mean-profile-precision gain of `treated` over `baseline`.
/// Negative when the treatment hurts.
pub fn improvement(baseline: &RecallLevelProfile, treated: &RecallLevelProfile) -> f64 {
    treated.mean() - baseline.mean()
}

/// Queries split by whether their convergence score clears a threshold.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GatePartition {
    pub kept: Vec<RjcdReport>,
    pub excluded: Vec<RjcdReport>,
}

/// Partitions queries by ρ. Strictly `rho < threshold` is excluded, so a
/// query sitting exactly on the threshold is kept.
pub fn gate_queries(reports: Vec<RjcdReport>, threshold: f64) -> GatePartition {
    let mut partition = GatePartition::default();
    for report in reports {
        if report.rho < threshold {
            partition.excluded.push(report);
        } else {
            partition.kept.push(report);
        }
    }
    partition
}
