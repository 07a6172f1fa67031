//! Graded relevance judgments and their aggregation.
//!
//! A panel of assessors labels every ranked snippet with one of four
//! graded judgments. This module turns a per-query judgment grid into
//! summed scores, binary verdicts, the convergence score ρ = AN/JN,
//! and two comparative agreement statistics (Fleiss' kappa and pairwise
//! Jaccard overlap).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One graded relevance judgment for a ranked snippet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JudgmentLabel {
    /// The snippet clearly satisfies the information need (`R`).
    Relevant,
    /// The linked page may be relevant (`P`).
    Partial,
    /// The snippet clearly does not satisfy the need (`I`).
    Irrelevant,
    /// The snippet carries too little information to decide (`N`).
    Insufficient,
}

impl JudgmentLabel {
    /// All four labels, in canonical order.
    pub const ALL: [JudgmentLabel; 4] = [
        JudgmentLabel::Relevant,
        JudgmentLabel::Partial,
        JudgmentLabel::Irrelevant,
        JudgmentLabel::Insufficient,
    ];

    /// Additive score contribution: R=+3, P=+1, I=-3, N=0.
    ///
    /// `Insufficient` is deliberately neutral so that an undecided
    /// assessor neither helps nor hurts an item.
    pub const fn score(self) -> i32 {
        match self {
            JudgmentLabel::Relevant => 3,
            JudgmentLabel::Partial => 1,
            JudgmentLabel::Irrelevant => -3,
            JudgmentLabel::Insufficient => 0,
        }
    }

    /// Single-letter code used in data files.
    pub const fn code(self) -> char {
        match self {
            JudgmentLabel::Relevant => 'R',
            JudgmentLabel::Partial => 'P',
            JudgmentLabel::Irrelevant => 'I',
            JudgmentLabel::Insufficient => 'N',
        }
    }

    /// Parses the single-letter code (case-sensitive).
    pub fn from_code(c: char) -> Option<Self> {
        match c {
            'R' => Some(JudgmentLabel::Relevant),
            'P' => Some(JudgmentLabel::Partial),
            'I' => Some(JudgmentLabel::Irrelevant),
            'N' => Some(JudgmentLabel::Insufficient),
            _ => None,
        }
    }
}

impl fmt::Display for JudgmentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl FromStr for JudgmentLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => JudgmentLabel::from_code(c)
                .ok_or_else(|| Error::InvalidInput(format!("unknown judgment label {s:?}"))),
            _ => Err(Error::InvalidInput(format!("unknown judgment label {s:?}"))),
        }
    }
}

/// A binary relevance decision, e.g. a manually resolved tie.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relevance {
    Relevant,
    Irrelevant,
}

/// Aggregated outcome for one item: the sign of the summed score, or
/// `Unresolved` when the sum is zero and no override was supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Relevant,
    Irrelevant,
    Unresolved,
}

impl Verdict {
    pub fn is_relevant(self) -> bool {
        self == Verdict::Relevant
    }
}

impl From<Relevance> for Verdict {
    fn from(r: Relevance) -> Self {
        match r {
            Relevance::Relevant => Verdict::Relevant,
            Relevance::Irrelevant => Verdict::Irrelevant,
        }
    }
}

/// Summed score and derived verdict for one ranked item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ItemVerdict {
    pub rank: u32,
    pub score_sum: i32,
    pub verdict: Verdict,
}

/// Manual tie resolutions, keyed by `(query_id, rank)`.
///
/// Only consulted for items whose summed score is exactly zero.
#[derive(Debug, Clone, Default)]
pub struct TieOverrides {
    map: HashMap<(String, u32), Relevance>,
}

impl TieOverrides {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, query_id: impl Into<String>, rank: u32, relevance: Relevance) {
        self.map.insert((query_id.into(), rank), relevance);
    }

    pub fn get(&self, query_id: &str, rank: u32) -> Option<Relevance> {
        self.map.get(&(query_id.to_owned(), rank)).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Iterates over `(query_id, rank, relevance)` in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u32, Relevance)> {
        self.map.iter().map(|((q, r), v)| (q.as_str(), *r, *v))
    }
}

/// Sums the score contributions of one item's judgments.
pub fn sum_scores(row: &[JudgmentLabel]) -> Result<i32> {
    if row.is_empty() {
        return Err(Error::InvalidInput(
            "cannot sum scores of an empty judgment row".into(),
        ));
    }
    Ok(row.iter().map(|l| l.score()).sum())
}

/// Collapses a summed score to a binary verdict.
///
/// Positive sums are relevant and negative sums irrelevant; a zero sum
/// takes the override when present and is otherwise `Unresolved`.
pub fn binary_verdict(score_sum: i32, overridden: Option<Relevance>) -> Verdict {
    match score_sum {
        s if s > 0 => Verdict::Relevant,
        s if s < 0 => Verdict::Irrelevant,
        _ => overridden.map(Verdict::from).unwrap_or(Verdict::Unresolved),
    }
}

/// Number of distinct labels in one item's judgment row.
///
/// An empty row yields 0; rows taken from a [`JudgmentMatrix`] are never
/// empty, so there the result is always in `1..=min(h, 4)`.
pub fn gamma(row: &[JudgmentLabel]) -> usize {
    let mut seen = [false; 4];
    for label in row {
        seen[*label as usize] = true;
    }
    seen.iter().filter(|&&s| s).count()
}

/// Convergence summary for one query: ρ = AN / JN.
///
/// AN counts unanimously judged items; JN sums the per-item distinct
/// label counts γ(i). ρ is 1 exactly when every item is unanimous and
/// shrinks toward zero as judgments diverge.
#[derive(Debug, Clone, PartialEq)]
pub struct RjcdReport {
    pub query_id: String,
    /// Number of items on which all assessors agree.
    pub an: usize,
    /// Sum of distinct-label counts over all items.
    pub jn: usize,
    /// AN / JN.
    pub rho: f64,
    /// γ(i) per item, in rank order.
    pub gammas: Vec<usize>,
}

/// Binary relevance flags for one query, in rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qrels {
    query_id: String,
    rels: Vec<bool>,
}

impl Qrels {
    pub fn new(query_id: impl Into<String>, rels: Vec<bool>) -> Self {
        Qrels {
            query_id: query_id.into(),
            rels,
        }
    }

    pub fn query_id(&self) -> &str {
        &self.query_id
    }

    /// One flag per rank, order preserved.
    pub fn flags(&self) -> &[bool] {
        &self.rels
    }

    pub fn len(&self) -> usize {
        self.rels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rels.is_empty()
    }

    /// Total number of relevant items.
    pub fn relevant_count(&self) -> usize {
        self.rels.iter().filter(|&&r| r).count()
    }
}

/// A per-query grid of N ranked items × h assessors, every cell filled.
///
/// Rows are stored in rank order (rank = index + 1); columns follow
/// `assessor_ids`. Construction validates shape, so N ≥ 1 and h ≥ 1
/// hold for every value of this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JudgmentMatrix {
    query_id: String,
    assessor_ids: Vec<String>,
    rows: Vec<Vec<JudgmentLabel>>,
}

impl JudgmentMatrix {
    pub fn new(
        query_id: impl Into<String>,
        assessor_ids: Vec<String>,
        rows: Vec<Vec<JudgmentLabel>>,
    ) -> Result<Self> {
        let query_id = query_id.into();
        if assessor_ids.is_empty() {
            return Err(Error::InvalidInput(format!(
                "query {query_id:?}: at least one assessor is required"
            )));
        }
        if rows.is_empty() {
            return Err(Error::InvalidInput(format!(
                "query {query_id:?}: at least one judged item is required"
            )));
        }
        let unique: HashSet<&String> = assessor_ids.iter().collect();
        if unique.len() != assessor_ids.len() {
            return Err(Error::InvalidInput(format!(
                "query {query_id:?}: assessor ids must be unique"
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != assessor_ids.len() {
                return Err(Error::InvalidInput(format!(
                    "query {query_id:?}: rank {} has {} judgments, expected {}",
                    i + 1,
                    row.len(),
                    assessor_ids.len()
                )));
            }
        }
        Ok(JudgmentMatrix {
            query_id,
            assessor_ids,
            rows,
        })
    }

    pub fn query_id(&self) -> &str {
        &self.query_id
    }

    pub fn assessor_ids(&self) -> &[String] {
        &self.assessor_ids
    }

    /// Number of assessors (h).
    pub fn assessor_count(&self) -> usize {
        self.assessor_ids.len()
    }

    /// Number of judged items (N).
    pub fn item_count(&self) -> usize {
        self.rows.len()
    }

    /// Judgment rows in rank order.
    pub fn rows(&self) -> &[Vec<JudgmentLabel>] {
        &self.rows
    }

    /// Summed score per item, in rank order. Each value lies in `[-3h, 3h]`.
    pub fn score_sums(&self) -> Vec<i32> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|l| l.score()).sum())
            .collect()
    }

    /// Per-item verdicts after applying any matching tie overrides.
    pub fn verdicts(&self, overrides: &TieOverrides) -> Vec<ItemVerdict> {
        self.score_sums()
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let rank = (i + 1) as u32;
                let overridden = if s == 0 {
                    overrides.get(&self.query_id, rank)
                } else {
                    None
                };
                ItemVerdict {
                    rank,
                    score_sum: s,
                    verdict: binary_verdict(s, overridden),
                }
            })
            .collect()
    }

    /// Binary relevance per item, rejecting any item left `Unresolved`.
    ///
    /// The error lists every offending rank so all ties can be resolved
    /// in one pass.
    pub fn qrels(&self, overrides: &TieOverrides) -> Result<Qrels> {
        let verdicts = self.verdicts(overrides);
        let unresolved: Vec<u32> = verdicts
            .iter()
            .filter(|v| v.verdict == Verdict::Unresolved)
            .map(|v| v.rank)
            .collect();
        if !unresolved.is_empty() {
            return Err(Error::UnresolvedTies {
                query_id: self.query_id.clone(),
                ranks: unresolved,
            });
        }
        Ok(Qrels {
            query_id: self.query_id.clone(),
            rels: verdicts.iter().map(|v| v.verdict.is_relevant()).collect(),
        })
    }

    /// Computes the convergence score ρ = AN / JN for this query.
    pub fn rjcd(&self) -> RjcdReport {
        let gammas: Vec<usize> = self.rows.iter().map(|row| gamma(row)).collect();
        let an = gammas.iter().filter(|&&g| g == 1).count();
        let jn: usize = gammas.iter().sum();
        RjcdReport {
            query_id: self.query_id.clone(),
            an,
            jn,
            rho: an as f64 / jn as f64,
            gammas,
        }
    }

    /// Fleiss' kappa over the full four-label category space.
    ///
    /// Requires h ≥ 2. When expected agreement is exactly 1 (all mass on
    /// one label) kappa is defined as 1 if observed agreement is also 1,
    /// and is otherwise an error.
    pub fn fleiss_kappa(&self) -> Result<f64> {
        let h = self.assessor_count();
        if h < 2 {
            return Err(Error::InvalidInput(
                "Fleiss' kappa requires at least two assessors".into(),
            ));
        }
        let n = self.item_count() as f64;
        let hf = h as f64;

        let mut column_totals = [0usize; 4];
        let mut observed = 0.0;
        for row in &self.rows {
            let mut counts = [0usize; 4];
            for label in row {
                counts[*label as usize] += 1;
            }
            for (total, count) in column_totals.iter_mut().zip(counts) {
                *total += count;
            }
            let same_pairs: usize = counts.iter().map(|&c| c * c).sum::<usize>() - h;
            observed += same_pairs as f64 / (hf * (hf - 1.0));
        }
        observed /= n;

        let expected: f64 = column_totals
            .iter()
            .map(|&t| {
                let p = t as f64 / (n * hf);
                p * p
            })
            .sum();

        if expected >= 1.0 {
            return if observed >= 1.0 {
                Ok(1.0)
            } else {
                Err(Error::Numeric(
                    "Fleiss' kappa undefined: expected agreement is 1 \
                     but observed agreement is not"
                        .into(),
                ))
            };
        }
        Ok((observed - expected) / (1.0 - expected))
    }

    /// Jaccard overlap of two assessors' relevant sets.
    ///
    /// An assessor's relevant set holds the ranks labeled `R` or `P`.
    /// Defined as 1 when both sets are empty.
    pub fn jaccard_agreement(&self, a: usize, b: usize) -> Result<f64> {
        let h = self.assessor_count();
        if a >= h || b >= h {
            return Err(Error::InvalidInput(format!(
                "assessor index out of range: {} (have {h} assessors)",
                a.max(b)
            )));
        }
        if a == b {
            return Err(Error::InvalidInput(
                "Jaccard agreement needs two distinct assessors".into(),
            ));
        }
        let relevant = |label: JudgmentLabel| {
            matches!(label, JudgmentLabel::Relevant | JudgmentLabel::Partial)
        };
        let mut intersection = 0usize;
        let mut union = 0usize;
        for row in &self.rows {
            let in_a = relevant(row[a]);
            let in_b = relevant(row[b]);
            if in_a && in_b {
                intersection += 1;
            }
            if in_a || in_b {
                union += 1;
            }
        }
        if union == 0 {
            return Ok(1.0);
        }
        Ok(intersection as f64 / union as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom as _;
    use rand::{Rng as _, SeedableRng as _};
    use rand_chacha::ChaCha8Rng;

    use JudgmentLabel::{Insufficient as N, Irrelevant as I, Partial as P, Relevant as R};

    fn matrix(rows: Vec<Vec<JudgmentLabel>>) -> JudgmentMatrix {
        let h = rows[0].len();
        let ids = (1..=h).map(|i| format!("a{i}")).collect();
        JudgmentMatrix::new("q", ids, rows).unwrap()
    }

    #[test]
    fn score_mapping() {
        assert_eq!(R.score(), 3);
        assert_eq!(P.score(), 1);
        assert_eq!(I.score(), -3);
        assert_eq!(N.score(), 0);
    }

    #[test]
    fn sum_scores_examples() {
        assert_eq!(sum_scores(&[R, R, R, R, N]).unwrap(), 12);
        assert_eq!(sum_scores(&[I, I, I, I, I]).unwrap(), -15);
        assert_eq!(sum_scores(&[R, P, P, I, N]).unwrap(), 2);
        assert!(sum_scores(&[]).is_err());
    }

    #[test]
    fn binary_verdict_rule() {
        assert_eq!(binary_verdict(12, None), Verdict::Relevant);
        assert_eq!(binary_verdict(-2, None), Verdict::Irrelevant);
        assert_eq!(binary_verdict(0, None), Verdict::Unresolved);
        assert_eq!(
            binary_verdict(0, Some(Relevance::Relevant)),
            Verdict::Relevant
        );
        assert_eq!(
            binary_verdict(0, Some(Relevance::Irrelevant)),
            Verdict::Irrelevant
        );
        // overrides only apply at zero
        assert_eq!(
            binary_verdict(-1, Some(Relevance::Relevant)),
            Verdict::Irrelevant
        );
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&[R, R, R, R, N]), 2);
        assert_eq!(gamma(&[R, P, I, I, N]), 4);
        assert_eq!(gamma(&[I, I, I, I, I]), 1);
    }

    #[test]
    fn rjcd_three_row_example() {
        let m = matrix(vec![
            vec![R, R, R, R, R],
            vec![R, R, R, P, P],
            vec![R, P, I, N, N],
        ]);
        let report = m.rjcd();
        assert_eq!(report.an, 1);
        assert_eq!(report.jn, 7);
        assert_eq!(report.gammas, vec![1, 2, 4]);
        assert!((report.rho - 1.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn rjcd_unanimous_is_one() {
        let m = matrix(vec![vec![I, I, I], vec![N, N, N], vec![R, R, R]]);
        assert_eq!(m.rjcd().rho, 1.0);
    }

    #[test]
    fn matrix_shape_validation() {
        assert!(JudgmentMatrix::new("q", vec![], vec![vec![R]]).is_err());
        assert!(JudgmentMatrix::new("q", vec!["a".into()], vec![]).is_err());
        assert!(JudgmentMatrix::new("q", vec!["a".into(), "a".into()], vec![vec![R, P]]).is_err());
        assert!(
            JudgmentMatrix::new("q", vec!["a".into(), "b".into()], vec![vec![R]]).is_err(),
            "row width must match assessor count"
        );
    }

    #[test]
    fn qrels_single_relevant_row() {
        let m = matrix(vec![vec![R, R, R, R, R]]);
        let qrels = m.qrels(&TieOverrides::new()).unwrap();
        assert_eq!(qrels.flags(), &[true]);
        assert_eq!(qrels.relevant_count(), 1);
    }

    #[test]
    fn qrels_rejects_unresolved_tie() {
        // R + I sums to zero
        let m = matrix(vec![vec![R, I], vec![R, R]]);
        let err = m.qrels(&TieOverrides::new()).unwrap_err();
        match err {
            Error::UnresolvedTies { query_id, ranks } => {
                assert_eq!(query_id, "q");
                assert_eq!(ranks, vec![1]);
            }
            other => panic!("unexpected error: {other}"),
        }

        let mut overrides = TieOverrides::new();
        overrides.insert("q", 1, Relevance::Relevant);
        let qrels = m.qrels(&overrides).unwrap();
        assert_eq!(qrels.flags(), &[true, true]);
    }

    #[test]
    fn fleiss_kappa_unanimity_is_one() {
        let m = matrix(vec![vec![R; 5]; 50]);
        assert_eq!(m.fleiss_kappa().unwrap(), 1.0);
    }

    #[test]
    fn fleiss_kappa_anticorrelated_pair() {
        let m = matrix(vec![vec![R, I], vec![I, R]]);
        assert!((m.fleiss_kappa().unwrap() - (-1.0)).abs() < 1e-12);
    }

    #[test]
    fn fleiss_kappa_requires_two_assessors() {
        let m = matrix(vec![vec![R], vec![I]]);
        assert!(m.fleiss_kappa().is_err());
    }

    #[test]
    fn fleiss_kappa_uniform_labels_near_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rows: Vec<Vec<JudgmentLabel>> = (0..1000)
            .map(|_| {
                (0..5)
                    .map(|_| JudgmentLabel::ALL[rng.gen_range(0..4)])
                    .collect()
            })
            .collect();
        let kappa = matrix(rows).fleiss_kappa().unwrap();
        assert!(kappa.abs() < 0.05, "kappa = {kappa}");
    }

    #[test]
    fn jaccard_examples() {
        let identical = matrix(vec![vec![R, R], vec![I, I], vec![P, P]]);
        assert_eq!(identical.jaccard_agreement(0, 1).unwrap(), 1.0);

        let disjoint = matrix(vec![vec![R, I], vec![I, P]]);
        assert_eq!(disjoint.jaccard_agreement(0, 1).unwrap(), 0.0);

        // relevant sets {1,2,3} vs {2,3,4} -> 2/4
        let partial = matrix(vec![
            vec![R, I],
            vec![R, P],
            vec![P, R],
            vec![I, R],
            vec![N, N],
        ]);
        assert_eq!(partial.jaccard_agreement(0, 1).unwrap(), 0.5);

        let both_empty = matrix(vec![vec![I, N], vec![N, I]]);
        assert_eq!(both_empty.jaccard_agreement(0, 1).unwrap(), 1.0);

        assert!(identical.jaccard_agreement(0, 0).is_err());
        assert!(identical.jaccard_agreement(0, 9).is_err());
    }

    fn label_strategy() -> impl Strategy<Value = JudgmentLabel> {
        prop_oneof![Just(R), Just(P), Just(I), Just(N)]
    }

    fn matrix_strategy() -> impl Strategy<Value = JudgmentMatrix> {
        (1usize..=6, 1usize..=12).prop_flat_map(|(h, n)| {
            proptest::collection::vec(proptest::collection::vec(label_strategy(), h), n)
                .prop_map(matrix)
        })
    }

    proptest! {
        #[test]
        fn gamma_bounds(row in proptest::collection::vec(label_strategy(), 1..=10)) {
            let g = gamma(&row);
            prop_assert!(g >= 1 && g <= row.len().min(4));
            let unanimous = row.iter().all(|&l| l == row[0]);
            prop_assert_eq!(g == 1, unanimous);
        }

        #[test]
        fn score_sum_in_range_and_monotone(row in proptest::collection::vec(label_strategy(), 1..=10)) {
            let h = row.len() as i32;
            let s = sum_scores(&row).unwrap();
            prop_assert!((-3 * h..=3 * h).contains(&s));
            // replacing any label with a strictly higher-scored one strictly increases the sum
            for i in 0..row.len() {
                for upgrade in JudgmentLabel::ALL {
                    if upgrade.score() > row[i].score() {
                        let mut bumped = row.clone();
                        bumped[i] = upgrade;
                        prop_assert!(sum_scores(&bumped).unwrap() > s);
                    }
                }
            }
        }

        #[test]
        fn rjcd_bounds_and_unanimity(m in matrix_strategy()) {
            let report = m.rjcd();
            prop_assert!(report.rho >= 0.0 && report.rho <= 1.0);
            prop_assert!(report.jn >= m.item_count());
            prop_assert!(report.an <= m.item_count());
            let all_unanimous = m.rows().iter().all(|row| row.iter().all(|&l| l == row[0]));
            prop_assert_eq!(report.rho == 1.0, all_unanimous);
            prop_assert_eq!(report.an == m.item_count(), all_unanimous);
        }

        #[test]
        fn rjcd_permutation_invariant(m in matrix_strategy(), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let base = m.rjcd();

            // permute assessor columns
            let mut column_order: Vec<usize> = (0..m.assessor_count()).collect();
            column_order.shuffle(&mut rng);
            let shuffled_cols: Vec<Vec<JudgmentLabel>> = m
                .rows()
                .iter()
                .map(|row| column_order.iter().map(|&c| row[c]).collect())
                .collect();
            let cols = matrix(shuffled_cols);
            prop_assert_eq!(cols.rjcd().an, base.an);
            prop_assert_eq!(cols.rjcd().jn, base.jn);

            // permute item rows
            let mut rows = m.rows().to_vec();
            rows.shuffle(&mut rng);
            let shuffled_rows = matrix(rows);
            prop_assert_eq!(shuffled_rows.rjcd().an, base.an);
            prop_assert_eq!(shuffled_rows.rjcd().jn, base.jn);
        }

        #[test]
        fn qrels_counts_match_scores(m in matrix_strategy()) {
            match m.qrels(&TieOverrides::new()) {
                Ok(qrels) => {
                    prop_assert_eq!(qrels.len(), m.item_count());
                    let positive = m.score_sums().iter().filter(|&&s| s > 0).count();
                    prop_assert_eq!(qrels.relevant_count(), positive);
                }
                Err(Error::UnresolvedTies { ranks, .. }) => {
                    let zeros: Vec<u32> = m
                        .score_sums()
                        .iter()
                        .enumerate()
                        .filter(|(_, &s)| s == 0)
                        .map(|(i, _)| (i + 1) as u32)
                        .collect();
                    prop_assert_eq!(ranks, zeros);
                }
                Err(other) => prop_assert!(false, "unexpected error: {other}"),
            }
        }
    }

    #[test]
    fn four_label_rows_give_rho_zero() {
        let m = matrix(vec![vec![R, P, I, N], vec![N, I, P, R]]);
        assert_eq!(m.rjcd().rho, 0.0);
    }
}
