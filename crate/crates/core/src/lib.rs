//! Measures how strongly a panel of assessors converges on relevance
//! judgments, evaluates and re-ranks web-snippet result lists, and
//! correlates the two.
//!
//! The crate is organized around the workflow:
//!
//! * [`judgment`] — four-way graded labels, score aggregation, binary
//!   verdicts, the convergence score ρ = AN/JN, and comparative
//!   agreement statistics (Fleiss' kappa, pairwise Jaccard).
//! * [`eval`] — precision/recall over ranked lists, cumulative PR
//!   curves, recall-level precision profiles, improvement, and
//!   ρ-threshold gating of queries.
//! * [`stats`] — Pearson correlation with a two-tailed Student-t test.
//! * [`rerank`], [`nb`], [`text`], [`topic`] — the snippet re-ranking
//!   pipeline: naive Bayes topic classification over a labeled corpus,
//!   nearest-neighbour label smoothing, a confidence-gated merge, and a
//!   stable partition by preference profile.
//! * [`sim`] — synthetic assessor panels with a controllable agreement
//!   level, for property-testing the convergence machinery.
//! * [`io`] — the CSV/TSV file formats and all report writers.
//!
//! ```
//! use rjcd_core::judgment::{JudgmentLabel, JudgmentMatrix};
//!
//! let rows = vec![
//!     vec![JudgmentLabel::Relevant, JudgmentLabel::Relevant],
//!     vec![JudgmentLabel::Relevant, JudgmentLabel::Insufficient],
//! ];
//! let matrix = JudgmentMatrix::new("example", vec!["a1".into(), "a2".into()], rows)?;
//! let report = matrix.rjcd();
//! assert_eq!((report.an, report.jn), (1, 3));
//! # Ok::<(), rjcd_core::Error>(())
//! ```

pub mod error;
pub mod eval;
pub mod io;
pub mod judgment;
pub mod nb;
pub mod rerank;
pub mod sim;
pub mod stats;
pub mod text;
pub mod topic;

pub use error::{Error, Result};
