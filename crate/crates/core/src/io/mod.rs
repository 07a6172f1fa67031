//! On-disk formats: parsing and validation for judgments, snippets,
//! queries, overrides, preference profiles, training corpora, and
//! re-ranked orderings, plus writers for every report file.
//!
//! All tabular files are UTF-8 CSV with a header row (the training
//! corpus is tab-separated); text fields are quoted as needed. Parse
//! errors name the file and, where a single record is at fault, the
//! line.

mod read;
pub mod svg;
mod write;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::judgment::{JudgmentMatrix, TieOverrides};
use crate::rerank::Snippet;

pub use read::{
    load_corpus, load_judgments, load_ordering, load_overrides, load_profiles, load_queries,
    load_snippets, load_summary,
};
pub use write::{
    write_correlation_csv, write_gate_csv, write_judgments_csv, write_pr_curve_csv,
    write_profile_csv, write_reports, write_reranked_csv, write_rjcd_csv, write_snippets_csv,
    write_summary_csv, write_sweep_csv, QueryEvaluation, QuerySummary, ReportBundle, RerankedRow,
};

/// Kind of search term, as catalogued for the experiment queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryCategory {
    Ambiguous,
    Entity,
    General,
}

impl QueryCategory {
    pub const fn name(self) -> &'static str {
        match self {
            QueryCategory::Ambiguous => "Ambiguous",
            QueryCategory::Entity => "Entity",
            QueryCategory::General => "General",
        }
    }
}

impl fmt::Display for QueryCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QueryCategory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Ambiguous" => Ok(QueryCategory::Ambiguous),
            "Entity" => Ok(QueryCategory::Entity),
            "General" => Ok(QueryCategory::General),
            other => Err(Error::InvalidInput(format!(
                "unknown query category {other:?}"
            ))),
        }
    }
}

/// One experiment query with its stated information need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryRecord {
    pub query: String,
    pub info_need: String,
    pub category: QueryCategory,
}

/// Everything loaded for one run. Any piece may be empty; validation
/// only cross-checks the pieces that are present.
#[derive(Debug, Clone, Default)]
pub struct Dataset {
    pub queries: Vec<QueryRecord>,
    pub snippets: BTreeMap<String, Vec<Snippet>>,
    pub judgments: BTreeMap<String, JudgmentMatrix>,
    pub overrides: TieOverrides,
}

impl Dataset {
    /// Checks that every judgment grid refers to an existing snippet
    /// list of matching length, when snippets were loaded at all.
    pub fn validate(&self) -> Result<()> {
        if self.snippets.is_empty() {
            return Ok(());
        }
        for (query_id, matrix) in &self.judgments {
            let snippets = self.snippets.get(query_id).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "judgments reference query {query_id:?} but no snippets were loaded for it"
                ))
            })?;
            if snippets.len() != matrix.item_count() {
                return Err(Error::InvalidInput(format!(
                    "query {query_id:?}: {} snippets but {} judged items",
                    snippets.len(),
                    matrix.item_count()
                )));
            }
        }
        Ok(())
    }
}

/// Remapping from canonical column names to the actual header names of
/// a non-standard file, e.g. `query_id=qid,rank=pos`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColumnMap {
    map: HashMap<String, String>,
}

impl ColumnMap {
    /// The header name to look for, given a canonical column name.
    pub fn actual<'a>(&'a self, canonical: &'a str) -> &'a str {
        self.map
            .get(canonical)
            .map(String::as_str)
            .unwrap_or(canonical)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl FromStr for ColumnMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut map = HashMap::new();
        for entry in s.split(',').filter(|e| !e.trim().is_empty()) {
            let (canonical, actual) = entry.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!(
                    "bad column mapping {entry:?}: expected canonical=actual"
                ))
            })?;
            let (canonical, actual) = (canonical.trim(), actual.trim());
            if canonical.is_empty() || actual.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "bad column mapping {entry:?}: empty name"
                )));
            }
            if map
                .insert(canonical.to_owned(), actual.to_owned())
                .is_some()
            {
                return Err(Error::InvalidInput(format!(
                    "column {canonical:?} mapped twice"
                )));
            }
        }
        Ok(ColumnMap { map })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_map_parsing() {
        let map: ColumnMap = "query_id=qid, rank=pos".parse().unwrap();
        assert_eq!(map.actual("query_id"), "qid");
        assert_eq!(map.actual("rank"), "pos");
        assert_eq!(map.actual("label"), "label");

        assert!("query_id".parse::<ColumnMap>().is_err());
        assert!("query_id=a,query_id=b".parse::<ColumnMap>().is_err());
        assert!("".parse::<ColumnMap>().unwrap().is_empty());
    }

    #[test]
    fn category_round_trip() {
        for cat in [
            QueryCategory::Ambiguous,
            QueryCategory::Entity,
            QueryCategory::General,
        ] {
            assert_eq!(cat.name().parse::<QueryCategory>().unwrap(), cat);
        }
        assert!("Navigational".parse::<QueryCategory>().is_err());
    }
}
