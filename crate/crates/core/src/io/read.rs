//! CSV/TSV loaders with per-line validation errors.

use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::path::Path;

use csv::StringRecord;

use crate::error::{Error, ParseError, ParseKind, Result};
use crate::io::{ColumnMap, QueryRecord, QuerySummary};
use crate::judgment::{JudgmentLabel, JudgmentMatrix, Relevance, TieOverrides};
use crate::nb::CorpusDoc;
use crate::rerank::{PreferenceProfile, Snippet};
use crate::topic::OdpTopic;

fn parse_err(path: &Path, line: Option<u64>, kind: ParseKind) -> Error {
    Error::Parse(ParseError::new(path, line, kind))
}

fn open_csv(path: &Path, delimiter: u8) -> Result<csv::Reader<File>> {
    csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::io(path, io),
            other => parse_err(path, None, ParseKind::Malformed(format!("{other:?}"))),
        })
}

fn map_csv_err(path: &Path, e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line());
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => parse_err(path, line, ParseKind::Malformed(format!("{other:?}"))),
    }
}

/// Resolves the canonical columns to field indices via the header row.
fn resolve_columns(
    path: &Path,
    reader: &mut csv::Reader<File>,
    canonical: &[&str],
    map: Option<&ColumnMap>,
) -> Result<Vec<usize>> {
    let headers = reader.headers().map_err(|e| map_csv_err(path, e))?.clone();
    canonical
        .iter()
        .map(|&name| {
            let wanted = map.map(|m| m.actual(name)).unwrap_or(name);
            headers
                .iter()
                .position(|h| h.trim() == wanted)
                .ok_or_else(|| parse_err(path, Some(1), ParseKind::MissingColumn(wanted.into())))
        })
        .collect()
}

fn line_of(record: &StringRecord) -> Option<u64> {
    record.position().map(|p| p.line())
}

fn get_field<'r>(path: &Path, record: &'r StringRecord, index: usize) -> Result<&'r str> {
    record.get(index).ok_or_else(|| {
        parse_err(
            path,
            line_of(record),
            ParseKind::Malformed(format!("record has no field {index}")),
        )
    })
}

fn parse_rank(path: &Path, record: &StringRecord, field: &'static str, raw: &str) -> Result<u32> {
    raw.trim().parse().map_err(|_| {
        parse_err(
            path,
            line_of(record),
            ParseKind::BadField {
                field,
                expected: "a positive integer",
                got: raw.into(),
            },
        )
    })
}

/// Loads judgment grids, one matrix per query, assessor columns in
/// sorted assessor-id order and rows in rank order.
///
/// Rejects unknown labels, duplicate `(query, rank, assessor)` cells,
/// non-contiguous ranks, and missing cells — each as its own error kind.
pub fn load_judgments(
    path: impl AsRef<Path>,
    columns: Option<&ColumnMap>,
) -> Result<Vec<JudgmentMatrix>> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b',')?;
    let idx = resolve_columns(
        path,
        &mut reader,
        &["query_id", "rank", "assessor_id", "label"],
        columns,
    )?;

    let mut queries: BTreeMap<String, HashMap<(u32, String), JudgmentLabel>> = BTreeMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        let query_id = get_field(path, &record, idx[0])?.to_owned();
        let rank = parse_rank(path, &record, "rank", get_field(path, &record, idx[1])?)?;
        let assessor_id = get_field(path, &record, idx[2])?.to_owned();
        let raw_label = get_field(path, &record, idx[3])?;
        let label = raw_label.parse::<JudgmentLabel>().map_err(|_| {
            parse_err(
                path,
                line_of(&record),
                ParseKind::UnknownLabel(raw_label.into()),
            )
        })?;
        let cells = queries.entry(query_id.clone()).or_default();
        if cells.insert((rank, assessor_id.clone()), label).is_some() {
            return Err(parse_err(
                path,
                line_of(&record),
                ParseKind::DuplicateCell {
                    query_id,
                    rank,
                    assessor_id,
                },
            ));
        }
    }
    if queries.is_empty() {
        return Err(parse_err(path, None, ParseKind::Empty));
    }

    let mut matrices = Vec::with_capacity(queries.len());
    for (query_id, cells) in queries {
        let mut assessors: Vec<String> = cells.keys().map(|(_, a)| a.clone()).collect();
        assessors.sort_unstable();
        assessors.dedup();

        let mut ranks: Vec<u32> = cells.keys().map(|&(r, _)| r).collect();
        ranks.sort_unstable();
        ranks.dedup();
        for (i, &rank) in ranks.iter().enumerate() {
            let expected = (i + 1) as u32;
            if rank != expected {
                return Err(parse_err(
                    path,
                    None,
                    ParseKind::RankGap {
                        query_id,
                        expected,
                        found: rank,
                    },
                ));
            }
        }

        let mut rows = Vec::with_capacity(ranks.len());
        for &rank in &ranks {
            let mut row = Vec::with_capacity(assessors.len());
            for assessor_id in &assessors {
                match cells.get(&(rank, assessor_id.clone())) {
                    Some(&label) => row.push(label),
                    None => {
                        return Err(parse_err(
                            path,
                            None,
                            ParseKind::MissingCell {
                                query_id,
                                rank,
                                assessor_id: assessor_id.clone(),
                            },
                        ))
                    }
                }
            }
            rows.push(row);
        }
        matrices.push(JudgmentMatrix::new(query_id, assessors, rows)?);
    }
    Ok(matrices)
}

/// Loads snippet lists keyed by query, ranks contiguous from 1.
pub fn load_snippets(
    path: impl AsRef<Path>,
    columns: Option<&ColumnMap>,
) -> Result<BTreeMap<String, Vec<Snippet>>> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b',')?;
    let idx = resolve_columns(
        path,
        &mut reader,
        &["query_id", "rank", "title", "snippet", "url"],
        columns,
    )?;

    let mut queries: BTreeMap<String, BTreeMap<u32, Snippet>> = BTreeMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        let query_id = get_field(path, &record, idx[0])?.to_owned();
        let rank = parse_rank(path, &record, "rank", get_field(path, &record, idx[1])?)?;
        let snippet = Snippet::new(
            query_id.clone(),
            rank,
            get_field(path, &record, idx[2])?,
            get_field(path, &record, idx[3])?,
            get_field(path, &record, idx[4])?,
        )
        .map_err(|e| parse_err(path, line_of(&record), ParseKind::Malformed(e.to_string())))?;
        if queries
            .entry(query_id.clone())
            .or_default()
            .insert(rank, snippet)
            .is_some()
        {
            return Err(parse_err(
                path,
                line_of(&record),
                ParseKind::DuplicateRank { query_id, rank },
            ));
        }
    }
    if queries.is_empty() {
        return Err(parse_err(path, None, ParseKind::Empty));
    }

    let mut result = BTreeMap::new();
    for (query_id, by_rank) in queries {
        for (i, &rank) in by_rank.keys().enumerate() {
            let expected = (i + 1) as u32;
            if rank != expected {
                return Err(parse_err(
                    path,
                    None,
                    ParseKind::RankGap {
                        query_id,
                        expected,
                        found: rank,
                    },
                ));
            }
        }
        result.insert(query_id, by_rank.into_values().collect());
    }
    Ok(result)
}

/// Loads the experiment query list.
pub fn load_queries(
    path: impl AsRef<Path>,
    columns: Option<&ColumnMap>,
) -> Result<Vec<QueryRecord>> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b',')?;
    let idx = resolve_columns(
        path,
        &mut reader,
        &["query", "info_need", "category"],
        columns,
    )?;

    let mut records = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        let query = get_field(path, &record, idx[0])?.trim().to_owned();
        if query.is_empty() {
            return Err(parse_err(
                path,
                line_of(&record),
                ParseKind::BadField {
                    field: "query",
                    expected: "non-empty text",
                    got: String::new(),
                },
            ));
        }
        let raw_category = get_field(path, &record, idx[2])?;
        let category = raw_category.parse().map_err(|_| {
            parse_err(
                path,
                line_of(&record),
                ParseKind::UnknownCategory(raw_category.into()),
            )
        })?;
        records.push(QueryRecord {
            query,
            info_need: get_field(path, &record, idx[1])?.to_owned(),
            category,
        });
    }
    if records.is_empty() {
        return Err(parse_err(path, None, ParseKind::Empty));
    }
    Ok(records)
}

/// Loads manual tie resolutions. A header-only file is a valid empty set.
pub fn load_overrides(path: impl AsRef<Path>, columns: Option<&ColumnMap>) -> Result<TieOverrides> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b',')?;
    let idx = resolve_columns(path, &mut reader, &["query_id", "rank", "verdict"], columns)?;

    let mut overrides = TieOverrides::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        let query_id = get_field(path, &record, idx[0])?.to_owned();
        let rank = parse_rank(path, &record, "rank", get_field(path, &record, idx[1])?)?;
        let raw_verdict = get_field(path, &record, idx[2])?;
        let relevance = match raw_verdict.trim() {
            "relevant" => Relevance::Relevant,
            "irrelevant" => Relevance::Irrelevant,
            other => {
                return Err(parse_err(
                    path,
                    line_of(&record),
                    ParseKind::UnknownVerdict(other.into()),
                ))
            }
        };
        if overrides.get(&query_id, rank).is_some() {
            return Err(parse_err(
                path,
                line_of(&record),
                ParseKind::DuplicateRank { query_id, rank },
            ));
        }
        overrides.insert(query_id, rank, relevance);
    }
    Ok(overrides)
}

/// Loads per-query preference profiles (two distinct topics each).
pub fn load_profiles(
    path: impl AsRef<Path>,
    columns: Option<&ColumnMap>,
) -> Result<BTreeMap<String, PreferenceProfile>> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b',')?;
    let idx = resolve_columns(
        path,
        &mut reader,
        &["query_id", "topic1", "topic2"],
        columns,
    )?;

    let mut profiles = BTreeMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        let query_id = get_field(path, &record, idx[0])?.to_owned();
        let mut topics = [OdpTopic::Arts; 2];
        for (slot, &i) in topics.iter_mut().zip(&idx[1..]) {
            let raw = get_field(path, &record, i)?;
            *slot = raw.parse().map_err(|_| {
                parse_err(path, line_of(&record), ParseKind::UnknownTopic(raw.into()))
            })?;
        }
        let profile = PreferenceProfile::new(topics[0], topics[1])
            .map_err(|e| parse_err(path, line_of(&record), ParseKind::Malformed(e.to_string())))?;
        if profiles.insert(query_id.clone(), profile).is_some() {
            return Err(parse_err(
                path,
                line_of(&record),
                ParseKind::Malformed(format!("duplicate profile for query {query_id:?}")),
            ));
        }
    }
    Ok(profiles)
}

/// Loads the tab-separated training corpus (`topic<TAB>text`, with header).
pub fn load_corpus(path: impl AsRef<Path>, columns: Option<&ColumnMap>) -> Result<Vec<CorpusDoc>> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b'\t')?;
    let idx = resolve_columns(path, &mut reader, &["topic", "text"], columns)?;

    let mut docs = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        let raw_topic = get_field(path, &record, idx[0])?;
        let topic = raw_topic.parse().map_err(|_| {
            parse_err(
                path,
                line_of(&record),
                ParseKind::UnknownTopic(raw_topic.into()),
            )
        })?;
        docs.push(CorpusDoc::new(topic, get_field(path, &record, idx[1])?));
    }
    if docs.is_empty() {
        return Err(parse_err(path, None, ParseKind::Empty));
    }
    Ok(docs)
}

/// Loads a re-ranked ordering: for each query, the original ranks listed
/// in new-rank order. Extra columns (such as the assigned topic) are
/// ignored, so the output of the re-ranker can be fed back in directly.
pub fn load_ordering(
    path: impl AsRef<Path>,
    columns: Option<&ColumnMap>,
) -> Result<BTreeMap<String, Vec<u32>>> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b',')?;
    let idx = resolve_columns(
        path,
        &mut reader,
        &["query_id", "new_rank", "original_rank"],
        columns,
    )?;

    let mut queries: BTreeMap<String, BTreeMap<u32, u32>> = BTreeMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        let query_id = get_field(path, &record, idx[0])?.to_owned();
        let new_rank = parse_rank(path, &record, "new_rank", get_field(path, &record, idx[1])?)?;
        let original = parse_rank(
            path,
            &record,
            "original_rank",
            get_field(path, &record, idx[2])?,
        )?;
        if queries
            .entry(query_id.clone())
            .or_default()
            .insert(new_rank, original)
            .is_some()
        {
            return Err(parse_err(
                path,
                line_of(&record),
                ParseKind::DuplicateRank {
                    query_id,
                    rank: new_rank,
                },
            ));
        }
    }
    if queries.is_empty() {
        return Err(parse_err(path, None, ParseKind::Empty));
    }

    let mut result = BTreeMap::new();
    for (query_id, by_new_rank) in queries {
        for (i, &new_rank) in by_new_rank.keys().enumerate() {
            let expected = (i + 1) as u32;
            if new_rank != expected {
                return Err(parse_err(
                    path,
                    None,
                    ParseKind::RankGap {
                        query_id,
                        expected,
                        found: new_rank,
                    },
                ));
            }
        }
        let originals: Vec<u32> = by_new_rank.into_values().collect();
        let mut sorted = originals.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != originals.len() {
            return Err(parse_err(
                path,
                None,
                ParseKind::Malformed(format!(
                    "ordering for query {query_id:?} repeats an original rank"
                )),
            ));
        }
        result.insert(query_id, originals);
    }
    Ok(result)
}

fn parse_float(path: &Path, record: &StringRecord, field: &'static str, raw: &str) -> Result<f64> {
    raw.trim().parse().map_err(|_| {
        parse_err(
            path,
            line_of(record),
            ParseKind::BadField {
                field,
                expected: "a number",
                got: raw.into(),
            },
        )
    })
}

/// Loads a previously written `summary.csv`, e.g. to correlate ρ with
/// improvement in a later run.
pub fn load_summary(
    path: impl AsRef<Path>,
    columns: Option<&ColumnMap>,
) -> Result<Vec<QuerySummary>> {
    let path = path.as_ref();
    let mut reader = open_csv(path, b',')?;
    let idx = resolve_columns(
        path,
        &mut reader,
        &[
            "query_id",
            "rho",
            "an",
            "jn",
            "mean_precision_baseline",
            "mean_precision_reranked",
            "improvement",
        ],
        columns,
    )?;

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| map_csv_err(path, e))?;
        rows.push(QuerySummary {
            query_id: get_field(path, &record, idx[0])?.to_owned(),
            rho: parse_float(path, &record, "rho", get_field(path, &record, idx[1])?)?,
            an: parse_rank(path, &record, "an", get_field(path, &record, idx[2])?)? as usize,
            jn: parse_rank(path, &record, "jn", get_field(path, &record, idx[3])?)? as usize,
            mean_precision_baseline: parse_float(
                path,
                &record,
                "mean_precision_baseline",
                get_field(path, &record, idx[4])?,
            )?,
            mean_precision_reranked: parse_float(
                path,
                &record,
                "mean_precision_reranked",
                get_field(path, &record, idx[5])?,
            )?,
            improvement: parse_float(
                path,
                &record,
                "improvement",
                get_field(path, &record, idx[6])?,
            )?,
        });
    }
    if rows.is_empty() {
        return Err(parse_err(path, None, ParseKind::Empty));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::QueryCategory;
    use std::io::Write as _;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(content.as_bytes()).unwrap();
        file
    }

    #[test]
    fn judgments_happy_path() {
        let file = write_temp(
            "query_id,rank,assessor_id,label\n\
             q1,1,a2,N\n\
             q1,1,a1,R\n\
             q1,2,a1,P\n\
             q1,2,a2,I\n",
        );
        let matrices = load_judgments(file.path(), None).unwrap();
        assert_eq!(matrices.len(), 1);
        let m = &matrices[0];
        assert_eq!(m.query_id(), "q1");
        assert_eq!(m.assessor_ids(), ["a1", "a2"]);
        assert_eq!(
            m.rows()[0],
            vec![JudgmentLabel::Relevant, JudgmentLabel::Insufficient]
        );
        assert_eq!(
            m.rows()[1],
            vec![JudgmentLabel::Partial, JudgmentLabel::Irrelevant]
        );
    }

    fn parse_kind(err: Error) -> ParseKind {
        match err {
            Error::Parse(e) => e.kind,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn judgments_error_kinds() {
        let unknown = write_temp("query_id,rank,assessor_id,label\nq1,1,a1,X\n");
        match parse_kind(load_judgments(unknown.path(), None).unwrap_err()) {
            ParseKind::UnknownLabel(l) => assert_eq!(l, "X"),
            other => panic!("{other:?}"),
        }

        let duplicate = write_temp("query_id,rank,assessor_id,label\nq1,1,a1,R\nq1,1,a1,P\n");
        assert!(matches!(
            parse_kind(load_judgments(duplicate.path(), None).unwrap_err()),
            ParseKind::DuplicateCell { .. }
        ));

        let missing = write_temp(
            "query_id,rank,assessor_id,label\n\
             q1,1,a1,R\nq1,1,a2,R\nq1,2,a1,P\n",
        );
        match parse_kind(load_judgments(missing.path(), None).unwrap_err()) {
            ParseKind::MissingCell {
                rank, assessor_id, ..
            } => {
                assert_eq!(rank, 2);
                assert_eq!(assessor_id, "a2");
            }
            other => panic!("{other:?}"),
        }

        let gap = write_temp("query_id,rank,assessor_id,label\nq1,1,a1,R\nq1,3,a1,P\n");
        assert!(matches!(
            parse_kind(load_judgments(gap.path(), None).unwrap_err()),
            ParseKind::RankGap {
                expected: 2,
                found: 3,
                ..
            }
        ));

        let empty = write_temp("query_id,rank,assessor_id,label\n");
        assert!(matches!(
            parse_kind(load_judgments(empty.path(), None).unwrap_err()),
            ParseKind::Empty
        ));

        let bad_header = write_temp("query,rank,assessor_id,label\nq1,1,a1,R\n");
        assert!(matches!(
            parse_kind(load_judgments(bad_header.path(), None).unwrap_err()),
            ParseKind::MissingColumn(_)
        ));
    }

    #[test]
    fn judgment_errors_carry_line_numbers() {
        let file = write_temp("query_id,rank,assessor_id,label\nq1,1,a1,R\nq1,2,a1,Q\n");
        match load_judgments(file.path(), None).unwrap_err() {
            Error::Parse(e) => assert_eq!(e.line, Some(3)),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn judgments_with_column_mapping() {
        let file = write_temp("qid,pos,judge,vote\nq1,1,a1,R\n");
        let map: ColumnMap = "query_id=qid,rank=pos,assessor_id=judge,label=vote"
            .parse()
            .unwrap();
        let matrices = load_judgments(file.path(), Some(&map)).unwrap();
        assert_eq!(matrices[0].item_count(), 1);
    }

    #[test]
    fn snippets_validation() {
        let good = write_temp(
            "query_id,rank,title,snippet,url\n\
             q1,2,\"Second, with comma\",text,http://b\n\
             q1,1,First,text,http://a\n",
        );
        let snippets = load_snippets(good.path(), None).unwrap();
        assert_eq!(snippets["q1"].len(), 2);
        assert_eq!(snippets["q1"][0].title, "First");
        assert_eq!(snippets["q1"][1].title, "Second, with comma");

        let gap = write_temp("query_id,rank,title,snippet,url\nq1,2,T,s,http://a\n");
        assert!(matches!(
            parse_kind(load_snippets(gap.path(), None).unwrap_err()),
            ParseKind::RankGap {
                expected: 1,
                found: 2,
                ..
            }
        ));

        let dup =
            write_temp("query_id,rank,title,snippet,url\nq1,1,T,s,http://a\nq1,1,U,s,http://b\n");
        assert!(matches!(
            parse_kind(load_snippets(dup.path(), None).unwrap_err()),
            ParseKind::DuplicateRank { .. }
        ));

        let blank = write_temp("query_id,rank,title,snippet,url\nq1,1, , ,http://a\n");
        assert!(matches!(
            parse_kind(load_snippets(blank.path(), None).unwrap_err()),
            ParseKind::Malformed(_)
        ));
    }

    #[test]
    fn queries_overrides_profiles_corpus() {
        let queries =
            write_temp("query,info_need,category\nresume,how to write a resume,General\n");
        let records = load_queries(queries.path(), None).unwrap();
        assert_eq!(records[0].category, QueryCategory::General);

        let bad_cat = write_temp("query,info_need,category\nresume,text,Weird\n");
        assert!(matches!(
            parse_kind(load_queries(bad_cat.path(), None).unwrap_err()),
            ParseKind::UnknownCategory(_)
        ));

        let overrides = write_temp("query_id,rank,verdict\nq1,3,relevant\nq1,7,irrelevant\n");
        let overrides = load_overrides(overrides.path(), None).unwrap();
        assert_eq!(overrides.get("q1", 3), Some(Relevance::Relevant));
        assert_eq!(overrides.get("q1", 7), Some(Relevance::Irrelevant));
        assert_eq!(overrides.get("q1", 1), None);

        let empty_overrides = write_temp("query_id,rank,verdict\n");
        assert!(load_overrides(empty_overrides.path(), None)
            .unwrap()
            .is_empty());

        let bad_verdict = write_temp("query_id,rank,verdict\nq1,3,maybe\n");
        assert!(matches!(
            parse_kind(load_overrides(bad_verdict.path(), None).unwrap_err()),
            ParseKind::UnknownVerdict(_)
        ));

        let profiles = write_temp("query_id,topic1,topic2\nq1,Arts,Kids & Teens\n");
        let profiles = load_profiles(profiles.path(), None).unwrap();
        assert!(profiles["q1"].contains(OdpTopic::KidsAndTeens));

        let corpus = write_temp("topic\ttext\nScience\tatom physics lab\nArts\tpaint gallery\n");
        let docs = load_corpus(corpus.path(), None).unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[0].topic, OdpTopic::Science);
    }

    #[test]
    fn ordering_permutation_checks() {
        let good = write_temp(
            "query_id,new_rank,original_rank,topic\nq1,1,3,Arts\nq1,2,1,News\nq1,3,2,Arts\n",
        );
        let ordering = load_ordering(good.path(), None).unwrap();
        assert_eq!(ordering["q1"], vec![3, 1, 2]);

        let repeated = write_temp("query_id,new_rank,original_rank\nq1,1,3\nq1,2,3\n");
        assert!(load_ordering(repeated.path(), None).is_err());

        let gap = write_temp("query_id,new_rank,original_rank\nq1,1,1\nq1,3,2\n");
        assert!(matches!(
            parse_kind(load_ordering(gap.path(), None).unwrap_err()),
            ParseKind::RankGap { .. }
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_judgments("/nonexistent/judgments.csv", None).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }
}
