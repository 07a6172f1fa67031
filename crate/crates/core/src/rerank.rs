//! Snippet re-ranking: nearest-neighbour label smoothing, merge of the
//! two labelings, and preference-driven stable partitioning.

use crate::error::{Error, Result};
use crate::nb::Classification;
use crate::text::{featurize, FeatureMode, IdfStats, TermVector};
use crate::topic::OdpTopic;

/// A search-result surrogate: title, summary, and link for one ranked hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snippet {
    pub query_id: String,
    /// Original 1-based position in the result list.
    pub rank: u32,
    pub title: String,
    pub summary: String,
    pub url: String,
}

impl Snippet {
    /// Builds a snippet, rejecting one whose title and summary are both
    /// blank — there would be nothing to judge or classify.
    pub fn new(
        query_id: impl Into<String>,
        rank: u32,
        title: impl Into<String>,
        summary: impl Into<String>,
        url: impl Into<String>,
    ) -> Result<Self> {
        let snippet = Snippet {
            query_id: query_id.into(),
            rank,
            title: title.into(),
            summary: summary.into(),
            url: url.into(),
        };
        if snippet.title.trim().is_empty() && snippet.summary.trim().is_empty() {
            return Err(Error::InvalidInput(format!(
                "snippet {} of query {:?} has neither title nor summary text",
                snippet.rank, snippet.query_id
            )));
        }
        Ok(snippet)
    }

    /// The text seen by the classifier and the similarity measure.
    pub fn text(&self) -> String {
        format!("{} {}", self.title, self.summary)
    }
}

/// The two topics assumed to describe a user's interest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreferenceProfile {
    first: OdpTopic,
    second: OdpTopic,
}

impl PreferenceProfile {
    pub fn new(first: OdpTopic, second: OdpTopic) -> Result<Self> {
        if first == second {
            return Err(Error::InvalidInput(format!(
                "preference profile needs two distinct topics, got {first} twice"
            )));
        }
        Ok(PreferenceProfile { first, second })
    }

    pub fn contains(&self, topic: OdpTopic) -> bool {
        topic == self.first || topic == self.second
    }

    pub fn topics(&self) -> [OdpTopic; 2] {
        [self.first, self.second]
    }
}

/// Smooths per-snippet labels by majority vote over the k most similar
/// snippets (cosine over TF-IDF vectors built from the list itself).
///
/// Snippets sharing no terms contribute no similarity evidence and are
/// never counted as neighbours; a snippet with no neighbours keeps its
/// own label. Vote ties fall back to the snippet's own label when it is
/// among the leaders, then to canonical topic order.
pub fn knn_smooth(snippets: &[Snippet], nb_labels: &[OdpTopic], k: usize) -> Result<Vec<OdpTopic>> {
    if snippets.len() != nb_labels.len() {
        return Err(Error::InvalidInput(format!(
            "label count {} does not match snippet count {}",
            nb_labels.len(),
            snippets.len()
        )));
    }
    if snippets.len() < 2 {
        return Ok(nb_labels.to_vec());
    }
    if k == 0 || k >= snippets.len() {
        return Err(Error::InvalidInput(format!(
            "k must satisfy 1 <= k < {}, got {k}",
            snippets.len()
        )));
    }

    let texts: Vec<String> = snippets.iter().map(Snippet::text).collect();
    let idf = IdfStats::from_texts(texts.iter().map(String::as_str));
    let vectors: Vec<TermVector> = texts
        .iter()
        .map(|t| featurize(t, FeatureMode::TfIdf(&idf)))
        .collect();

    let smoothed = (0..snippets.len())
        .map(|i| {
            let mut neighbours: Vec<(f64, usize)> = (0..snippets.len())
                .filter(|&j| j != i)
                .map(|j| (vectors[i].cosine(&vectors[j]), j))
                .filter(|&(sim, _)| sim > 0.0)
                .collect();
            neighbours.sort_by(|a, b| {
                b.0.partial_cmp(&a.0)
                    .expect("cosine is never NaN")
                    .then(a.1.cmp(&b.1))
            });
            neighbours.truncate(k);
            majority_label(nb_labels[i], neighbours.iter().map(|&(_, j)| nb_labels[j]))
        })
        .collect();
    Ok(smoothed)
}

fn majority_label(own: OdpTopic, votes: impl Iterator<Item = OdpTopic>) -> OdpTopic {
    let mut counts = [0usize; OdpTopic::ALL.len()];
    let mut any = false;
    for vote in votes {
        counts[vote as usize] += 1;
        any = true;
    }
    if !any {
        return own;
    }
    let top = *counts.iter().max().expect("count array is non-empty");
    if counts[own as usize] == top {
        return own;
    }
    OdpTopic::ALL
        .into_iter()
        .find(|&t| counts[t as usize] == top)
        .expect("some topic attains the maximum count")
}

/// Reconciles the classifier labels with the smoothed labels.
///
/// Agreement stands as-is. On conflict the classifier wins only when its
/// log-posterior margin reaches `tau` (in nats); otherwise the smoothed
/// label is taken.
pub fn merge(nb: &[Classification], smoothed: &[OdpTopic], tau: f64) -> Result<Vec<OdpTopic>> {
    if nb.len() != smoothed.len() {
        return Err(Error::InvalidInput(format!(
            "classifier results ({}) and smoothed labels ({}) differ in length",
            nb.len(),
            smoothed.len()
        )));
    }
    Ok(nb
        .iter()
        .zip(smoothed)
        .map(|(c, &s)| {
            if c.topic == s || c.margin >= tau {
                c.topic
            } else {
                s
            }
        })
        .collect())
}

/// Stable-partition order: indices of snippets whose topic is in the
/// profile first, then the rest, each group in original order.
pub fn rerank_order(topics: &[OdpTopic], profile: &PreferenceProfile) -> Vec<usize> {
    let (preferred, other): (Vec<usize>, Vec<usize>) =
        (0..topics.len()).partition(|&i| profile.contains(topics[i]));
    let mut order = preferred;
    order.extend(other);
    order
}

/// Applies [`rerank_order`] to the snippet list itself. The output is a
/// permutation of the input.
pub fn rerank(
    snippets: &[Snippet],
    topics: &[OdpTopic],
    profile: &PreferenceProfile,
) -> Vec<Snippet> {
    assert_eq!(
        snippets.len(),
        topics.len(),
        "one topic per snippet is required"
    );
    rerank_order(topics, profile)
        .into_iter()
        .map(|i| snippets[i].clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn snippet(rank: u32, text: &str) -> Snippet {
        Snippet::new("q", rank, text, "", "http://example.com").unwrap()
    }

    #[test]
    fn snippet_needs_some_text() {
        assert!(Snippet::new("q", 1, "  ", "\t", "http://x").is_err());
        assert!(Snippet::new("q", 1, "", "summary", "http://x").is_ok());
    }

    #[test]
    fn profile_needs_distinct_topics() {
        assert!(PreferenceProfile::new(OdpTopic::Arts, OdpTopic::Arts).is_err());
        let p = PreferenceProfile::new(OdpTopic::Games, OdpTopic::News).unwrap();
        assert!(p.contains(OdpTopic::Games));
        assert!(!p.contains(OdpTopic::Arts));
    }

    #[test]
    fn identical_snippets_vote_unanimously() {
        let snippets: Vec<Snippet> = (1..=6).map(|r| snippet(r, "resume writing tips")).collect();
        let mut labels = vec![OdpTopic::Business; 6];
        labels[0] = OdpTopic::Arts; // outlier flips to the majority
        let smoothed = knn_smooth(&snippets, &labels, 5).unwrap();
        assert_eq!(smoothed, vec![OdpTopic::Business; 6]);
    }

    #[test]
    fn orthogonal_snippets_keep_their_labels() {
        let snippets = vec![
            snippet(1, "alpha alpine"),
            snippet(2, "bravo bowl"),
            snippet(3, "charlie chess"),
        ];
        let labels = vec![OdpTopic::Arts, OdpTopic::Games, OdpTopic::News];
        let smoothed = knn_smooth(&snippets, &labels, 1).unwrap();
        assert_eq!(smoothed, labels);
    }

    #[test]
    fn knn_validates_parameters() {
        let snippets = vec![snippet(1, "one"), snippet(2, "two")];
        let labels = vec![OdpTopic::Arts, OdpTopic::Arts];
        assert!(knn_smooth(&snippets, &labels, 0).is_err());
        assert!(knn_smooth(&snippets, &labels, 2).is_err());
        assert!(knn_smooth(&snippets, &labels[..1], 1).is_err());

        // a single snippet is returned unchanged, whatever k would be
        let one = vec![snippet(1, "solo")];
        assert_eq!(
            knn_smooth(&one, &[OdpTopic::Home], 3).unwrap(),
            vec![OdpTopic::Home]
        );
    }

    #[test]
    fn merge_rules() {
        let conf = |topic, margin| Classification { topic, margin };
        let nb = vec![
            conf(OdpTopic::Arts, 0.1),
            conf(OdpTopic::Arts, f64::INFINITY),
            conf(OdpTopic::Arts, 0.0),
        ];
        let smoothed = vec![OdpTopic::Arts, OdpTopic::News, OdpTopic::News];
        let merged = merge(&nb, &smoothed, 1.0).unwrap();
        assert_eq!(merged, vec![OdpTopic::Arts, OdpTopic::Arts, OdpTopic::News]);
        assert!(merge(&nb, &smoothed[..2], 1.0).is_err());
    }

    #[test]
    fn rerank_hand_example() {
        // topics [A, B, A, C, B] with profile {B, C} -> ranks [2, 4, 5, 1, 3]
        let snippets: Vec<Snippet> = (1..=5).map(|r| snippet(r, "text")).collect();
        let topics = vec![
            OdpTopic::Arts,
            OdpTopic::Business,
            OdpTopic::Arts,
            OdpTopic::Computers,
            OdpTopic::Business,
        ];
        let profile = PreferenceProfile::new(OdpTopic::Business, OdpTopic::Computers).unwrap();
        let order: Vec<u32> = rerank(&snippets, &topics, &profile)
            .iter()
            .map(|s| s.rank)
            .collect();
        assert_eq!(order, vec![2, 4, 5, 1, 3]);
    }

    #[test]
    fn rerank_degenerate_profiles_keep_order() {
        let snippets: Vec<Snippet> = (1..=4).map(|r| snippet(r, "text")).collect();
        let profile = PreferenceProfile::new(OdpTopic::Health, OdpTopic::Home).unwrap();

        let none_match = vec![OdpTopic::Arts; 4];
        let order: Vec<u32> = rerank(&snippets, &none_match, &profile)
            .iter()
            .map(|s| s.rank)
            .collect();
        assert_eq!(order, vec![1, 2, 3, 4]);

        let all_match = vec![OdpTopic::Health; 4];
        let order: Vec<u32> = rerank(&snippets, &all_match, &profile)
            .iter()
            .map(|s| s.rank)
            .collect();
        assert_eq!(order, vec![1, 2, 3, 4]);
    }

    fn topic_strategy() -> impl Strategy<Value = OdpTopic> {
        (0usize..OdpTopic::ALL.len()).prop_map(|i| OdpTopic::ALL[i])
    }

    proptest! {
        #[test]
        fn rerank_is_a_stable_idempotent_permutation(
            topics in proptest::collection::vec(topic_strategy(), 1..=30),
            a in topic_strategy(),
            b in topic_strategy(),
        ) {
            prop_assume!(a != b);
            let profile = PreferenceProfile::new(a, b).unwrap();
            let order = rerank_order(&topics, &profile);

            // permutation
            let mut sorted = order.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..topics.len()).collect::<Vec<_>>());

            // stability within each partition
            for w in order.windows(2) {
                let same_side = profile.contains(topics[w[0]]) == profile.contains(topics[w[1]]);
                if same_side {
                    prop_assert!(w[0] < w[1]);
                }
            }

            // idempotence: reordering the already-reordered list changes nothing
            let reordered_topics: Vec<OdpTopic> = order.iter().map(|&i| topics[i]).collect();
            let second = rerank_order(&reordered_topics, &profile);
            prop_assert_eq!(second, (0..topics.len()).collect::<Vec<_>>());
        }

        #[test]
        fn smoothing_never_invents_topics(
            labels in proptest::collection::vec(topic_strategy(), 2..=12),
            k in 1usize..=11,
        ) {
            prop_assume!(k < labels.len());
            let snippets: Vec<Snippet> = (0..labels.len())
                .map(|i| snippet(i as u32 + 1, if i % 2 == 0 { "shared words here" } else { "shared words there" }))
                .collect();
            let smoothed = knn_smooth(&snippets, &labels, k).unwrap();
            for topic in smoothed {
                prop_assert!(labels.contains(&topic));
            }
        }
    }
}
