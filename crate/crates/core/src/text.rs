//! Tokenization and sparse term vectors for short snippet text.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

/// Fixed 30-word stopword list, shipped with the crate.
static STOPWORDS_RAW: &str = include_str!("../data/stopwords.txt");

fn stopwords() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| STOPWORDS_RAW.lines().filter(|l| !l.is_empty()).collect())
}

/// Splits text into lowercase alphanumeric tokens, dropping single-char
/// tokens and stopwords. Snippets are short, so normalization is blunt
/// on purpose.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| t.chars().count() > 1)
        .map(|t| t.to_lowercase())
        .filter(|t| !stopwords().contains(t.as_str()))
        .collect()
}

/// How [`featurize`] weights terms.
#[derive(Debug, Clone, Copy)]
pub enum FeatureMode<'a> {
    /// Raw term counts, as consumed by the Bayes classifier.
    Counts,
    /// TF-IDF weights against the given corpus statistics, as used for
    /// cosine similarity.
    TfIdf(&'a IdfStats),
}

/// Sparse term → weight map. Zero weights are never stored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TermVector {
    weights: BTreeMap<String, f64>,
}

impl TermVector {
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn get(&self, term: &str) -> f64 {
        self.weights.get(term).copied().unwrap_or(0.0)
    }

    /// Terms and weights in lexicographic term order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.weights.iter().map(|(t, &w)| (t.as_str(), w))
    }

    pub fn dot(&self, other: &TermVector) -> f64 {
        // iterate over the smaller map
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().map(|(term, w)| w * large.get(term)).sum()
    }

    pub fn norm(&self) -> f64 {
        self.weights.values().map(|w| w * w).sum::<f64>().sqrt()
    }

    /// Cosine similarity; 0 when either vector is empty.
    pub fn cosine(&self, other: &TermVector) -> f64 {
        let denom = self.norm() * other.norm();
        if denom == 0.0 {
            return 0.0;
        }
        self.dot(other) / denom
    }
}

/// Builds the term vector of one text under the requested weighting.
/// Text that is empty after filtering yields an empty vector.
pub fn featurize(text: &str, mode: FeatureMode<'_>) -> TermVector {
    let mut weights: BTreeMap<String, f64> = BTreeMap::new();
    for token in tokenize(text) {
        *weights.entry(token).or_insert(0.0) += 1.0;
    }
    if let FeatureMode::TfIdf(idf) = mode {
        for (term, weight) in weights.iter_mut() {
            *weight *= idf.idf(term);
        }
    }
    TermVector { weights }
}

/// Document-frequency statistics over a corpus, for TF-IDF weighting.
#[derive(Debug, Clone, Default)]
pub struct IdfStats {
    doc_count: usize,
    doc_freq: HashMap<String, usize>,
}

impl IdfStats {
    pub fn from_texts<'a>(texts: impl IntoIterator<Item = &'a str>) -> Self {
        let mut doc_count = 0;
        let mut doc_freq: HashMap<String, usize> = HashMap::new();
        for text in texts {
            doc_count += 1;
            let unique: HashSet<String> = tokenize(text).into_iter().collect();
            for term in unique {
                *doc_freq.entry(term).or_insert(0) += 1;
            }
        }
        IdfStats {
            doc_count,
            doc_freq,
        }
    }

    pub fn doc_count(&self) -> usize {
        self.doc_count
    }

    /// Smoothed inverse document frequency:
    /// `ln((1 + n) / (1 + df)) + 1`, so unseen terms still get a
    /// positive weight and nothing divides by zero.
    pub fn idf(&self, term: &str) -> f64 {
        let df = self.doc_freq.get(term).copied().unwrap_or(0);
        ((1.0 + self.doc_count as f64) / (1.0 + df as f64)).ln() + 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn counts_example() {
        let v = featurize("Resume Writing resume", FeatureMode::Counts);
        assert_eq!(v.get("resume"), 2.0);
        assert_eq!(v.get("writing"), 1.0);
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn empty_and_filtered_text() {
        assert!(featurize("", FeatureMode::Counts).is_empty());
        assert!(featurize("a I ! 7", FeatureMode::Counts).is_empty());
        assert!(featurize("the of and", FeatureMode::Counts).is_empty());
    }

    #[test]
    fn stopword_list_has_thirty_entries() {
        assert_eq!(stopwords().len(), 30);
    }

    #[test]
    fn tokenizer_splits_on_non_alphanumerics() {
        assert_eq!(
            tokenize("e-Resume.net: write IT résumés!"),
            vec!["resume", "net", "write", "résumés"]
        );
    }

    #[test]
    fn orthogonal_vectors_have_zero_cosine() {
        let a = featurize("apple banana", FeatureMode::Counts);
        let b = featurize("cherry durian", FeatureMode::Counts);
        assert_eq!(a.cosine(&b), 0.0);
        assert_eq!(a.cosine(&TermVector::default()), 0.0);
    }

    #[test]
    fn identical_vectors_have_unit_cosine() {
        let a = featurize("resume writing tips", FeatureMode::Counts);
        assert_abs_diff_eq!(a.cosine(&a), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn idf_downweights_common_terms() {
        let texts = ["resume writing", "resume jobs", "resume help"];
        let idf = IdfStats::from_texts(texts);
        assert_eq!(idf.doc_count(), 3);
        assert!(idf.idf("resume") < idf.idf("jobs"));
        // smooth idf: ln(4/4) + 1 for a term in every document
        assert_abs_diff_eq!(idf.idf("resume"), 1.0, epsilon = 1e-12);
        // unseen term gets the maximum weight
        assert_abs_diff_eq!(idf.idf("zebra"), (4.0f64).ln() + 1.0, epsilon = 1e-12);

        let v = featurize("resume jobs jobs", FeatureMode::TfIdf(&idf));
        assert_abs_diff_eq!(v.get("resume"), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            v.get("jobs"),
            2.0 * ((4.0f64 / 2.0).ln() + 1.0),
            epsilon = 1e-12
        );
    }
}
