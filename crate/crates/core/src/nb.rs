//! Multinomial naive Bayes text classifier with Laplace smoothing.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::text::{featurize, FeatureMode};
use crate::topic::OdpTopic;

/// One labeled training document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusDoc {
    pub topic: OdpTopic,
    pub text: String,
}

impl CorpusDoc {
    pub fn new(topic: OdpTopic, text: impl Into<String>) -> Self {
        CorpusDoc {
            topic,
            text: text.into(),
        }
    }
}

/// A trained classifier: log-priors and Laplace-smoothed per-term
/// conditional log-probabilities over the training vocabulary.
///
/// Terms outside the vocabulary are ignored at classification time.
#[derive(Debug, Clone)]
pub struct NbModel {
    /// Topics present in the corpus, in canonical order.
    topics: Vec<OdpTopic>,
    log_prior: Vec<f64>,
    vocab: BTreeMap<String, usize>,
    /// `log_cond[topic_index][term_index]`
    log_cond: Vec<Vec<f64>>,
}

/// Classification outcome: the winning topic and the log-posterior gap
/// to the runner-up (infinite when only one topic exists).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub topic: OdpTopic,
    pub margin: f64,
}

impl NbModel {
    /// Trains on the corpus with Laplace smoothing (α = 1).
    ///
    /// The result depends only on per-topic term counts, so document
    /// order and duplication ratios leave the conditionals unchanged.
    pub fn train(corpus: &[CorpusDoc]) -> Result<Self> {
        if corpus.is_empty() {
            return Err(Error::InvalidInput(
                "cannot train a classifier on an empty corpus".into(),
            ));
        }

        let mut vocab: BTreeMap<String, usize> = BTreeMap::new();
        let mut doc_counts: BTreeMap<OdpTopic, usize> = BTreeMap::new();
        let mut term_counts: BTreeMap<OdpTopic, BTreeMap<usize, u64>> = BTreeMap::new();

        for doc in corpus {
            *doc_counts.entry(doc.topic).or_insert(0) += 1;
            let counts = term_counts.entry(doc.topic).or_default();
            for (term, weight) in featurize(&doc.text, FeatureMode::Counts).iter() {
                let next = vocab.len();
                let index = *vocab.entry(term.to_owned()).or_insert(next);
                *counts.entry(index).or_insert(0) += weight as u64;
            }
        }

        let topics: Vec<OdpTopic> = doc_counts.keys().copied().collect();
        let total_docs = corpus.len() as f64;
        let vocab_size = vocab.len() as f64;

        let log_prior = topics
            .iter()
            .map(|t| (doc_counts[t] as f64 / total_docs).ln())
            .collect();
        let log_cond = topics
            .iter()
            .map(|t| {
                let counts = &term_counts[t];
                let total: u64 = counts.values().sum();
                let denom = total as f64 + vocab_size;
                (0..vocab.len())
                    .map(|i| {
                        let c = counts.get(&i).copied().unwrap_or(0);
                        ((c as f64 + 1.0) / denom).ln()
                    })
                    .collect()
            })
            .collect();

        Ok(NbModel {
            topics,
            log_prior,
            vocab,
            log_cond,
        })
    }

    /// Topics the model can assign, in canonical order.
    pub fn topics(&self) -> &[OdpTopic] {
        &self.topics
    }

    /// Training vocabulary in lexicographic order.
    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.vocab.keys().map(String::as_str)
    }

    /// Conditional log-probability of `term` under `topic`, if both are known.
    pub fn term_log_prob(&self, topic: OdpTopic, term: &str) -> Option<f64> {
        let t = self.topics.iter().position(|&x| x == topic)?;
        let i = *self.vocab.get(term)?;
        Some(self.log_cond[t][i])
    }

    /// Unnormalized log-posterior per topic:
    /// log-prior plus Σ count(term) × conditional log-probability over
    /// in-vocabulary terms. Empty text degenerates to the priors.
    pub fn log_posteriors(&self, text: &str) -> Vec<(OdpTopic, f64)> {
        let vector = featurize(text, FeatureMode::Counts);
        self.topics
            .iter()
            .zip(&self.log_prior)
            .zip(&self.log_cond)
            .map(|((&topic, &prior), cond)| {
                let likelihood: f64 = vector
                    .iter()
                    .filter_map(|(term, count)| self.vocab.get(term).map(|&i| count * cond[i]))
                    .sum();
                (topic, prior + likelihood)
            })
            .collect()
    }

    /// Assigns the argmax topic. Score ties go to the earlier topic in
    /// canonical order, so repeated runs agree.
    pub fn classify(&self, text: &str) -> Classification {
        let posteriors = self.log_posteriors(text);
        let (best_index, &(topic, best)) = posteriors
            .iter()
            .enumerate()
            .max_by(|(ia, (_, a)), (ib, (_, b))| {
                a.partial_cmp(b)
                    .expect("log-posteriors are never NaN")
                    // prefer the earlier topic on equal scores
                    .then(ib.cmp(ia))
            })
            .expect("model always has at least one topic");
        let runner_up = posteriors
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != best_index)
            .map(|(_, (_, score))| *score)
            .fold(f64::NEG_INFINITY, f64::max);
        Classification {
            topic,
            margin: best - runner_up,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn toy_corpus() -> Vec<CorpusDoc> {
        vec![
            CorpusDoc::new(OdpTopic::Arts, "paint brush paint"),
            CorpusDoc::new(OdpTopic::Arts, "gallery paint"),
            CorpusDoc::new(OdpTopic::Science, "atom physics"),
            CorpusDoc::new(OdpTopic::Science, "atom atom lab"),
        ]
    }

    #[test]
    fn empty_corpus_is_rejected() {
        assert!(NbModel::train(&[]).is_err());
    }

    #[test]
    fn recovers_training_labels_on_separable_corpus() {
        let corpus: Vec<CorpusDoc> = OdpTopic::ALL
            .iter()
            .map(|&t| CorpusDoc::new(t, format!("{} {} words", t.name(), t.name())))
            .collect();
        let model = NbModel::train(&corpus).unwrap();
        assert_eq!(model.topics().len(), 15);
        for doc in &corpus {
            assert_eq!(model.classify(&doc.text).topic, doc.topic);
        }
    }

    #[test]
    fn hand_computed_posteriors() {
        // vocabulary: atom, brush, gallery, lab, paint, physics (6 terms)
        // arts total terms 5, science total terms 5, priors 1/2 each
        // score("paint atom paint" | Arts)    = ln(1/2) + 2 ln(4/11) + ln(1/11)
        // score("paint atom paint" | Science) = ln(1/2) + 2 ln(1/11) + ln(4/11)
        let model = NbModel::train(&toy_corpus()).unwrap();
        assert_eq!(model.vocabulary().count(), 6);

        let posteriors = model.log_posteriors("paint atom paint");
        assert_eq!(posteriors.len(), 2);
        assert_eq!(posteriors[0].0, OdpTopic::Arts);
        assert_abs_diff_eq!(posteriors[0].1, -5.114244276715, epsilon = 1e-9);
        assert_eq!(posteriors[1].0, OdpTopic::Science);
        assert_abs_diff_eq!(posteriors[1].1, -6.500538637835, epsilon = 1e-9);

        let result = model.classify("paint atom paint");
        assert_eq!(result.topic, OdpTopic::Arts);
        assert_abs_diff_eq!(result.margin, 1.386294361120, epsilon = 1e-9);
    }

    #[test]
    fn duplicated_corpus_keeps_priors_and_decisions() {
        // Laplace smoothing shifts the conditionals when counts double
        // ((2c+1)/(2T+V) vs (c+1)/(T+V)), but priors and the decisions
        // on the training documents stay put.
        let corpus = toy_corpus();
        let doubled: Vec<CorpusDoc> = corpus.iter().chain(corpus.iter()).cloned().collect();
        let base = NbModel::train(&corpus).unwrap();
        let twice = NbModel::train(&doubled).unwrap();
        assert_eq!(base.topics(), twice.topics());
        assert_eq!(
            base.vocabulary().collect::<Vec<_>>(),
            twice.vocabulary().collect::<Vec<_>>()
        );
        for doc in &corpus {
            assert_eq!(
                base.classify(&doc.text).topic,
                twice.classify(&doc.text).topic
            );
        }
        // priors come from document ratios, which doubling preserves
        let prior_gap = |m: &NbModel, text: &str| {
            let p = m.log_posteriors(text);
            p[0].1 - p[1].1
        };
        assert_abs_diff_eq!(prior_gap(&base, ""), prior_gap(&twice, ""), epsilon = 1e-12);
    }

    #[test]
    fn conditionals_normalize_per_topic() {
        let model = NbModel::train(&toy_corpus()).unwrap();
        for &topic in model.topics() {
            let total: f64 = model
                .vocabulary()
                .map(|term| model.term_log_prob(topic, term).unwrap().exp())
                .sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn empty_text_falls_back_to_priors() {
        let mut corpus = toy_corpus();
        corpus.push(CorpusDoc::new(OdpTopic::Science, "quark lab"));
        let model = NbModel::train(&corpus).unwrap();
        // Science now has the larger prior (3 docs vs 2)
        assert_eq!(model.classify("").topic, OdpTopic::Science);

        // equal priors tie on empty text; the canonical-order topic wins
        let model = NbModel::train(&toy_corpus()).unwrap();
        assert_eq!(model.classify("").topic, OdpTopic::Arts);
    }

    #[test]
    fn single_topic_margin_is_infinite() {
        let model = NbModel::train(&[CorpusDoc::new(OdpTopic::Home, "garden patio")]).unwrap();
        let result = model.classify("garden");
        assert_eq!(result.topic, OdpTopic::Home);
        assert!(result.margin.is_infinite());
    }

    #[test]
    fn classification_is_deterministic() {
        let model = NbModel::train(&toy_corpus()).unwrap();
        let a = model.classify("paint atom");
        let b = model.classify("paint atom");
        assert_eq!(a, b);
    }
}
