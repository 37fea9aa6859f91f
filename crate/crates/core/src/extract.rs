//! From per-token CARD marginals to one count per (subject, predicate).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::Document;
use crate::crf::CrfModel;
use crate::numtag::{is_candidate, translate_zero_one};
use crate::supervise::candidate_runs;
use crate::{Error, Result};

/// Marginals within this fraction of the threshold count as equal to it, so
/// a marginal that is the threshold up to rounding is not predicted.
pub const MARGINAL_EPS: f64 = 1e-12;

/// Fixed confidence of a zero/one translation.
pub const TRANSLATED_CONFIDENCE: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PredictionMode {
    Single,
    Sum,
    Translated,
    Baseline,
}

/// Where a prediction came from: a sentence and a half-open token span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub sentence: usize,
    pub span: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    #[serde(rename = "subject")]
    pub subject_id: String,
    #[serde(rename = "predicate")]
    pub predicate_id: String,
    pub count: u64,
    pub confidence: f64,
    pub mode: PredictionMode,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Consolidation {
    /// Highest confidence wins; ties go to the smaller count.
    #[default]
    MaxMarginal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PredictConfig {
    /// A CARD marginal must be strictly above this.
    pub marginal_threshold: f64,
    pub enable_compositional: bool,
    pub enable_zero_one: bool,
    pub consolidation: Consolidation,
}

impl Default for PredictConfig {
    fn default() -> Self {
        PredictConfig {
            marginal_threshold: 0.1,
            enable_compositional: false,
            enable_zero_one: false,
            consolidation: Consolidation::MaxMarginal,
        }
    }
}

impl PredictConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..1.0).contains(&self.marginal_threshold) {
            return Err(Error::Config(format!(
                "threshold must be in [0, 1), got {}",
                self.marginal_threshold
            )));
        }
        Ok(())
    }

    pub fn qualifies(&self, marginal: f64) -> bool {
        marginal - self.marginal_threshold > MARGINAL_EPS * self.marginal_threshold
    }
}

/// CARD marginal of every token, per sentence.
pub fn document_marginals(model: &CrfModel, doc: &Document) -> Vec<Vec<f64>> {
    doc.sentences.iter().map(|s| model.card_marginals(s)).collect()
}

fn prediction(doc: &Document, count: u64, confidence: f64, mode: PredictionMode, sentence: usize, span: [usize; 2]) -> Prediction {
    Prediction {
        subject_id: doc.subject_id.clone(),
        predicate_id: doc.predicate_id.clone(),
        count,
        confidence,
        mode,
        evidence: Evidence { sentence, span },
    }
}

/// The qualifying candidate with the highest marginal.
pub fn predict_from_marginals(doc: &Document, marginals: &[Vec<f64>], config: &PredictConfig) -> Option<Prediction> {
    let mut best: Option<(usize, usize, f64)> = None;
    for (si, (s, ms)) in doc.sentences.iter().zip(marginals).enumerate() {
        for (ti, (t, &m)) in s.tokens.iter().zip(ms).enumerate() {
            if is_candidate(t) && config.qualifies(m) && best.is_none_or(|(_, _, b)| m > b) {
                best = Some((si, ti, m));
            }
        }
    }
    best.map(|(si, ti, m)| {
        let count = doc.sentences[si].tokens[ti].num_value.expect("candidates have values");
        prediction(doc, count, m, PredictionMode::Single, si, [ti, ti + 1])
    })
}

/// Picks the candidate number with the highest CARD marginal above the
/// threshold; equal marginals go to the earliest position. `None` means
/// abstention.
pub fn predict_count(model: &CrfModel, doc: &Document, config: &PredictConfig) -> Option<Prediction> {
    predict_from_marginals(doc, &document_marginals(model, doc), config)
}

/// Like [`predict_from_marginals`], but lists of qualifying candidates are
/// summed.
///
/// Each maximal run of qualifying candidates inside one sentence is one
/// answer whose count is the sum of its members and whose confidence is its
/// lowest member marginal. A run of one is a plain single answer.
pub fn compositional_from_marginals(
    doc: &Document,
    marginals: &[Vec<f64>],
    config: &PredictConfig,
) -> Option<Prediction> {
    let mut best: Option<Prediction> = None;
    for (si, (s, ms)) in doc.sentences.iter().zip(marginals).enumerate() {
        for run in candidate_runs(s, |i| config.qualifies(ms[i])) {
            let confidence = run.iter().map(|&i| ms[i]).fold(f64::INFINITY, f64::min);
            let count = run
                .iter()
                .map(|&i| s.tokens[i].num_value.unwrap_or(0))
                .fold(0u64, u64::saturating_add);
            let mode = if run.len() > 1 {
                PredictionMode::Sum
            } else {
                PredictionMode::Single
            };
            if best.as_ref().is_none_or(|b| confidence > b.confidence) {
                let span = [run[0], run[run.len() - 1] + 1];
                best = Some(prediction(doc, count, confidence, mode, si, span));
            }
        }
    }
    best
}

pub fn predict_compositional(model: &CrfModel, doc: &Document, config: &PredictConfig) -> Option<Prediction> {
    compositional_from_marginals(doc, &document_marginals(model, doc), config)
}

/// Reduces competing predictions for one pair to a single answer.
pub fn consolidate(predictions: &[Prediction], config: &PredictConfig) -> Option<Prediction> {
    match config.consolidation {
        Consolidation::MaxMarginal => predictions
            .iter()
            .fold(None::<&Prediction>, |best, p| match best {
                Some(b) if b.confidence > p.confidence => Some(b),
                Some(b) if b.confidence == p.confidence && b.count <= p.count => Some(b),
                _ => Some(p),
            })
            .cloned(),
    }
}

/// Count stated by a zero/one phrase ("He never married", "their only
/// child"), consolidated over the document.
pub fn apply_zero_one(doc: &Document, config: &PredictConfig) -> Option<Prediction> {
    let found: Vec<Prediction> = doc
        .sentences
        .iter()
        .enumerate()
        .flat_map(|(si, s)| {
            translate_zero_one(s).into_iter().map(move |(pos, value)| {
                prediction(doc, value, TRANSLATED_CONFIDENCE, PredictionMode::Translated, si, [pos, pos + 1])
            })
        })
        .collect();
    consolidate(&found, config)
}

/// Full prediction for one document: the CRF answer (compositional if
/// enabled), falling back to zero/one translation only on abstention.
pub fn predict_document(model: &CrfModel, doc: &Document, config: &PredictConfig) -> Option<Prediction> {
    let marginals = document_marginals(model, doc);
    let crf = if config.enable_compositional {
        compositional_from_marginals(doc, &marginals, config)
    } else {
        predict_from_marginals(doc, &marginals, config)
    };
    crf.or_else(|| {
        if config.enable_zero_one {
            apply_zero_one(doc, config)
        } else {
            None
        }
    })
}

/// Uniform draw from the document's candidate numbers using `rng`.
pub fn baseline_with_rng(doc: &Document, rng: &mut impl Rng) -> Option<Prediction> {
    let pool: Vec<(usize, usize, u64)> = doc
        .sentences
        .iter()
        .enumerate()
        .flat_map(|(si, s)| {
            s.tokens
                .iter()
                .enumerate()
                .filter(|(_, t)| is_candidate(t))
                .map(move |(ti, t)| (si, ti, t.num_value.unwrap_or(0)))
        })
        .collect();
    if pool.is_empty() {
        return None;
    }
    let (si, ti, value) = pool[rng.gen_range(0..pool.len())];
    Some(prediction(doc, value, 1.0 / pool.len() as f64, PredictionMode::Baseline, si, [ti, ti + 1]))
}

/// Random-number baseline with its own seeded generator.
pub fn baseline_random(doc: &Document, seed: u64) -> Option<Prediction> {
    baseline_with_rng(doc, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Baseline over a corpus from one generator, in document order.
pub fn baseline_corpus(docs: &[Document], seed: u64) -> Vec<Prediction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    docs.iter().filter_map(|d| baseline_with_rng(d, &mut rng)).collect()
}
