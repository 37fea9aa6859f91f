//! Precision/recall/F1 against gold counts, and numeric tag census.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::corpus::{Document, NumTag, PairKey};
use crate::extract::Prediction;
use crate::numtag::{classify_numbers, lexical, NumTagRuleSet};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub predicate_id: String,
    pub n_subjects: usize,
    pub n_predicted: usize,
    pub n_correct: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl EvalReport {
    pub fn from_counts(predicate_id: impl Into<String>, n_subjects: usize, n_predicted: usize, n_correct: usize) -> Self {
        let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
        let precision = ratio(n_correct, n_predicted);
        let recall = ratio(n_correct, n_subjects);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        EvalReport {
            predicate_id: predicate_id.into(),
            n_subjects,
            n_predicted,
            n_correct,
            precision,
            recall,
            f1,
        }
    }
}

/// Scores predictions per predicate.
///
/// Every gold pair is an evaluated subject; a pair without a prediction is
/// an abstention, which lowers recall but not precision. A prediction is
/// correct only if its count equals the gold count.
pub fn evaluate(predictions: &[Prediction], gold: &HashMap<PairKey, u64>) -> Result<Vec<EvalReport>> {
    let mut seen: HashSet<PairKey> = HashSet::new();
    let mut tallies: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for (_, p) in gold.keys() {
        tallies.entry(p.as_str()).or_default().0 += 1;
    }
    for pred in predictions {
        let key = (pred.subject_id.clone(), pred.predicate_id.clone());
        let Some(&truth) = gold.get(&key) else {
            return Err(Error::UnknownPrediction {
                subject: key.0,
                predicate: key.1,
            });
        };
        if !seen.insert(key.clone()) {
            return Err(Error::DuplicatePrediction {
                subject: key.0,
                predicate: key.1,
            });
        }
        let t = tallies.get_mut(pred.predicate_id.as_str()).expect("gold predicate");
        t.1 += 1;
        if pred.count == truth {
            t.2 += 1;
        }
    }
    Ok(tallies
        .into_iter()
        .map(|(p, (s, n, c))| EvalReport::from_counts(p, s, n, c))
        .collect())
}

pub fn format_reports(reports: &[EvalReport]) -> String {
    let width = reports.iter().map(|r| r.predicate_id.len()).max().unwrap_or(0).max(9);
    let mut out = format!(
        "{:<width$}  {:>8}  {:>9}  {:>7}  {:>5}  {:>5}  {:>5}\n",
        "predicate", "subjects", "predicted", "correct", "P", "R", "F1"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<width$}  {:>8}  {:>9}  {:>7}  {:>5.3}  {:>5.3}  {:>5.3}",
            r.predicate_id, r.n_subjects, r.n_predicted, r.n_correct, r.precision, r.recall, r.f1
        );
    }
    out
}

/// Distribution of numeric tags over a corpus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TagCensus {
    pub total: usize,
    pub counts: BTreeMap<NumTag, usize>,
    /// Relative frequencies; sum to 1 when `total > 0`, empty otherwise.
    pub frequencies: BTreeMap<NumTag, f64>,
    /// Lemmas of nouns quantified by NUMBER tokens, most frequent first.
    pub top_nouns: Vec<(String, usize)>,
}

pub const TOP_NOUNS: usize = 10;

/// Tags every sentence and counts numeric tokens per tag.
pub fn analyze_corpus(docs: &[Document], rules: &NumTagRuleSet) -> TagCensus {
    let mut counts: BTreeMap<NumTag, usize> = BTreeMap::new();
    let mut nouns: HashMap<String, usize> = HashMap::new();
    for doc in docs {
        for sentence in &doc.sentences {
            let s = classify_numbers(sentence, rules);
            for (i, t) in s.tokens.iter().enumerate() {
                if t.num_tag == NumTag::None {
                    continue;
                }
                *counts.entry(t.num_tag).or_default() += 1;
                if t.num_tag == NumTag::Number {
                    if let Some(j) = lexical::modified_noun(&s.tokens, i) {
                        *nouns.entry(s.tokens[j].lemma.clone()).or_default() += 1;
                    }
                }
            }
        }
    }
    let total: usize = counts.values().sum();
    let frequencies = counts
        .iter()
        .map(|(&t, &c)| (t, c as f64 / total as f64))
        .collect();
    let mut top_nouns: Vec<(String, usize)> = nouns.into_iter().collect();
    top_nouns.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    top_nouns.truncate(TOP_NOUNS);
    TagCensus {
        total,
        counts,
        frequencies,
        top_nouns,
    }
}

pub fn format_census(census: &TagCensus) -> String {
    let mut out = format!("{:<10}  {:>7}  {:>9}\n", "tag", "count", "frequency");
    for (tag, count) in &census.counts {
        let _ = writeln!(out, "{:<10}  {:>7}  {:>8.2}%", tag.as_str(), count, 100.0 * census.frequencies[tag]);
    }
    let _ = writeln!(out, "{:<10}  {:>7}", "total", census.total);
    if !census.top_nouns.is_empty() {
        out.push_str("\nnouns quantified by NUMBER:\n");
        for (noun, n) in &census.top_nouns {
            let _ = writeln!(out, "  {noun:<20} {n}");
        }
    }
    out
}
