//! Distant supervision: CARD/O labels from knowledge-base counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{Document, KbStore, PairKey, Sentence};
use crate::numtag::{is_candidate, is_nummod, lexical};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    #[serde(rename = "CARD")]
    Card,
    #[serde(rename = "O")]
    O,
}

impl Label {
    /// Column in weight tables.
    pub fn index(self) -> usize {
        match self {
            Label::Card => 0,
            Label::O => 1,
        }
    }

    pub fn from_index(i: usize) -> Label {
        if i == 0 {
            Label::Card
        } else {
            Label::O
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Card => "CARD",
            Label::O => "O",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SupervisionMode {
    /// Candidates equal to the count.
    Vanilla,
    /// Vanilla, restricted to candidates that modify a noun.
    OnlyNummod,
    /// Candidates equal to or above the count, for KBs that undercount.
    Resilient,
    /// Candidates equal to the count, plus lists of candidates summing to it.
    Compositional,
}

impl FromStr for SupervisionMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "vanilla" => Ok(SupervisionMode::Vanilla),
            "nummod" | "only-nummod" | "only_nummod" => Ok(SupervisionMode::OnlyNummod),
            "resilient" => Ok(SupervisionMode::Resilient),
            "comp" | "compositional" => Ok(SupervisionMode::Compositional),
            other => Err(format!("unknown supervision mode `{other}`")),
        }
    }
}

impl fmt::Display for SupervisionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SupervisionMode::Vanilla => "vanilla",
            SupervisionMode::OnlyNummod => "nummod",
            SupervisionMode::Resilient => "resilient",
            SupervisionMode::Compositional => "comp",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSequence {
    pub labels: Vec<Label>,
    pub mode: SupervisionMode,
}

impl LabelSequence {
    pub fn card_positions(&self) -> BTreeSet<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Label::Card)
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupervisionConfig {
    pub mode: SupervisionMode,
    pub min_kb_count: u64,
    pub use_gold: bool,
}

impl Default for SupervisionConfig {
    fn default() -> Self {
        SupervisionConfig {
            mode: SupervisionMode::Vanilla,
            min_kb_count: 1,
            use_gold: false,
        }
    }
}

/// Maximal runs of selected candidate positions that form one list.
///
/// Two consecutive selected candidates join a run when every token between
/// them is a list connector: a comma, "and", a noun-like word or an
/// adjective. Any other token, including an unselected number, ends the run.
pub fn candidate_runs(sentence: &Sentence, selected: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let toks = &sentence.tokens;
    let mut runs: Vec<Vec<usize>> = Vec::new();
    let mut last: Option<usize> = None;
    for i in 0..toks.len() {
        if !(is_candidate(&toks[i]) && selected(i)) {
            continue;
        }
        let joined = last.is_some_and(|prev| {
            (prev + 1..i).all(|j| lexical::is_list_connector(&toks[j]))
        });
        match runs.last_mut() {
            Some(run) if joined => run.push(i),
            _ => runs.push(vec![i]),
        }
        last = Some(i);
    }
    runs
}

/// Labels one sentence against a known count.
pub fn label_sentence(sentence: &Sentence, count: u64, mode: SupervisionMode) -> Vec<Label> {
    let toks = &sentence.tokens;
    let mut labels = vec![Label::O; toks.len()];
    if count == 0 {
        return labels;
    }
    let value = |i: usize| toks[i].num_value.unwrap_or(0);
    for (i, t) in toks.iter().enumerate() {
        if !is_candidate(t) {
            continue;
        }
        let hit = match mode {
            SupervisionMode::Vanilla | SupervisionMode::Compositional => value(i) == count,
            SupervisionMode::OnlyNummod => {
                value(i) == count && is_nummod(sentence, i).expect("index in range")
            }
            SupervisionMode::Resilient => value(i) >= count,
        };
        if hit {
            labels[i] = Label::Card;
        }
    }
    if mode == SupervisionMode::Compositional {
        for run in candidate_runs(sentence, |_| true) {
            let sum = run.iter().try_fold(0u64, |acc, &i| acc.checked_add(value(i)));
            if sum == Some(count) {
                for i in run {
                    labels[i] = Label::Card;
                }
            }
        }
    }
    labels
}

/// Labels every sentence of `doc` against `count`.
pub fn label_with_count(doc: &Document, count: u64, mode: SupervisionMode) -> Vec<LabelSequence> {
    doc.sentences
        .iter()
        .map(|s| LabelSequence {
            labels: label_sentence(s, count, mode),
            mode,
        })
        .collect()
}

pub fn label_document(doc: &Document, kb: &KbStore, mode: SupervisionMode) -> Result<Vec<LabelSequence>> {
    let count = kb
        .count(&doc.subject_id, &doc.predicate_id)
        .ok_or_else(|| Error::MissingCount {
            subject: doc.subject_id.clone(),
            predicate: doc.predicate_id.clone(),
        })?;
    Ok(label_with_count(doc, count, mode))
}

pub fn label_vanilla(doc: &Document, kb: &KbStore) -> Result<Vec<LabelSequence>> {
    label_document(doc, kb, SupervisionMode::Vanilla)
}

pub fn label_only_nummod(doc: &Document, kb: &KbStore) -> Result<Vec<LabelSequence>> {
    label_document(doc, kb, SupervisionMode::OnlyNummod)
}

pub fn label_resilient(doc: &Document, kb: &KbStore) -> Result<Vec<LabelSequence>> {
    label_document(doc, kb, SupervisionMode::Resilient)
}

pub fn label_compositional(doc: &Document, kb: &KbStore) -> Result<Vec<LabelSequence>> {
    label_document(doc, kb, SupervisionMode::Compositional)
}

/// Pairs kept for training and the count each is labeled against.
///
/// Without `use_gold` these are the KB pairs with count at least
/// `min_kb_count`. With it, the gold pairs whose gold count reaches the
/// same bound, labeled with the gold count.
pub fn effective_counts(kb: &KbStore, config: &SupervisionConfig) -> Result<BTreeMap<PairKey, u64>> {
    if config.min_kb_count < 1 {
        return Err(Error::Config("min_kb_count must be at least 1".into()));
    }
    let source = if config.use_gold {
        match &kb.gold_counts {
            Some(gold) => gold,
            None => return Ok(BTreeMap::new()),
        }
    } else {
        &kb.counts
    };
    Ok(source
        .iter()
        .filter(|(_, &c)| c >= config.min_kb_count)
        .map(|(k, &c)| (k.clone(), c))
        .collect())
}

pub fn filter_subjects(kb: &KbStore, config: &SupervisionConfig) -> Result<BTreeSet<PairKey>> {
    Ok(effective_counts(kb, config)?.into_keys().collect())
}

/// One labeled sentence, as written by `cardex annotate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedSentence {
    pub subject: String,
    pub predicate: String,
    pub sentence_idx: usize,
    pub text: String,
    pub labels: Vec<Label>,
}

/// Labels a corpus. Documents outside the filtered pair set are skipped
/// with a warning.
pub fn annotate_corpus(
    docs: &[Document],
    kb: &KbStore,
    config: &SupervisionConfig,
) -> Result<Vec<AnnotatedSentence>> {
    let counts = effective_counts(kb, config)?;
    let mut out = Vec::new();
    for doc in docs {
        let Some(&count) = counts.get(&doc.key()) else {
            log::warn!(
                "skipping ({}, {}): no usable count",
                doc.subject_id,
                doc.predicate_id
            );
            continue;
        };
        for (idx, (sentence, seq)) in doc
            .sentences
            .iter()
            .zip(label_with_count(doc, count, config.mode))
            .enumerate()
        {
            out.push(AnnotatedSentence {
                subject: doc.subject_id.clone(),
                predicate: doc.predicate_id.clone(),
                sentence_idx: idx,
                text: sentence.text.clone(),
                labels: seq.labels,
            });
        }
    }
    Ok(out)
}
