//! Feature templates.
//!
//! Per position: lemma unigrams at offsets -2..=2 (`U0`..`U4`), bigrams
//! `(-1,0)` and `(0,+1)` (`B1`, `B2`), trigrams `(-2,-1,0)`, `(-1,0,+1)` and
//! `(0,+1,+2)` (`T1`..`T3`), and the candidate and noun-modifier indicators
//! (`C`, `N`). Numeric tokens contribute the lemma [`NUM_PLACEHOLDER`].

use crate::corpus::{NumTag, Sentence};
use crate::numtag::{is_candidate, is_nummod};
use crate::{Error, Result};

pub const TEMPLATE_VERSION: u32 = 1;
pub const NUM_PLACEHOLDER: &str = "\u{27e8}NUM\u{27e9}";
pub const BOS: &str = "BOS";
pub const EOS: &str = "EOS";

/// Lemmas as seen by the templates.
pub fn feature_lemmas(sentence: &Sentence) -> Vec<&str> {
    sentence
        .tokens
        .iter()
        .map(|t| {
            if t.num_tag == NumTag::None {
                t.lemma.as_str()
            } else {
                NUM_PLACEHOLDER
            }
        })
        .collect()
}

fn window_features(sentence: &Sentence, lemmas: &[&str], index: usize) -> Vec<String> {
    let at = |offset: isize| -> &str {
        let j = index as isize + offset;
        if j < 0 {
            BOS
        } else if j as usize >= lemmas.len() {
            EOS
        } else {
            lemmas[j as usize]
        }
    };
    let candidate = is_candidate(&sentence.tokens[index]);
    let nummod = candidate && is_nummod(sentence, index).unwrap_or(false);
    vec![
        format!("U0={}", at(-2)),
        format!("U1={}", at(-1)),
        format!("U2={}", at(0)),
        format!("U3={}", at(1)),
        format!("U4={}", at(2)),
        format!("B1={}|{}", at(-1), at(0)),
        format!("B2={}|{}", at(0), at(1)),
        format!("T1={}|{}|{}", at(-2), at(-1), at(0)),
        format!("T2={}|{}|{}", at(-1), at(0), at(1)),
        format!("T3={}|{}|{}", at(0), at(1), at(2)),
        format!("C={}", u8::from(candidate)),
        format!("N={}", u8::from(nummod)),
    ]
}

/// Feature strings for the token at `index`.
pub fn extract_features(sentence: &Sentence, index: usize) -> Result<Vec<String>> {
    if index >= sentence.tokens.len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: sentence.tokens.len(),
        });
    }
    Ok(window_features(sentence, &feature_lemmas(sentence), index))
}

/// Feature strings for every position.
pub fn sentence_features(sentence: &Sentence) -> Vec<Vec<String>> {
    let lemmas = feature_lemmas(sentence);
    (0..sentence.tokens.len())
        .map(|i| window_features(sentence, &lemmas, i))
        .collect()
}
