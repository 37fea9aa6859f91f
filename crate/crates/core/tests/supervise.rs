use std::collections::{BTreeSet, HashMap};

use cardex::corpus::{Document, KbStore};
use cardex::numtag::{classify_document, is_candidate, NumTagRuleSet};
use cardex::supervise::{
    annotate_corpus, filter_subjects, label_compositional, label_document, label_only_nummod,
    label_resilient, label_vanilla, Label, LabelSequence, SupervisionConfig, SupervisionMode,
};
use proptest::prelude::*;

fn doc(subject: &str, text: &str) -> Document {
    let mut d = Document::from_text(subject, "child", text);
    classify_document(&mut d, &NumTagRuleSet::default());
    d
}

fn kb(rows: &[(&str, u64)]) -> KbStore {
    let triples: Vec<(String, String, String)> = rows
        .iter()
        .flat_map(|&(s, n)| (0..n).map(move |j| (s.to_string(), "child".to_string(), format!("o{j}"))))
        .collect();
    KbStore::from_triples(triples.iter().map(|(s, p, o)| (s.as_str(), p.as_str(), o.as_str())))
}

/// CARD surfaces across all sentences.
fn card_words(d: &Document, seqs: &[LabelSequence]) -> Vec<String> {
    d.sentences
        .iter()
        .zip(seqs)
        .flat_map(|(s, l)| l.card_positions().into_iter().map(|i| s.tokens[i].surface.clone()).collect::<Vec<_>>())
        .collect()
}

#[test]
fn vanilla_examples() {
    let d = doc("a", "Born in 1984, she has three children.");
    assert_eq!(card_words(&d, &label_vanilla(&d, &kb(&[("a", 3)])).unwrap()), ["three"]);
    let d = doc("a", "In 1984 she had three children.");
    assert!(card_words(&d, &label_vanilla(&d, &kb(&[("a", 2)])).unwrap()).is_empty());
    assert!(label_vanilla(&d, &kb(&[("b", 2)])).is_err());
}

#[test]
fn nummod_examples() {
    let d = doc("a", "One of the reasons was money. She has two sons.");
    assert!(card_words(&d, &label_only_nummod(&d, &kb(&[("a", 1)])).unwrap()).is_empty());
    assert_eq!(card_words(&d, &label_only_nummod(&d, &kb(&[("a", 2)])).unwrap()), ["two"]);
    assert_eq!(card_words(&d, &label_vanilla(&d, &kb(&[("a", 1)])).unwrap()), ["One"]);
}

#[test]
fn resilient_examples() {
    let d = doc("a", "She has 1 dog, 2 cats and 5 horses.");
    assert_eq!(card_words(&d, &label_resilient(&d, &kb(&[("a", 2)])).unwrap()), ["2", "5"]);
    assert!(card_words(&d, &label_resilient(&d, &kb(&[("a", 6)])).unwrap()).is_empty());
}

#[test]
fn compositional_examples() {
    let d = doc("a", "They have two sons and one daughter.");
    assert_eq!(card_words(&d, &label_compositional(&d, &kb(&[("a", 3)])).unwrap()), ["two", "one"]);
    let d = doc("a", "They have two sons and one daughter, and four children from an earlier relationship.");
    assert_eq!(card_words(&d, &label_compositional(&d, &kb(&[("a", 7)])).unwrap()), ["two", "one", "four"]);
    // "together" is not a list connector, so the run stops before it
    let d = doc("a", "They have two sons and one daughter together; he has four children from an earlier relationship.");
    assert!(card_words(&d, &label_compositional(&d, &kb(&[("a", 7)])).unwrap()).is_empty());
    assert_eq!(card_words(&d, &label_compositional(&d, &kb(&[("a", 3)])).unwrap()), ["two", "one"]);
    let d = doc("a", "They have two sons and two daughters.");
    assert!(card_words(&d, &label_compositional(&d, &kb(&[("a", 3)])).unwrap()).is_empty());
    // a lone match and a summing run elsewhere are both kept
    let d = doc("a", "He has 3 children. In total 2 sons and 1 daughter.");
    assert_eq!(card_words(&d, &label_compositional(&d, &kb(&[("a", 3)])).unwrap()), ["3", "2", "1"]);
}

#[test]
fn filter_examples() {
    let store = kb(&[("a", 1), ("b", 3), ("c", 5)]);
    let all = filter_subjects(&store, &SupervisionConfig::default()).unwrap();
    assert_eq!(all.len(), 3);
    let cfg = SupervisionConfig { min_kb_count: 3, ..SupervisionConfig::default() };
    let kept: Vec<String> = filter_subjects(&store, &cfg).unwrap().into_iter().map(|k| k.0).collect();
    assert_eq!(kept, ["b", "c"]);
    let gold_cfg = SupervisionConfig { use_gold: true, ..SupervisionConfig::default() };
    assert!(filter_subjects(&store.clone().with_gold(HashMap::new()), &gold_cfg).unwrap().is_empty());
}

#[test]
fn annotate_skips_unknown_subjects_and_uses_gold() {
    let docs = [doc("a", "She has 4 children."), doc("z", "He has 2 children.")];
    let store = kb(&[("a", 3)]);
    let plain = annotate_corpus(&docs, &store, &SupervisionConfig::default()).unwrap();
    assert_eq!(plain.len(), 1);
    assert!(!plain[0].labels.contains(&Label::Card));

    let gold = HashMap::from([(("a".to_string(), "child".to_string()), 4)]);
    let cfg = SupervisionConfig { use_gold: true, ..SupervisionConfig::default() };
    let with_gold = annotate_corpus(&docs, &store.with_gold(gold), &cfg).unwrap();
    assert_eq!(with_gold.len(), 1);
    assert_eq!(with_gold[0].labels[2], Label::Card);
}

const WORDS: &[&str] = &[
    "he", "has", "two", "sons", "and", "one", "daughter", ",", "3", "children", "in", "1990", "of",
    "the", "reasons", "5", "%", "young", "4", "years", "won", "twins", ".", "$", "10",
];

fn text_strategy() -> impl Strategy<Value = String> {
    prop::collection::vec(
        prop::collection::vec(prop::sample::select(WORDS), 1..12).prop_map(|w| format!("{} .", w.join(" "))),
        1..4,
    )
    .prop_map(|s| s.join(" "))
}

fn card_sets(seqs: &[LabelSequence]) -> Vec<BTreeSet<usize>> {
    seqs.iter().map(|s| s.card_positions()).collect()
}

proptest! {
    #[test]
    fn lattice_holds(text in text_strategy(), count in 1u64..12) {
        let d = doc("a", &text);
        let store = kb(&[("a", count)]);
        let nummod = card_sets(&label_only_nummod(&d, &store).unwrap());
        let vanilla = card_sets(&label_vanilla(&d, &store).unwrap());
        let resilient = card_sets(&label_resilient(&d, &store).unwrap());
        let comp = card_sets(&label_compositional(&d, &store).unwrap());
        for i in 0..d.sentences.len() {
            prop_assert!(nummod[i].is_subset(&vanilla[i]));
            prop_assert!(vanilla[i].is_subset(&resilient[i]));
            prop_assert!(vanilla[i].is_subset(&comp[i]));
            for &p in resilient[i].iter().chain(&comp[i]) {
                prop_assert!(is_candidate(&d.sentences[i].tokens[p]));
            }
        }
    }

    #[test]
    fn vanilla_ignores_sentence_order(text in text_strategy(), count in 1u64..12) {
        let d = doc("a", &text);
        let store = kb(&[("a", count)]);
        let once = label_document(&d, &store, SupervisionMode::Vanilla).unwrap();
        prop_assert_eq!(&once, &label_document(&d, &store, SupervisionMode::Vanilla).unwrap());
        let mut reversed = d.clone();
        reversed.sentences.reverse();
        let mut rev_labels = label_vanilla(&reversed, &store).unwrap();
        rev_labels.reverse();
        prop_assert_eq!(once, rev_labels);
    }
}
