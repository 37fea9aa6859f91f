use std::collections::BTreeMap;

use cardex::corpus::{NumTag, Sentence};
use cardex::numtag::{
    classify_numbers, is_candidate, is_nummod, parse_number_word, translate_zero_one, NumTagRuleSet,
};

const GOLD: &str = include_str!("../data/numtag_gold.tsv");

/// Hand-labeled sentence: `(surface, tag)` for each numeric token in order.
fn gold_sentences() -> Vec<(String, Vec<(String, NumTag)>)> {
    GOLD.lines()
        .map(|line| {
            let (text, labels) = line.split_once('\t').expect("tab");
            let labels = labels
                .split(' ')
                .map(|pair| {
                    let (surface, tag) = pair.rsplit_once('=').expect("surface=TAG");
                    (surface.to_string(), tag.parse().expect("tag"))
                })
                .collect();
            (text.to_string(), labels)
        })
        .collect()
}

/// Gold tag per token index; labels are matched to tokens left to right.
fn gold_by_index(sentence: &Sentence, labels: &[(String, NumTag)]) -> BTreeMap<usize, NumTag> {
    let mut out = BTreeMap::new();
    let mut from = 0;
    for (surface, tag) in labels {
        let i = (from..sentence.len())
            .find(|&i| &sentence.tokens[i].surface == surface)
            .unwrap_or_else(|| panic!("`{surface}` not a token of {:?}", sentence.text));
        out.insert(i, *tag);
        from = i + 1;
    }
    out
}

#[test]
fn agrees_with_hand_labels() {
    let rules = NumTagRuleSet::default();
    let sentences = gold_sentences();
    assert_eq!(sentences.len(), 200);
    let mut total = 0;
    let mut disagreements = Vec::new();
    for (text, labels) in &sentences {
        let s = classify_numbers(&Sentence::new(text.as_str()), &rules);
        let gold = gold_by_index(&s, labels);
        for (i, t) in s.tokens.iter().enumerate() {
            let want = gold.get(&i).copied().unwrap_or(NumTag::None);
            if want == NumTag::None && t.num_tag == NumTag::None {
                continue;
            }
            total += 1;
            if want != t.num_tag {
                disagreements.push(format!("{text:?}: `{}` gold {want}, got {}", t.surface, t.num_tag));
            }
        }
    }
    let agreement = 1.0 - disagreements.len() as f64 / total as f64;
    println!("agreement {agreement:.3} over {total} numeric tokens");
    for d in &disagreements {
        println!("  {d}");
    }
    assert!(agreement >= 0.90, "agreement {agreement:.3}");
}

fn tagged(text: &str) -> Sentence {
    classify_numbers(&Sentence::new(text), &NumTagRuleSet::default())
}

fn token<'a>(s: &'a Sentence, surface: &str) -> (usize, &'a cardex::corpus::Token) {
    s.tokens
        .iter()
        .enumerate()
        .find(|(_, t)| t.surface == surface)
        .unwrap_or_else(|| panic!("no `{surface}` in {:?}", s.text))
}

#[test]
fn tag_examples() {
    let s = tagged("They married in 1984.");
    assert_eq!(token(&s, "1984").1.num_tag, NumTag::Date);
    assert!(!is_candidate(token(&s, "1984").1));

    let s = tagged("The county has 4 subdistricts, 17 towns and 3 townships.");
    let (i, four) = token(&s, "4");
    assert_eq!((four.num_tag, four.num_value), (NumTag::Number, Some(4)));
    assert!(is_candidate(four));
    assert!(is_nummod(&s, i).unwrap());

    let s = tagged("It was Angelina's fourth child.");
    let fourth = token(&s, "fourth").1;
    assert_eq!((fourth.num_tag, fourth.num_value), (NumTag::Ordinal, Some(4)));

    let s = tagged("Support reached 75% in the polls.");
    assert_eq!(token(&s, "75").1.num_tag, NumTag::Percent);
    assert!(!is_candidate(token(&s, "75").1));
}

#[test]
fn number_words() {
    let rules = NumTagRuleSet::default();
    for (w, v) in [("two", Some(2)), ("twenty-one", Some(21)), ("trilogy", Some(3)), ("twins", Some(2)),
        ("2,500", Some(2500)), ("three-hundred", Some(300)), ("house", None)]
    {
        assert_eq!(parse_number_word(w, &rules), v, "{w}");
    }
}

#[test]
fn nummod_examples() {
    let s = tagged("He has two sons.");
    assert!(is_nummod(&s, token(&s, "two").0).unwrap());
    let s = tagged("One of the reasons was money.");
    assert!(!is_nummod(&s, 0).unwrap());
    let s = tagged("The answer was 42");
    assert!(!is_nummod(&s, 3).unwrap());
    assert!(is_nummod(&s, 99).is_err());
}

#[test]
fn zero_one_examples() {
    let s = tagged("He never married");
    assert_eq!(translate_zero_one(&s), vec![(1, 0)]);
    let s = tagged("They have a child");
    assert_eq!(translate_zero_one(&s), vec![(2, 1)]);
    let s = tagged("They do not have any children");
    assert_eq!(translate_zero_one(&s).iter().map(|p| p.1).collect::<Vec<_>>(), vec![0]);
    // the sentence itself is left alone
    let before = tagged("She had no siblings.");
    let after = before.clone();
    translate_zero_one(&after);
    assert_eq!(before, after);
}

mod props {
    use super::*;
    use proptest::prelude::*;

    const PIECES: &[&str] = &[
        "he", "has", "two", "sons", "in", "1990", "$", "5", "million", "%", "percent", "for", "3",
        "years", "every", "May", "the", "third", "10:30", "twins", "of", "one", "children", ",",
        "and", "century", "21st", "young",
    ];

    proptest! {
        #[test]
        fn tagging_invariants(words in prop::collection::vec(prop::sample::select(PIECES), 0..14)) {
            let rules = NumTagRuleSet::default();
            let s = classify_numbers(&Sentence::new(words.join(" ")), &rules);
            prop_assert_eq!(&s, &classify_numbers(&s, &rules));
            for (i, t) in s.tokens.iter().enumerate() {
                if is_candidate(t) {
                    prop_assert!(t.num_value.is_some());
                }
                if is_nummod(&s, i).unwrap() {
                    prop_assert!(is_candidate(t));
                }
                if t.num_tag == NumTag::None {
                    prop_assert!(t.num_value.is_none());
                }
            }
        }
    }
}
