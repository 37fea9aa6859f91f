//! Numeric expression tagging.
//!
//! Numbers are found lexically (digit tokens and number-word lexicon hits)
//! and tagged with the first matching rule in the order PERCENT, MONEY,
//! DATE, TIME, DURATION/SET, ORDINAL, NUMBER. Only NUMBER tokens with a
//! parseable integer value are candidate cardinalities.

pub mod lexical;
mod rules;

pub use rules::NumTagRuleSet;

use crate::corpus::{Document, NumTag, Sentence, Token};
use crate::{Error, Result};

const ORDINAL_SUFFIXES: [&str; 4] = ["st", "nd", "rd", "th"];

fn lower(token: &Token) -> String {
    token.surface.to_lowercase()
}

fn strip_ordinal_suffix(s: &str) -> Option<&str> {
    let (digits, suffix) = s.split_at(s.find(|c: char| !c.is_ascii_digit())?);
    (!digits.is_empty() && ORDINAL_SUFFIXES.contains(&suffix)).then_some(digits)
}

/// Integer value of a number surface, if it has one.
///
/// Handles digit strings (thousands separators allowed, ordinal suffix
/// stripped), number words and their hyphenated or spaced compositions
/// ("twenty-one", "two hundred and five"), ordinal words and count words
/// ("twins", "trilogy").
pub fn parse_number_word(surface: &str, rules: &NumTagRuleSet) -> Option<u64> {
    let s = surface.trim().to_lowercase();
    if s.is_empty() {
        return None;
    }
    if s.starts_with(|c: char| c.is_ascii_digit()) {
        let body = strip_ordinal_suffix(&s).unwrap_or(&s);
        let mut groups = body.split(',');
        let first = groups.next()?;
        let rest: Vec<&str> = groups.collect();
        if first.is_empty() || !first.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        if !rest.is_empty()
            && (first.len() > 3 || rest.iter().any(|g| g.len() != 3 || !g.bytes().all(|b| b.is_ascii_digit())))
        {
            return None;
        }
        return body.replace(',', "").parse().ok();
    }
    if let Some(&v) = rules.count_words.get(&s).or_else(|| rules.ordinal_words.get(&s)) {
        return Some(v);
    }

    let words: Vec<&str> = s
        .split(|c: char| c == '-' || c.is_whitespace())
        .filter(|w| !w.is_empty() && *w != "and")
        .collect();
    if words.is_empty() {
        return None;
    }
    let mut total: u64 = 0;
    let mut current: u64 = 0;
    for (i, w) in words.iter().enumerate() {
        if let Some(&v) = rules.number_words.get(*w) {
            if v == 100 {
                current = current.max(1).checked_mul(100)?;
            } else if v >= 1000 {
                total = total.checked_add(current.max(1).checked_mul(v)?)?;
                current = 0;
            } else {
                current = current.checked_add(v)?;
            }
        } else if i + 1 == words.len() && i > 0 {
            // compound ordinal, "twenty-first"
            let v = *rules.ordinal_words.get(*w)?;
            current = current.checked_add(v)?;
        } else {
            return None;
        }
    }
    total.checked_add(current)
}

fn is_numeric_token(token: &Token, rules: &NumTagRuleSet) -> bool {
    if token.surface.starts_with(|c: char| c.is_ascii_digit()) {
        return true;
    }
    if !token.is_word() {
        return false;
    }
    let l = lower(token);
    rules.is_numeric_word(&l) || (l.contains('-') && parse_number_word(&l, rules).is_some())
}

fn is_ordinal_surface(token: &Token, rules: &NumTagRuleSet) -> bool {
    let l = lower(token);
    if strip_ordinal_suffix(&l).is_some() || rules.ordinal_words.contains_key(&l) {
        return true;
    }
    l.rsplit_once('-')
        .is_some_and(|(_, last)| rules.ordinal_words.contains_key(last))
}

fn is_year(token: &Token, rules: &NumTagRuleSet) -> bool {
    let s = token.surface.strip_suffix('s').unwrap_or(&token.surface);
    s.len() == 4
        && s.bytes().all(|b| b.is_ascii_digit())
        && s.parse::<u64>()
            .is_ok_and(|y| (rules.year_range.0..=rules.year_range.1).contains(&y))
}

fn is_clock(token: &Token) -> bool {
    let Some((h, m)) = token.surface.split_once(':') else {
        return false;
    };
    (1..=2).contains(&h.len())
        && m.len() == 2
        && h.bytes().chain(m.bytes()).all(|b| b.is_ascii_digit())
}

fn is_month(token: Option<&Token>, rules: &NumTagRuleSet) -> bool {
    token.is_some_and(|t| {
        t.surface.starts_with(char::is_uppercase) && rules.month_names.contains(&lower(t))
    })
}

fn in_set(token: Option<&Token>, set: &std::collections::BTreeSet<String>) -> bool {
    token.is_some_and(|t| set.contains(&lower(t)) || set.contains(&t.lemma))
}

/// Tags every numeric token of `sentence`; other tokens are reset to NONE.
pub fn classify_numbers(sentence: &Sentence, rules: &NumTagRuleSet) -> Sentence {
    let mut out = sentence.clone();
    classify_in_place(&mut out, rules);
    out
}

pub fn classify_in_place(sentence: &mut Sentence, rules: &NumTagRuleSet) {
    let numeric: Vec<bool> = sentence
        .tokens
        .iter()
        .map(|t| is_numeric_token(t, rules))
        .collect();
    let mut tags = vec![NumTag::None; sentence.tokens.len()];
    let toks = &sentence.tokens;

    let mut a = 0;
    while a < toks.len() {
        if !numeric[a] {
            a += 1;
            continue;
        }
        let mut b = a;
        while b + 1 < toks.len() && numeric[b + 1] {
            b += 1;
        }
        let prev = a.checked_sub(1).and_then(|i| toks.get(i));
        let next = toks.get(b + 1);
        let next2 = toks.get(b + 2);

        let percent = in_set(next, &rules.percent_markers)
            || (next.is_some_and(|t| t.lemma == "per") && next2.is_some_and(|t| t.lemma == "cent"));
        let money = in_set(prev, &rules.currency_markers) || in_set(next, &rules.currency_markers);
        let month = is_month(prev, rules) || is_month(next, rules);
        let unit_at = if in_set(next, &rules.temporal_units) {
            Some(b + 1)
        } else if next.is_some_and(|t| !lexical::is_noun_like(t) && !numeric[b + 1])
            && in_set(next2, &rules.temporal_units)
        {
            Some(b + 2)
        } else {
            None
        };
        let set = in_set(prev, &rules.set_markers)
            || unit_at.is_some_and(|u| in_set(toks.get(u + 1), &rules.set_markers));

        for i in a..=b {
            let t = &toks[i];
            tags[i] = if percent {
                NumTag::Percent
            } else if money {
                NumTag::Money
            } else if is_year(t, rules)
                || month
                || (is_ordinal_surface(t, rules)
                    && next.is_some_and(|n| n.lemma == "century" || n.lemma == "millennium"))
            {
                NumTag::Date
            } else if is_clock(t) {
                NumTag::Time
            } else if unit_at.is_some() {
                if set {
                    NumTag::Set
                } else {
                    NumTag::Duration
                }
            } else if is_ordinal_surface(t, rules) {
                NumTag::Ordinal
            } else {
                NumTag::Number
            };
        }
        a = b + 1;
    }

    for (token, tag) in sentence.tokens.iter_mut().zip(tags) {
        token.num_tag = tag;
        token.num_value = match tag {
            NumTag::Number | NumTag::Ordinal => parse_number_word(&token.surface, rules),
            _ => None,
        };
    }
}

pub fn classify_document(doc: &mut Document, rules: &NumTagRuleSet) {
    for s in &mut doc.sentences {
        classify_in_place(s, rules);
    }
}

/// A NUMBER token with an integer value: the only tokens that may express a
/// relation cardinality.
pub fn is_candidate(token: &Token) -> bool {
    token.num_tag == NumTag::Number && token.num_value.is_some()
}

/// Whether the candidate at `index` quantifies a following noun.
///
/// Stands in for a `nummod` dependency edge: a noun-like token must follow,
/// optionally after one adjective, and "of" blocks the match ("one of the
/// reasons").
pub fn is_nummod(sentence: &Sentence, index: usize) -> Result<bool> {
    let token = sentence.tokens.get(index).ok_or(Error::IndexOutOfRange {
        index,
        len: sentence.tokens.len(),
    })?;
    Ok(is_candidate(token) && lexical::modified_noun(&sentence.tokens, index).is_some())
}

const NEVER_SKIPPABLE: &[&str] = &["again", "officially", "formally", "legally", "actually", "really"];
const NEGATIONS: &[&str] = &["not", "without"];
const POSSESSION_VERBS: &[&str] = &["have", "bear", "adopt", "father", "welcome", "raise", "expect"];

fn noun_follows(tokens: &[Token], index: usize) -> bool {
    tokens.get(index + 1).is_some_and(|t| t.lemma != "of") && lexical::modified_noun(tokens, index).is_some()
}

/// Phrases that state a count of zero or one without a number.
///
/// Returns `(anchor position, value)` pairs in position order. Zero frames:
/// "never VERB", "no NOUN", "not/without ... any NOUN". One frames:
/// "have/bear/adopt a NOUN", "gave birth to a NOUN", "only NOUN". The
/// sentence itself is not modified.
pub fn translate_zero_one(sentence: &Sentence) -> Vec<(usize, u64)> {
    let toks = &sentence.tokens;
    let mut out: Vec<(usize, u64)> = Vec::new();
    let push = |out: &mut Vec<(usize, u64)>, pos: usize, value: u64| {
        if !out.iter().any(|&(p, _)| p == pos) {
            out.push((pos, value));
        }
    };

    for (i, t) in toks.iter().enumerate() {
        let lemma = t.lemma.as_str();
        match lemma {
            "never" => {
                let mut j = i + 1;
                while toks.get(j).is_some_and(|n| NEVER_SKIPPABLE.contains(&n.lemma.as_str())) {
                    j += 1;
                }
                if toks.get(j).is_some_and(|n| {
                    n.is_word() && (lexical::is_verb(&n.lemma) || n.surface.to_lowercase().ends_with("ed"))
                }) {
                    push(&mut out, i, 0);
                } else if let Some(any) = find_any(toks, i) {
                    if noun_follows(toks, any) {
                        push(&mut out, i, 0);
                    }
                }
            }
            "no" => {
                if noun_follows(toks, i) {
                    push(&mut out, i, 0);
                }
            }
            l if NEGATIONS.contains(&l) => {
                if let Some(any) = find_any(toks, i) {
                    if noun_follows(toks, any) {
                        push(&mut out, i, 0);
                    }
                }
            }
            "a" | "an" => {
                let prev = i.checked_sub(1).map(|p| toks[p].lemma.as_str());
                let birth = prev == Some("to") && i >= 2 && toks[i - 2].lemma == "birth";
                if (prev.is_some_and(|p| POSSESSION_VERBS.contains(&p)) || birth) && noun_follows(toks, i) {
                    push(&mut out, i, 1);
                }
            }
            "only" => {
                let negated = i > 0 && toks[i - 1].lemma == "not";
                if !negated && noun_follows(toks, i) {
                    push(&mut out, i, 1);
                }
            }
            _ => {}
        }
    }
    out.sort_by_key(|&(p, _)| p);
    out
}

/// Position of "any" within three word tokens after `from`.
fn find_any(toks: &[Token], from: usize) -> Option<usize> {
    (from + 1..toks.len().min(from + 5))
        .take_while(|&j| toks[j].is_word())
        .find(|&j| toks[j].lemma == "any")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tagged(text: &str) -> Sentence {
        classify_numbers(&Sentence::new(text), &NumTagRuleSet::default())
    }

    fn tag_of(text: &str, surface: &str) -> (NumTag, Option<u64>) {
        let s = tagged(text);
        let t = s.tokens.iter().find(|t| t.surface == surface).unwrap();
        (t.num_tag, t.num_value)
    }

    #[test]
    fn paper_examples() {
        assert_eq!(tag_of("He married in 1984.", "1984"), (NumTag::Date, None));
        assert_eq!(tag_of("The county has 4 subdistricts, 17 towns", "4"), (NumTag::Number, Some(4)));
        assert_eq!(tag_of("The county has 4 subdistricts, 17 towns", "17"), (NumTag::Number, Some(17)));
        assert_eq!(tag_of("Angelina's fourth child", "fourth"), (NumTag::Ordinal, Some(4)));
    }

    #[test]
    fn rule_order() {
        assert_eq!(tag_of("It rose 75% in a year", "75").0, NumTag::Percent);
        assert_eq!(tag_of("It rose 75 percent", "75").0, NumTag::Percent);
        assert_eq!(tag_of("It rose 5 per cent", "5").0, NumTag::Percent);
        assert_eq!(tag_of("It cost $5 million", "5").0, NumTag::Money);
        assert_eq!(tag_of("It cost $5 million", "million").0, NumTag::Money);
        assert_eq!(tag_of("It cost 20 dollars", "20").0, NumTag::Money);
        assert_eq!(tag_of("born on July 4, 1950", "4").0, NumTag::Date);
        assert_eq!(tag_of("born on 4 July 1950", "4").0, NumTag::Date);
        assert_eq!(tag_of("in the 1980s", "1980s").0, NumTag::Date);
        assert_eq!(tag_of("in the 19th century", "19th").0, NumTag::Date);
        assert_eq!(tag_of("at 10:30 he left", "10:30").0, NumTag::Time);
        assert_eq!(tag_of("for two years", "two").0, NumTag::Duration);
        assert_eq!(tag_of("a 15-year career", "15").0, NumTag::Duration);
        assert_eq!(tag_of("every 4 years", "4").0, NumTag::Set);
        assert_eq!(tag_of("his 28th medal", "28th"), (NumTag::Ordinal, Some(28)));
        assert_eq!(tag_of("the twenty-first album", "twenty-first"), (NumTag::Ordinal, Some(21)));
        assert_eq!(tag_of("with 3.5 points", "3.5"), (NumTag::Number, None));
        assert_eq!(tag_of("He may 3 times", "3").0, NumTag::Number);
        assert_eq!(tag_of("he had twins", "twins"), (NumTag::Number, Some(2)));
    }

    #[test]
    fn number_words() {
        let r = NumTagRuleSet::default();
        assert_eq!(parse_number_word("two", &r), Some(2));
        assert_eq!(parse_number_word("Two", &r), Some(2));
        assert_eq!(parse_number_word("twenty-one", &r), Some(21));
        assert_eq!(parse_number_word("trilogy", &r), Some(3));
        assert_eq!(parse_number_word("twins", &r), Some(2));
        assert_eq!(parse_number_word("two hundred and five", &r), Some(205));
        assert_eq!(parse_number_word("three thousand four hundred", &r), Some(3400));
        assert_eq!(parse_number_word("hundred", &r), Some(100));
        assert_eq!(parse_number_word("1,250", &r), Some(1250));
        assert_eq!(parse_number_word("4th", &r), Some(4));
        assert_eq!(parse_number_word("3.5", &r), None);
        assert_eq!(parse_number_word("12,34", &r), None);
        assert_eq!(parse_number_word("children", &r), None);
        assert_eq!(parse_number_word("and", &r), None);
        assert_eq!(parse_number_word("", &r), None);
        assert_eq!(parse_number_word("99999999999999999999999", &r), None);
    }

    #[test]
    fn candidates() {
        let s = tagged("In 1984 she had 4 children and 75% of the vote.");
        let cands: Vec<&str> = s.tokens.iter().filter(|t| is_candidate(t)).map(|t| t.surface.as_str()).collect();
        assert_eq!(cands, ["4"]);
    }

    #[test]
    fn nummod_heuristic() {
        let s = tagged("He has two sons");
        assert!(is_nummod(&s, 2).unwrap());
        let s = tagged("one of the reasons");
        assert!(!is_nummod(&s, 0).unwrap());
        let s = tagged("The answer is 42");
        assert!(!is_nummod(&s, 3).unwrap());
        let s = tagged("three young daughters");
        assert!(is_nummod(&s, 0).unwrap());
        let s = tagged("three had children");
        assert!(!is_nummod(&s, 0).unwrap());
        assert!(!is_nummod(&s, 2).unwrap());
        assert!(matches!(is_nummod(&s, 3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    fn zero_one(text: &str) -> Vec<(String, u64)> {
        let s = tagged(text);
        translate_zero_one(&s)
            .into_iter()
            .map(|(p, v)| (s.tokens[p].surface.clone(), v))
            .collect()
    }

    #[test]
    fn zero_one_frames() {
        assert_eq!(zero_one("He never married"), [("never".to_string(), 0)]);
        assert_eq!(zero_one("They have a child"), [("a".to_string(), 1)]);
        assert_eq!(zero_one("They do not have any children"), [("not".to_string(), 0)]);
        assert_eq!(zero_one("They didn't have any children"), [("n't".to_string(), 0)]);
        assert_eq!(zero_one("The couple had no children."), [("no".to_string(), 0)]);
        assert_eq!(zero_one("Their only child, James, died."), [("only".to_string(), 1)]);
        assert_eq!(zero_one("He is a lawyer"), []);
        assert_eq!(zero_one("not only that"), []);
        assert_eq!(zero_one("No. 5 shirt"), []);
    }
}
