//! Rule-based tokenizer and sentence splitter.

use super::lemma::lemmatize;
use super::{NumTag, Token};

const ORDINAL_SUFFIXES: [&str; 4] = ["st", "nd", "rd", "th"];

/// Abbreviations whose trailing period never ends a sentence.
const ABBREVIATIONS: &[&str] = &[
    "Mr", "Mrs", "Ms", "Dr", "St", "No", "Jr", "Sr", "Prof", "Gen", "Col", "Lt", "Sgt", "Capt",
    "Rev", "Hon", "Mt", "Ft", "Gov", "Sen", "Rep", "Inc", "Ltd", "Co", "Corp", "Bros", "vs",
    "etc", "approx", "ca", "cf", "Jan", "Feb", "Mar", "Apr", "Jun", "Jul", "Aug", "Sep", "Sept",
    "Oct", "Nov", "Dec", "Vol", "Ch", "Fig", "Nos",
];

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Splits `text` into tokens with byte offsets and lemmas.
///
/// Whitespace separates tokens and every punctuation or symbol character is
/// its own token. Digit groups keep internal `,` `.` `:` separators ("1,000",
/// "3.5", "10:30"), digits keep an ordinal suffix ("4th") and four-digit
/// decades keep a plural `s` ("1980s"). Words keep internal hyphens
/// ("twenty-one") and split off clitics ("Angelina's" -> "Angelina" "'s",
/// "don't" -> "do" "n't").
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let end_of = |k: usize| chars.get(k).map_or(text.len(), |&(b, _)| b);
    let mut spans: Vec<(usize, usize)> = Vec::new();
    let mut k = 0;

    while k < chars.len() {
        let c = chars[k].1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let start = k;
        if c.is_ascii_digit() {
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let mut plain = true;
            while k + 1 < chars.len()
                && matches!(chars[k].1, ',' | '.' | ':')
                && chars[k + 1].1.is_ascii_digit()
            {
                plain = false;
                k += 1;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
            }
            let digits = k - start;
            let mut suffix_end = k;
            while suffix_end < chars.len() && chars[suffix_end].1.is_ascii_alphabetic() {
                suffix_end += 1;
            }
            if suffix_end > k {
                let suffix = text[end_of(k)..end_of(suffix_end)].to_ascii_lowercase();
                if (plain && ORDINAL_SUFFIXES.contains(&suffix.as_str()))
                    || (plain && digits == 4 && suffix == "s")
                {
                    k = suffix_end;
                }
            }
            spans.push((start, k));
        } else if c.is_alphabetic() {
            loop {
                while k < chars.len() && chars[k].1.is_alphanumeric() {
                    k += 1;
                }
                if k + 1 < chars.len() && chars[k].1 == '-' && chars[k + 1].1.is_alphabetic() {
                    k += 1;
                } else {
                    break;
                }
            }
            if k + 1 < chars.len() && is_apostrophe(chars[k].1) && chars[k + 1].1.is_alphabetic()
            {
                let mut clitic_end = k + 1;
                while clitic_end < chars.len() && chars[clitic_end].1.is_alphabetic() {
                    clitic_end += 1;
                }
                let clitic = text[end_of(k + 1)..end_of(clitic_end)].to_lowercase();
                let word_len = k - start;
                if clitic == "t" && word_len > 1 && chars[k - 1].1.eq_ignore_ascii_case(&'n') {
                    spans.push((start, k - 1));
                    spans.push((k - 1, clitic_end));
                } else {
                    spans.push((start, k));
                    spans.push((k, clitic_end));
                }
                k = clitic_end;
            } else {
                spans.push((start, k));
            }
        } else {
            k += 1;
            spans.push((start, k));
        }
    }

    spans
        .into_iter()
        .enumerate()
        .map(|(index, (a, b))| {
            let (char_start, char_end) = (end_of(a), end_of(b));
            let surface = &text[char_start..char_end];
            Token {
                surface: surface.to_string(),
                lemma: lemmatize(surface),
                index,
                char_start,
                char_end,
                num_tag: NumTag::None,
                num_value: None,
            }
        })
        .collect()
}

/// Splits text into trimmed sentence strings.
///
/// A boundary is a `.`, `!` or `?` followed by whitespace and then an
/// uppercase letter or digit, unless the period closes a known abbreviation
/// or a single-letter initial.
pub fn split_sentences(text: &str) -> Vec<&str> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut start = 0usize;

    for k in 0..chars.len() {
        let (pos, c) = chars[k];
        if !matches!(c, '.' | '!' | '?') {
            continue;
        }
        let mut j = k + 1;
        if j >= chars.len() || !chars[j].1.is_whitespace() {
            continue;
        }
        while j < chars.len() && chars[j].1.is_whitespace() {
            j += 1;
        }
        if j >= chars.len() {
            continue;
        }
        let next = chars[j].1;
        if !(next.is_uppercase() || next.is_ascii_digit()) {
            continue;
        }
        if c == '.' && ends_with_abbreviation(&text[start..pos]) {
            continue;
        }
        let sentence = text[start..pos + c.len_utf8()].trim();
        if !sentence.is_empty() {
            out.push(sentence);
        }
        start = chars[j].0;
    }
    let rest = text[start..].trim();
    if !rest.is_empty() {
        out.push(rest);
    }
    out
}

fn ends_with_abbreviation(before: &str) -> bool {
    let word: String = before
        .chars()
        .rev()
        .take_while(|c| c.is_alphabetic())
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .collect();
    if word.is_empty() {
        return false;
    }
    let preceded_by_letter_or_dot = before[..before.len() - word.len()]
        .chars()
        .next_back()
        .is_some_and(|c| c == '.');
    let mut letters = word.chars();
    let initial = letters.next().is_some_and(|c| c.is_uppercase()) && letters.next().is_none();
    initial || preceded_by_letter_or_dot || ABBREVIATIONS.contains(&word.as_str())
}
