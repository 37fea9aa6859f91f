//! Synthetic corpora shared by the integration tests.
#![allow(dead_code)]

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::seq::SliceRandom;
use rand::Rng;

pub const WORDS: [&str; 13] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven",
    "twelve",
];

const FIRST: [&str; 12] = [
    "Anna", "Boris", "Clara", "David", "Elena", "Frank", "Greta", "Hugo", "Irene", "Jonas", "Karla", "Lukas",
];
const LAST: [&str; 10] = [
    "Meyer", "Novak", "Olsen", "Petrov", "Quinn", "Rossi", "Schmidt", "Tanaka", "Varga", "Weber",
];
const CITIES: [&str; 8] = ["Springfield", "Riverton", "Lakeside", "Oakham", "Brookfield", "Fairview", "Milton", "Ashford"];
const MONTHS: [&str; 6] = ["January", "March", "May", "July", "September", "November"];

#[derive(Debug, Clone)]
pub struct SynthDoc {
    pub subject: String,
    pub predicate: String,
    pub text: String,
    /// True relation count.
    pub count: u64,
}

pub fn number_surface(n: u64, rng: &mut impl Rng) -> String {
    if (n as usize) < WORDS.len() && rng.gen_bool(0.5) {
        WORDS[n as usize].to_string()
    } else {
        n.to_string()
    }
}

fn pick<'a>(xs: &[&'a str], rng: &mut impl Rng) -> &'a str {
    xs.choose(rng).expect("non-empty")
}

/// Sentences whose numbers are dates, percents or money: never candidates.
pub fn non_candidate_sentence(name: &str, rng: &mut impl Rng) -> String {
    let year = rng.gen_range(1900..2020);
    match rng.gen_range(0..4) {
        0 => format!(
            "{name} was born on {} {}, {year} in {}.",
            pick(&MONTHS, rng),
            rng.gen_range(1..29),
            pick(&CITIES, rng)
        ),
        1 => format!("{name} won {}% of the vote in {year}.", rng.gen_range(2..99)),
        2 => format!("The estate was valued at ${} million.", rng.gen_range(2..90)),
        _ => format!("In {year} the family moved to {}.", pick(&CITIES, rng)),
    }
}

/// Sentences with a candidate number that is not a child count.
pub fn distractor_sentence(pron: &str, k: u64, rng: &mut impl Rng) -> String {
    let year = rng.gen_range(1900..2020);
    match rng.gen_range(0..7) {
        0 => format!("{pron} wrote {k} books."),
        5 => format!("{pron} recorded {k} albums with {}.", pick(&FIRST, rng)),
        6 => format!("{} {} has {k} cousins.", pick(&FIRST, rng), pick(&LAST, rng)),
        1 => format!("The team won {k} games in {year}."),
        2 => format!("{pron} played {k} seasons for {}.", pick(&CITIES, rng)),
        3 => format!("{} has {k} bridges and a museum.", pick(&CITIES, rng)),
        _ => format!("{pron} received {k} awards during a long career."),
    }
}

pub fn child_sentence(name: &str, pron: &str, n: &str, rng: &mut impl Rng) -> String {
    match rng.gen_range(0..4) {
        0 => format!("{pron} has {n} children."),
        1 => format!("{pron} had {n} children with {}.", pick(&FIRST, rng)),
        2 => format!("They raised {n} children in {}.", pick(&CITIES, rng)),
        _ => format!("{name} is survived by {n} children."),
    }
}

fn person(rng: &mut impl Rng) -> (String, &'static str) {
    let name = format!("{} {}", pick(&FIRST, rng), pick(&LAST, rng));
    let pron = if rng.gen_bool(0.5) { "He" } else { "She" };
    (name, pron)
}

/// Biographies stating the child count once ("has N children") among dates,
/// percents, money and unrelated counts.
pub fn child_corpus(n_docs: usize, rng: &mut impl Rng) -> Vec<SynthDoc> {
    (0..n_docs)
        .map(|i| {
            let (name, pron) = person(rng);
            let count = rng.gen_range(1..=10);
            let mut sentences = vec![child_sentence(&name, pron, &number_surface(count, rng), rng)];
            for _ in 0..rng.gen_range(1..=3) {
                sentences.push(non_candidate_sentence(&name, rng));
            }
            for _ in 0..rng.gen_range(0..=2) {
                let k = rng.gen_range(1..=40);
                sentences.push(distractor_sentence(pron, k, rng));
            }
            sentences.shuffle(rng);
            SynthDoc {
                subject: format!("Q{i}"),
                predicate: "child".into(),
                text: sentences.join(" "),
                count,
            }
        })
        .collect()
}

/// Biographies that count children by kind, either as a list ("two sons and
/// one daughter") or for one kind only ("three sons").
pub fn list_corpus(n_docs: usize, offset: usize, list_share: f64, rng: &mut impl Rng) -> Vec<SynthDoc> {
    (0..n_docs)
        .map(|i| {
            let (name, pron) = person(rng);
            let a = rng.gen_range(1..=5);
            let b = rng.gen_range(1..=5);
            let (x, y) = if rng.gen_bool(0.5) { ("sons", "daughters") } else { ("daughters", "sons") };
            let x = if a == 1 { &x[..x.len() - 1] } else { x };
            let y = if b == 1 { &y[..y.len() - 1] } else { y };
            // some families have children of one kind only
            let (list, count) = if rng.gen_bool(list_share) {
                (format!("{pron} has {} {x} and {} {y}.", number_surface(a, rng), number_surface(b, rng)), a + b)
            } else {
                (format!("{pron} has {} {x}.", number_surface(a, rng)), a)
            };
            let mut sentences = vec![list, non_candidate_sentence(&name, rng)];
            if rng.gen_bool(0.5) {
                let k = rng.gen_range(1..=40);
                sentences.push(distractor_sentence(pron, k, rng));
            }
            sentences.shuffle(rng);
            SynthDoc {
                subject: format!("L{}", offset + i),
                predicate: "child".into(),
                text: sentences.join(" "),
                count,
            }
        })
        .collect()
}

/// Documents stating "two sons and one daughter" (or the reverse genders).
pub fn two_and_one_corpus(n_docs: usize, rng: &mut impl Rng) -> Vec<SynthDoc> {
    (0..n_docs)
        .map(|i| {
            let (name, pron) = person(rng);
            let (x, y) = if rng.gen_bool(0.5) { ("sons", "daughter") } else { ("daughters", "son") };
            let list = match rng.gen_range(0..3) {
                0 => format!("{pron} has two {x} and one {y}."),
                1 => format!("{name} has two {x} and one {y} with {}.", pick(&FIRST, rng)),
                _ => format!("Today {} has two {x} and one {y}.", pron.to_lowercase()),
            };
            let mut sentences = [list, non_candidate_sentence(&name, rng)];
            sentences.shuffle(rng);
            SynthDoc {
                subject: format!("T{i}"),
                predicate: "child".into(),
                text: sentences.join(" "),
                count: 3,
            }
        })
        .collect()
}

pub fn corpus_jsonl(docs: &[SynthDoc]) -> String {
    let mut out = String::new();
    for d in docs {
        let rec = serde_json::json!({"subject": d.subject, "predicate": d.predicate, "text": d.text});
        writeln!(out, "{rec}").unwrap();
    }
    out
}

/// One triple per object, so the KB count equals the true count.
pub fn kb_tsv(docs: &[SynthDoc]) -> String {
    let mut out = String::new();
    for d in docs {
        for j in 0..d.count {
            writeln!(out, "{}\t{}\t{}_o{j}", d.subject, d.predicate, d.subject).unwrap();
        }
    }
    out
}

pub fn gold_tsv(docs: &[SynthDoc]) -> String {
    let mut out = String::new();
    for d in docs {
        writeln!(out, "{}\t{}\t{}", d.subject, d.predicate, d.count).unwrap();
    }
    out
}

pub fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

pub fn cardex(args: &[&std::ffi::OsStr]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cardex"))
        .args(args)
        .output()
        .expect("cardex runs")
}

/// Runs the binary and fails with its stderr unless it exits 0.
pub fn cardex_ok(args: &[&std::ffi::OsStr]) -> Output {
    let out = cardex(args);
    if !out.status.success() {
        panic!(
            "cardex {:?} failed: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        );
    }
    out
}

#[macro_export]
macro_rules! args {
    ($($a:expr),* $(,)?) => {
        &[$(::std::ffi::OsStr::new($a)),*]
    };
}
