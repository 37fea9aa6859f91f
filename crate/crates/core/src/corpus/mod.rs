//! Documents, tokens and knowledge-base counts.

mod kb;
mod lemma;
mod tokenize;

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use kb::{load_gold, load_kb, KbStore, PairKey};
pub use lemma::lemmatize;
pub use tokenize::{split_sentences, tokenize};

use crate::{Error, Result};

/// Named-entity style tag of a numeric token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum NumTag {
    None,
    Date,
    Time,
    Duration,
    Set,
    Money,
    Percent,
    Number,
    Ordinal,
}

impl NumTag {
    pub const ALL: [NumTag; 9] = [
        NumTag::None,
        NumTag::Date,
        NumTag::Time,
        NumTag::Duration,
        NumTag::Set,
        NumTag::Money,
        NumTag::Percent,
        NumTag::Number,
        NumTag::Ordinal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NumTag::None => "NONE",
            NumTag::Date => "DATE",
            NumTag::Time => "TIME",
            NumTag::Duration => "DURATION",
            NumTag::Set => "SET",
            NumTag::Money => "MONEY",
            NumTag::Percent => "PERCENT",
            NumTag::Number => "NUMBER",
            NumTag::Ordinal => "ORDINAL",
        }
    }
}

impl fmt::Display for NumTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for NumTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        NumTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown numeric tag `{s}`"))
    }
}

/// A token with byte offsets into its sentence text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub index: usize,
    pub char_start: usize,
    pub char_end: usize,
    pub num_tag: NumTag,
    pub num_value: Option<u64>,
}

impl Token {
    /// Starts with a letter.
    pub fn is_word(&self) -> bool {
        self.surface.chars().next().is_some_and(char::is_alphabetic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub text: String,
    pub tokens: Vec<Token>,
}

impl Sentence {
    pub fn new(text: impl Into<String>) -> Self {
        let text = text.into();
        let tokens = tokenize(&text);
        Sentence { text, tokens }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn lemmas(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|t| t.lemma.as_str())
    }
}

/// Text about one subject, bound to the predicate whose count it should reveal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub subject_id: String,
    pub predicate_id: String,
    pub sentences: Vec<Sentence>,
}

/// One line of the corpus JSONL format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub subject: String,
    pub predicate: String,
    pub text: String,
}

impl Document {
    /// Splits `text` into sentences and tokenizes each of them.
    pub fn from_text(subject: impl Into<String>, predicate: impl Into<String>, text: &str) -> Self {
        Document {
            subject_id: subject.into(),
            predicate_id: predicate.into(),
            sentences: split_sentences(text).into_iter().map(Sentence::new).collect(),
        }
    }

    pub fn key(&self) -> PairKey {
        (self.subject_id.clone(), self.predicate_id.clone())
    }

    /// Sentences joined by a single space.
    pub fn text(&self) -> String {
        self.sentences
            .iter()
            .map(|s| s.text.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_record(&self) -> CorpusRecord {
        CorpusRecord {
            subject: self.subject_id.clone(),
            predicate: self.predicate_id.clone(),
            text: self.text(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("corpus record serializes")
    }
}

/// Parses corpus JSONL from a reader. `origin` names the source in errors.
pub fn read_corpus(reader: impl BufRead, origin: &Path) -> Result<Vec<Document>> {
    let mut docs = Vec::new();
    let mut seen: HashSet<PairKey> = HashSet::new();
    for (n, line) in reader.lines().enumerate() {
        let line_no = n + 1;
        let line = line.map_err(|e| Error::io(origin, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CorpusRecord = serde_json::from_str(&line)
            .map_err(|e| Error::parse(origin, line_no, format!("malformed corpus record: {e}")))?;
        if record.subject.is_empty() {
            return Err(Error::parse(origin, line_no, "empty subject"));
        }
        let doc = Document::from_text(record.subject, record.predicate, &record.text);
        if !seen.insert(doc.key()) {
            return Err(Error::DuplicateDocument {
                subject: doc.subject_id,
                predicate: doc.predicate_id,
            });
        }
        docs.push(doc);
    }
    Ok(docs)
}

/// Loads a corpus JSONL file: one `{"subject","predicate","text"}` object per line.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Document>> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_corpus(BufReader::new(file), path)
}

pub fn write_corpus(docs: &[Document], mut out: impl Write) -> std::io::Result<()> {
    for doc in docs {
        writeln!(out, "{}", doc.to_json_line())?;
    }
    Ok(())
}
