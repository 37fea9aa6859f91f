use std::collections::{HashMap, HashSet};
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::{Error, Result};

/// `(subject, predicate)`.
pub type PairKey = (String, String);

/// Triple counts per (subject, predicate), plus optional manual counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KbStore {
    /// Distinct-object counts; every stored value is at least 1.
    pub counts: HashMap<PairKey, u64>,
    /// Manually verified counts; zero is allowed.
    pub gold_counts: Option<HashMap<PairKey, u64>>,
}

impl KbStore {
    /// Counts distinct objects per (subject, predicate) over triple rows.
    pub fn from_triples<'a>(rows: impl IntoIterator<Item = (&'a str, &'a str, &'a str)>) -> Self {
        let mut objects: HashMap<PairKey, HashSet<&'a str>> = HashMap::new();
        for (s, p, o) in rows {
            objects
                .entry((s.to_string(), p.to_string()))
                .or_default()
                .insert(o);
        }
        KbStore {
            counts: objects.into_iter().map(|(k, v)| (k, v.len() as u64)).collect(),
            gold_counts: None,
        }
    }

    pub fn count(&self, subject: &str, predicate: &str) -> Option<u64> {
        self.counts
            .get(&(subject.to_string(), predicate.to_string()))
            .copied()
    }

    pub fn with_gold(mut self, gold: HashMap<PairKey, u64>) -> Self {
        self.gold_counts = Some(gold);
        self
    }
}

fn read_tsv(path: &Path, mut row: impl FnMut(usize, [&str; 3]) -> Result<()>) -> Result<()> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    for (n, line) in BufReader::new(file).lines().enumerate() {
        let line_no = n + 1;
        let line = line.map_err(|e| Error::io(path, e))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 || fields.iter().any(|f| f.trim().is_empty()) {
            return Err(Error::parse(
                path,
                line_no,
                format!("expected 3 non-empty tab-separated fields, found {}", fields.len()),
            ));
        }
        row(line_no, [fields[0].trim(), fields[1].trim(), fields[2].trim()])?;
    }
    Ok(())
}

/// Loads `subject<TAB>predicate<TAB>object` rows into distinct-object counts.
pub fn load_kb(path: impl AsRef<Path>) -> Result<KbStore> {
    let mut rows: Vec<(String, String, String)> = Vec::new();
    read_tsv(path.as_ref(), |_, [s, p, o]| {
        rows.push((s.to_string(), p.to_string(), o.to_string()));
        Ok(())
    })?;
    Ok(KbStore::from_triples(
        rows.iter().map(|(s, p, o)| (s.as_str(), p.as_str(), o.as_str())),
    ))
}

/// Loads `subject<TAB>predicate<TAB>count` rows.
pub fn load_gold(path: impl AsRef<Path>) -> Result<HashMap<PairKey, u64>> {
    let path = path.as_ref();
    let mut gold = HashMap::new();
    read_tsv(path, |line, [s, p, c]| {
        let count: u64 = c.parse().map_err(|_| {
            Error::parse(path, line, format!("count `{c}` is not a non-negative integer"))
        })?;
        if gold.insert((s.to_string(), p.to_string()), count).is_some() {
            return Err(Error::parse(path, line, format!("duplicate gold count for ({s}, {p})")));
        }
        Ok(())
    })?;
    Ok(gold)
}
