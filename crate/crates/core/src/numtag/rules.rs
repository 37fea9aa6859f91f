use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use crate::{Error, Result};

const DEFAULT_RULES: &str = include_str!("../../data/numtag_rules.txt");

/// Lexicons that drive numeric tagging and number-word parsing.
///
/// The plain-text format has `[section]` headers; map sections take
/// `word<TAB>value` lines, set sections take one word per line and
/// `[year_range]` takes a single `low<TAB>high` line. All words are matched
/// lowercased.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumTagRuleSet {
    pub number_words: BTreeMap<String, u64>,
    pub ordinal_words: BTreeMap<String, u64>,
    pub count_words: BTreeMap<String, u64>,
    pub month_names: BTreeSet<String>,
    pub currency_markers: BTreeSet<String>,
    pub percent_markers: BTreeSet<String>,
    pub temporal_units: BTreeSet<String>,
    pub set_markers: BTreeSet<String>,
    pub year_range: (u64, u64),
}

impl Default for NumTagRuleSet {
    fn default() -> Self {
        Self::parse(DEFAULT_RULES, Path::new("<bundled numtag rules>"))
            .expect("bundled rules are valid")
    }
}

impl NumTagRuleSet {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    pub fn parse(text: &str, origin: &Path) -> Result<Self> {
        let mut rules = NumTagRuleSet {
            number_words: BTreeMap::new(),
            ordinal_words: BTreeMap::new(),
            count_words: BTreeMap::new(),
            month_names: BTreeSet::new(),
            currency_markers: BTreeSet::new(),
            percent_markers: BTreeSet::new(),
            temporal_units: BTreeSet::new(),
            set_markers: BTreeSet::new(),
            year_range: (0, 0),
        };
        let mut section: Option<String> = None;
        let mut saw_year_range = false;

        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = Some(name.trim().to_string());
                continue;
            }
            let Some(name) = section.as_deref() else {
                return Err(Error::parse(origin, line_no, "entry before any [section] header"));
            };
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            let value = |i: usize| -> Result<u64> {
                fields
                    .get(i)
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| Error::parse(origin, line_no, format!("expected `word<TAB>integer` in [{name}]")))
            };
            let word = fields[0].to_lowercase();
            match name {
                "number_words" => {
                    rules.number_words.insert(word, value(1)?);
                }
                "ordinal_words" => {
                    rules.ordinal_words.insert(word, value(1)?);
                }
                "count_words" => {
                    rules.count_words.insert(word, value(1)?);
                }
                "month_names" => {
                    rules.month_names.insert(word);
                }
                "currency_markers" => {
                    rules.currency_markers.insert(word);
                }
                "percent_markers" => {
                    rules.percent_markers.insert(word);
                }
                "temporal_units" => {
                    rules.temporal_units.insert(word);
                }
                "set_markers" => {
                    rules.set_markers.insert(word);
                }
                "year_range" => {
                    let low: u64 = fields[0]
                        .parse()
                        .map_err(|_| Error::parse(origin, line_no, "year range bounds must be integers"))?;
                    rules.year_range = (low, value(1)?);
                    saw_year_range = true;
                }
                other => {
                    return Err(Error::parse(origin, line_no, format!("unknown section [{other}]")));
                }
            }
        }

        if !saw_year_range || rules.year_range.0 > rules.year_range.1 {
            return Err(Error::Config(format!(
                "{}: [year_range] missing or unordered",
                origin.display()
            )));
        }
        for (name, empty) in [
            ("number_words", rules.number_words.is_empty()),
            ("ordinal_words", rules.ordinal_words.is_empty()),
            ("percent_markers", rules.percent_markers.is_empty()),
        ] {
            if empty {
                return Err(Error::Config(format!("{}: [{name}] is empty", origin.display())));
            }
        }
        Ok(rules)
    }

    pub fn is_numeric_word(&self, lower: &str) -> bool {
        self.number_words.contains_key(lower)
            || self.ordinal_words.contains_key(lower)
            || self.count_words.contains_key(lower)
    }
}
