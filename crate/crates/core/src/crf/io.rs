//! Text model format.
//!
//! ```text
//! cardex-crf v1
//! sigma <value>
//! labels CARD O
//! CARD CARD <weight>
//! CARD O <weight>
//! O CARD <weight>
//! O O <weight>
//! <feature>\t<weight CARD>\t<weight O>
//! ...
//! ```
//!
//! Weights are written with 17 significant digits so a load reproduces them
//! bit for bit.

use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use super::features::TEMPLATE_VERSION;
use super::inference::NUM_LABELS;
use super::model::CrfModel;
use crate::supervise::Label;
use crate::{Error, Result};

pub const MAGIC: &str = "cardex-crf";

fn header() -> String {
    format!("{MAGIC} v{TEMPLATE_VERSION}")
}

fn fmt_weight(w: f64) -> String {
    format!("{w:.16e}")
}

const LABELS: [Label; NUM_LABELS] = [Label::Card, Label::O];

pub fn write_model(model: &CrfModel, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "{}", header())?;
    writeln!(out, "sigma {}", fmt_weight(model.sigma()))?;
    writeln!(out, "labels {} {}", LABELS[0].as_str(), LABELS[1].as_str())?;
    let t = model.transition_weights();
    for a in LABELS {
        for b in LABELS {
            writeln!(out, "{} {} {}", a.as_str(), b.as_str(), fmt_weight(t[a.index()][b.index()]))?;
        }
    }
    for (f, w) in model.features().iter().zip(model.state_weights()) {
        writeln!(
            out,
            "{f}\t{}\t{}",
            fmt_weight(w[Label::Card.index()]),
            fmt_weight(w[Label::O.index()])
        )?;
    }
    Ok(())
}

pub fn save_model(model: &CrfModel, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_model(model, &mut out)
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::ModelFormat {
        line,
        message: message.into(),
    }
}

fn parse_weight(s: &str, line: usize) -> Result<f64> {
    let w: f64 = s
        .trim()
        .parse()
        .map_err(|_| bad(line, format!("`{s}` is not a number")))?;
    if !w.is_finite() {
        return Err(bad(line, "non-finite weight"));
    }
    Ok(w)
}

fn label(s: &str, line: usize) -> Result<Label> {
    match s {
        "CARD" => Ok(Label::Card),
        "O" => Ok(Label::O),
        other => Err(bad(line, format!("unknown label `{other}`"))),
    }
}

pub fn read_model(reader: impl BufRead) -> Result<CrfModel> {
    let mut lines = reader.lines().enumerate().map(|(n, l)| {
        l.map(|l| (n + 1, l))
            .map_err(|e| bad(n + 1, e.to_string()))
    });
    let mut next = |what: &str| -> Result<(usize, String)> {
        lines
            .next()
            .unwrap_or_else(|| Err(bad(0, format!("missing {what}"))))
    };

    let (_, head) = next("header")?;
    if head.trim() != header() {
        return Err(Error::ModelVersion {
            found: head.trim().to_string(),
            expected: header(),
        });
    }
    let (n, sigma_line) = next("sigma")?;
    let sigma = sigma_line
        .strip_prefix("sigma ")
        .ok_or_else(|| bad(n, "expected `sigma <value>`"))
        .and_then(|v| parse_weight(v, n))?;
    let (n, labels_line) = next("labels")?;
    if labels_line.trim() != "labels CARD O" {
        return Err(bad(n, "expected `labels CARD O`"));
    }
    let mut transition = [[f64::NAN; NUM_LABELS]; NUM_LABELS];
    for _ in 0..NUM_LABELS * NUM_LABELS {
        let (n, l) = next("transition weight")?;
        let parts: Vec<&str> = l.split(' ').collect();
        if parts.len() != 3 {
            return Err(bad(n, "expected `<label> <label> <weight>`"));
        }
        let (a, b) = (label(parts[0], n)?, label(parts[1], n)?);
        transition[a.index()][b.index()] = parse_weight(parts[2], n)?;
    }
    if transition.iter().flatten().any(|w| w.is_nan()) {
        return Err(bad(7, "transition table incomplete"));
    }

    let mut features = Vec::new();
    let mut state = Vec::new();
    for item in lines {
        let (n, l) = item?;
        if l.is_empty() {
            continue;
        }
        let parts: Vec<&str> = l.split('\t').collect();
        if parts.len() != 3 {
            return Err(bad(n, "expected `<feature>\\t<weight>\\t<weight>`"));
        }
        features.push(parts[0].to_string());
        state.push([parse_weight(parts[1], n)?, parse_weight(parts[2], n)?]);
    }
    CrfModel::new(features, state, transition, sigma)
}

pub fn load_model(path: impl AsRef<Path>) -> Result<CrfModel> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_model(BufReader::new(file))
}
