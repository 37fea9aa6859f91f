//! `cardex` command line.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::corpus::{load_corpus, load_gold, load_kb, Document, Sentence};
use crate::crf::{load_model, save_model, train, TrainConfig, TrainingSequence};
use crate::eval::{analyze_corpus, evaluate, format_census, format_reports};
use crate::extract::{baseline_corpus, predict_document, PredictConfig, Prediction};
use crate::numtag::{classify_document, classify_in_place, NumTagRuleSet};
use crate::supervise::{annotate_corpus, AnnotatedSentence, SupervisionConfig, SupervisionMode};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cardex", version, about = "Relation cardinality extraction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RulesArg {
    /// Numeric tagging lexicons, replacing the bundled ones.
    #[arg(long, value_name = "FILE")]
    rules: Option<PathBuf>,
}

impl RulesArg {
    fn load(&self) -> Result<NumTagRuleSet> {
        match &self.rules {
            Some(p) => NumTagRuleSet::load(p),
            None => Ok(NumTagRuleSet::default()),
        }
    }
}

#[derive(Debug, Args)]
struct OutputArg {
    /// Write to FILE instead of stdout.
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Numeric tag distribution and the nouns numbers quantify.
    Analyze {
        corpus: PathBuf,
        #[command(flatten)]
        rules: RulesArg,
        #[arg(long)]
        json: bool,
    },
    /// Label candidate numbers against knowledge-base counts.
    Annotate {
        corpus: PathBuf,
        kb: PathBuf,
        #[arg(long, value_parser = parse_mode)]
        mode: SupervisionMode,
        /// Keep only pairs with at least N objects.
        #[arg(long = "min-count", default_value_t = 1, value_name = "N")]
        min_count: u64,
        /// Label against these manual counts instead of triple counts.
        #[arg(long, value_name = "FILE")]
        gold: Option<PathBuf>,
        #[command(flatten)]
        rules: RulesArg,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Train a CRF on annotated sentences.
    Train {
        labeled: PathBuf,
        #[arg(long, value_name = "MODEL")]
        out: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long = "max-iterations", default_value_t = 200)]
        max_iterations: usize,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        #[arg(long = "min-feature-count", default_value_t = 1)]
        min_feature_count: usize,
        #[command(flatten)]
        rules: RulesArg,
    },
    /// Predict one count per document.
    Predict {
        corpus: PathBuf,
        model: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        threshold: f64,
        /// Sum lists of confident counts ("two sons and one daughter").
        #[arg(long)]
        compositional: bool,
        /// Fall back to zero/one phrases when the model abstains.
        #[arg(long = "zero-one")]
        zero_one: bool,
        #[command(flatten)]
        rules: RulesArg,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Pick a random candidate number per document.
    Baseline {
        corpus: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        rules: RulesArg,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Precision, recall and F1 of predictions against gold counts.
    Evaluate {
        predictions: PathBuf,
        gold: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn parse_mode(s: &str) -> std::result::Result<SupervisionMode, String> {
    s.parse()
}

fn open_output(output: &OutputArg) -> Result<Box<dyn Write>> {
    Ok(match &output.output {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Error::io(p, e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_jsonl<T: serde::Serialize>(items: &[T], mut out: impl Write, path: &Path) -> Result<()> {
    for item in items {
        let line = serde_json::to_string(item).expect("records serialize");
        writeln!(out, "{line}").map_err(|e| Error::io(path, e))?;
    }
    out.flush().map_err(|e| Error::io(path, e))
}

fn read_jsonl<T: serde::de::DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (n, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| Error::parse(path, n + 1, e.to_string()))?);
    }
    Ok(out)
}

fn classified_corpus(path: &Path, rules: &NumTagRuleSet) -> Result<Vec<Document>> {
    let mut docs = load_corpus(path)?;
    for d in &mut docs {
        classify_document(d, rules);
    }
    Ok(docs)
}

fn output_label(output: &OutputArg) -> PathBuf {
    output.output.clone().unwrap_or_else(|| PathBuf::from("<stdout>"))
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    let so = Path::new("<stdout>");
    match cli.command {
        Command::Analyze { corpus, rules, json } => {
            let census = analyze_corpus(&load_corpus(&corpus)?, &rules.load()?);
            let text = if json {
                serde_json::to_string_pretty(&census).expect("census serializes") + "\n"
            } else {
                format_census(&census)
            };
            stdout.write_all(text.as_bytes()).map_err(|e| Error::io(so, e))?;
        }
        Command::Annotate { corpus, kb, mode, min_count, gold, rules, output } => {
            let docs = classified_corpus(&corpus, &rules.load()?)?;
            let mut store = load_kb(&kb)?;
            if let Some(g) = &gold {
                store = store.with_gold(load_gold(g)?);
            }
            let config = SupervisionConfig {
                mode,
                min_kb_count: min_count,
                use_gold: gold.is_some(),
            };
            let labeled = annotate_corpus(&docs, &store, &config)?;
            write_jsonl(&labeled, open_output(&output)?, &output_label(&output))?;
        }
        Command::Train { labeled, out, sigma, max_iterations, tol, min_feature_count, rules } => {
            let rules = rules.load()?;
            let records: Vec<AnnotatedSentence> = read_jsonl(&labeled)?;
            let mut dataset = Vec::with_capacity(records.len());
            for r in records {
                let mut sentence = Sentence::new(r.text);
                classify_in_place(&mut sentence, &rules);
                let seq = TrainingSequence { sentence, labels: r.labels };
                seq.validate()?;
                dataset.push(seq);
            }
            let config = TrainConfig {
                l2_sigma: sigma,
                max_iterations,
                convergence_tol: tol,
                min_feature_count,
            };
            save_model(&train(&dataset, &config)?, &out)?;
        }
        Command::Predict { corpus, model, threshold, compositional, zero_one, rules, output } => {
            let config = PredictConfig {
                marginal_threshold: threshold,
                enable_compositional: compositional,
                enable_zero_one: zero_one,
                ..Default::default()
            };
            config.validate()?;
            let docs = classified_corpus(&corpus, &rules.load()?)?;
            let model = load_model(&model)?;
            let preds: Vec<Prediction> = docs
                .iter()
                .filter_map(|d| predict_document(&model, d, &config))
                .collect();
            log::info!("{} predictions, {} abstentions", preds.len(), docs.len() - preds.len());
            write_jsonl(&preds, open_output(&output)?, &output_label(&output))?;
        }
        Command::Baseline { corpus, seed, rules, output } => {
            let docs = classified_corpus(&corpus, &rules.load()?)?;
            let preds = baseline_corpus(&docs, seed);
            write_jsonl(&preds, open_output(&output)?, &output_label(&output))?;
        }
        Command::Evaluate { predictions, gold, json } => {
            let preds: Vec<Prediction> = read_jsonl(&predictions)?;
            let reports = evaluate(&preds, &load_gold(&gold)?)?;
            let text = if json {
                serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n"
            } else {
                format_reports(&reports)
            };
            stdout.write_all(text.as_bytes()).map_err(|e| Error::io(so, e))?;
        }
    }
    Ok(())
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code: 0 on success, 1 on usage errors, 2 on data errors.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("cardex: {e}");
            match e {
                Error::Config(_) => EXIT_USAGE,
                _ => EXIT_DATA,
            }
        }
    }
}
