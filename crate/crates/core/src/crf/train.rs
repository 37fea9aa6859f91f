//! Penalized maximum-likelihood training.

use std::collections::HashMap;

use super::features::sentence_features;
use super::inference::NUM_LABELS;
use super::model::{CrfModel, EncodedSentence};
use super::optimize;
use crate::corpus::Sentence;
use crate::numtag::is_candidate;
use crate::supervise::Label;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainConfig {
    /// Standard deviation of the Gaussian prior; the penalty is `|w|^2 / 2 sigma^2`.
    pub l2_sigma: f64,
    pub max_iterations: usize,
    /// Relative objective change below which training stops.
    pub convergence_tol: f64,
    /// Features seen fewer times than this are dropped before training.
    pub min_feature_count: usize,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            l2_sigma: 1.0,
            max_iterations: 200,
            convergence_tol: 1e-5,
            min_feature_count: 1,
        }
    }
}

impl TrainConfig {
    fn validate(&self) -> Result<()> {
        if !(self.l2_sigma.is_finite() && self.l2_sigma > 0.0) {
            return Err(Error::Config("l2_sigma must be positive".into()));
        }
        if self.max_iterations == 0 || self.min_feature_count == 0 {
            return Err(Error::Config("max_iterations and min_feature_count must be positive".into()));
        }
        if !(self.convergence_tol.is_finite() && self.convergence_tol > 0.0) {
            return Err(Error::Config("convergence_tol must be positive".into()));
        }
        Ok(())
    }
}

/// A classified sentence with one gold label per token.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingSequence {
    pub sentence: Sentence,
    pub labels: Vec<Label>,
}

impl TrainingSequence {
    /// Checks length and that CARD only marks candidate numbers.
    pub fn validate(&self) -> Result<()> {
        if self.labels.len() != self.sentence.tokens.len() {
            return Err(Error::LengthMismatch {
                labels: self.labels.len(),
                tokens: self.sentence.tokens.len(),
            });
        }
        for (i, (l, t)) in self.labels.iter().zip(&self.sentence.tokens).enumerate() {
            if *l == Label::Card && !is_candidate(t) {
                return Err(Error::NonCandidateLabel { position: i });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrainReport {
    pub iterations: usize,
    /// Penalized log-likelihood after each accepted step, initial point first.
    pub objective_trace: Vec<f64>,
    pub converged: bool,
}

struct Encoded<'a> {
    features: EncodedSentence,
    labels: &'a [Label],
}

/// Objective and gradient over pre-encoded sequences at the model's weights.
fn objective(model: &CrfModel, data: &[Encoded<'_>]) -> (f64, Vec<f64>) {
    let n_state = model.state_weights().len() * NUM_LABELS;
    let mut grad = vec![0.0; model.num_params()];
    let mut value = 0.0;

    for seq in data {
        let pot = model.potentials_encoded(&seq.features);
        let fb = pot.forward_backward();
        value += pot.score(seq.labels) - fb.log_partition;

        for (i, ids) in seq.features.iter().enumerate() {
            let gold = seq.labels[i].index();
            for &id in ids {
                let base = id as usize * NUM_LABELS;
                grad[base + gold] += 1.0;
                for y in 0..NUM_LABELS {
                    grad[base + y] -= fb.marginals[i][y];
                }
            }
            if i > 0 {
                let prev = seq.labels[i - 1].index();
                grad[n_state + prev * NUM_LABELS + gold] += 1.0;
                for a in 0..NUM_LABELS {
                    for b in 0..NUM_LABELS {
                        grad[n_state + a * NUM_LABELS + b] -= fb.pair_marginal(&pot, i - 1, a, b);
                    }
                }
            }
        }
    }

    let inv_var = 1.0 / (model.sigma() * model.sigma());
    let params = model.params();
    let mut penalty = 0.0;
    for (g, w) in grad.iter_mut().zip(&params) {
        penalty += w * w;
        *g -= w * inv_var;
    }
    (value - 0.5 * penalty * inv_var, grad)
}

/// Penalized conditional log-likelihood of `dataset` and its gradient with
/// respect to [`CrfModel::params`]. The penalty uses the model's sigma.
pub fn log_likelihood_and_gradient(
    model: &CrfModel,
    dataset: &[TrainingSequence],
) -> Result<(f64, Vec<f64>)> {
    for seq in dataset {
        seq.validate()?;
    }
    let encoded: Vec<Encoded<'_>> = dataset
        .iter()
        .map(|s| Encoded {
            features: model.encode(&s.sentence),
            labels: &s.labels,
        })
        .collect();
    Ok(objective(model, &encoded))
}

pub fn train(dataset: &[TrainingSequence], config: &TrainConfig) -> Result<CrfModel> {
    train_with_report(dataset, config).map(|(m, _)| m)
}

/// Trains from zero weights with L-BFGS.
///
/// The feature vocabulary is ordered by first occurrence in `dataset`, so a
/// fixed dataset order and config give an identical model.
pub fn train_with_report(
    dataset: &[TrainingSequence],
    config: &TrainConfig,
) -> Result<(CrfModel, TrainReport)> {
    config.validate()?;
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    for seq in dataset {
        seq.validate()?;
    }
    if !dataset.iter().any(|s| s.labels.contains(&Label::Card)) {
        return Err(Error::NoPositiveLabels {
            sequences: dataset.len(),
        });
    }

    let raw: Vec<Vec<Vec<String>>> = dataset.iter().map(|s| sentence_features(&s.sentence)).collect();
    let mut counts: HashMap<&str, usize> = HashMap::new();
    let mut order: Vec<&str> = Vec::new();
    for f in raw.iter().flatten().flatten() {
        let c = counts.entry(f.as_str()).or_insert_with(|| {
            order.push(f.as_str());
            0
        });
        *c += 1;
    }
    let features: Vec<String> = order
        .into_iter()
        .filter(|f| counts[f] >= config.min_feature_count)
        .map(str::to_string)
        .collect();
    log::info!(
        "training on {} sequences with {} features",
        dataset.len(),
        features.len()
    );

    let mut model = CrfModel::zeros(features, config.l2_sigma)?;
    let encoded: Vec<Encoded<'_>> = raw
        .iter()
        .zip(dataset)
        .map(|(fs, s)| Encoded {
            features: fs
                .iter()
                .map(|pos| pos.iter().filter_map(|f| model.feature_id(f)).collect())
                .collect(),
            labels: &s.labels,
        })
        .collect();

    let mut scratch = model.clone();
    let outcome = optimize::minimize(
        |x| {
            scratch.set_params(x);
            let (v, g) = objective(&scratch, &encoded);
            (-v, g.into_iter().map(|v| -v).collect())
        },
        model.params(),
        config.max_iterations,
        config.convergence_tol,
    );
    model.set_params(&outcome.x);
    log::info!(
        "stopped after {} iterations (converged: {}), objective {:.6}",
        outcome.iterations,
        outcome.converged,
        -outcome.trace.last().copied().unwrap_or(0.0)
    );
    let report = TrainReport {
        iterations: outcome.iterations,
        objective_trace: outcome.trace.into_iter().map(|v| -v).collect(),
        converged: outcome.converged,
    };
    Ok((model, report))
}
