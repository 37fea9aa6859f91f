use std::collections::HashMap;

use super::features::{sentence_features, TEMPLATE_VERSION};
use super::inference::{ForwardBackward, Potentials, NUM_LABELS};
use crate::corpus::Sentence;
use crate::supervise::Label;
use crate::{Error, Result};

/// Learned parameters of the two-label chain.
#[derive(Debug, Clone, PartialEq)]
pub struct CrfModel {
    features: Vec<String>,
    vocab: HashMap<String, u32>,
    state: Vec<[f64; NUM_LABELS]>,
    transition: [[f64; NUM_LABELS]; NUM_LABELS],
    sigma: f64,
    template_version: u32,
}

/// Feature ids per position; features unknown to the model are dropped.
pub type EncodedSentence = Vec<Vec<u32>>;

impl CrfModel {
    pub fn new(
        features: Vec<String>,
        state: Vec<[f64; NUM_LABELS]>,
        transition: [[f64; NUM_LABELS]; NUM_LABELS],
        sigma: f64,
    ) -> Result<Self> {
        if features.len() != state.len() {
            return Err(Error::Config(format!(
                "{} features but {} weight rows",
                features.len(),
                state.len()
            )));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::Config(format!("sigma must be positive, got {sigma}")));
        }
        let all_finite = state.iter().flatten().chain(transition.iter().flatten()).all(|w| w.is_finite());
        if !all_finite {
            return Err(Error::Config("model weights must be finite".into()));
        }
        let mut vocab = HashMap::with_capacity(features.len());
        for (i, f) in features.iter().enumerate() {
            if vocab.insert(f.clone(), i as u32).is_some() {
                return Err(Error::Config(format!("duplicate feature `{f}`")));
            }
        }
        Ok(CrfModel {
            features,
            vocab,
            state,
            transition,
            sigma,
            template_version: TEMPLATE_VERSION,
        })
    }

    /// All weights zero.
    pub fn zeros(features: Vec<String>, sigma: f64) -> Result<Self> {
        let n = features.len();
        Self::new(features, vec![[0.0; NUM_LABELS]; n], [[0.0; NUM_LABELS]; NUM_LABELS], sigma)
    }

    pub fn features(&self) -> &[String] {
        &self.features
    }

    pub fn feature_id(&self, feature: &str) -> Option<u32> {
        self.vocab.get(feature).copied()
    }

    pub fn state_weights(&self) -> &[[f64; NUM_LABELS]] {
        &self.state
    }

    pub fn transition_weights(&self) -> &[[f64; NUM_LABELS]; NUM_LABELS] {
        &self.transition
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn template_version(&self) -> u32 {
        self.template_version
    }

    pub fn num_params(&self) -> usize {
        self.state.len() * NUM_LABELS + NUM_LABELS * NUM_LABELS
    }

    /// Flat parameter vector: state weights row by row, then transitions.
    pub fn params(&self) -> Vec<f64> {
        let mut p: Vec<f64> = self.state.iter().flatten().copied().collect();
        p.extend(self.transition.iter().flatten());
        p
    }

    pub fn set_params(&mut self, params: &[f64]) {
        assert_eq!(params.len(), self.num_params(), "parameter vector length");
        let (state, trans) = params.split_at(self.state.len() * NUM_LABELS);
        for (row, chunk) in self.state.iter_mut().zip(state.chunks_exact(NUM_LABELS)) {
            row.copy_from_slice(chunk);
        }
        for (row, chunk) in self.transition.iter_mut().zip(trans.chunks_exact(NUM_LABELS)) {
            row.copy_from_slice(chunk);
        }
    }

    pub fn encode(&self, sentence: &Sentence) -> EncodedSentence {
        sentence_features(sentence)
            .into_iter()
            .map(|fs| fs.iter().filter_map(|f| self.feature_id(f)).collect())
            .collect()
    }

    pub fn potentials_encoded(&self, encoded: &EncodedSentence) -> Potentials {
        let state = encoded
            .iter()
            .map(|ids| {
                let mut row = [0.0; NUM_LABELS];
                for &id in ids {
                    let w = &self.state[id as usize];
                    for y in 0..NUM_LABELS {
                        row[y] += w[y];
                    }
                }
                row
            })
            .collect();
        Potentials {
            state,
            transition: self.transition,
        }
    }

    /// State and transition scores for `sentence`.
    pub fn log_potentials(&self, sentence: &Sentence) -> Potentials {
        self.potentials_encoded(&self.encode(sentence))
    }

    pub fn forward_backward(&self, sentence: &Sentence) -> ForwardBackward {
        self.log_potentials(sentence).forward_backward()
    }

    /// Per-token probability of CARD.
    pub fn card_marginals(&self, sentence: &Sentence) -> Vec<f64> {
        self.forward_backward(sentence)
            .marginals
            .iter()
            .map(|row| row[Label::Card.index()])
            .collect()
    }

    pub fn viterbi(&self, sentence: &Sentence) -> (Vec<Label>, f64) {
        self.log_potentials(sentence).viterbi()
    }
}
