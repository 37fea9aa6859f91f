//! Linear-chain CRF over the labels CARD and O.

mod features;
mod inference;
mod io;
mod model;
mod optimize;
mod train;

pub use features::{
    extract_features, feature_lemmas, sentence_features, BOS, EOS, NUM_PLACEHOLDER, TEMPLATE_VERSION,
};
pub use inference::{logsumexp, ForwardBackward, Potentials, NUM_LABELS};
pub use io::{load_model, read_model, save_model, write_model};
pub use model::{CrfModel, EncodedSentence};
pub use train::{
    log_likelihood_and_gradient, train, train_with_report, TrainConfig, TrainReport, TrainingSequence,
};
