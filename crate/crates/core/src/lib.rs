//! Relation cardinality extraction.
//!
//! Given text about a knowledge-base subject, `cardex` finds the numeric
//! expression that states how many objects the subject has for a predicate
//! ("her two children" for `child`). Training labels come from distant
//! supervision against knowledge-base triple counts; a linear-chain CRF
//! scores every numeric token, and the per-token marginals are turned into a
//! single count per (subject, predicate).
//!
//! The pipeline is split into:
//!
//! * [`corpus`]: documents, tokenization, lemmatization, KB and gold loading.
//! * [`numtag`]: numeric expression tagging, number-word parsing, the
//!   noun-modifier heuristic and zero/one phrase translation.
//! * [`supervise`]: label generation under the supervision modes.
//! * [`crf`]: features, inference, training and model files.
//! * [`extract`]: count prediction, the random baseline and consolidation.
//! * [`eval`]: precision/recall/F1 and numeric tag census.
//! * [`cli`]: the `cardex` command line.

pub mod cli;
pub mod corpus;
pub mod crf;
mod error;
pub mod eval;
pub mod extract;
pub mod numtag;
pub mod supervise;

pub use error::{Error, Result};
