//! Error types shared across the crate.

use std::path::PathBuf;

use thiserror::Error;

use crate::templates::StructureId;

/// Errors raised while loading or validating a lexicon.
#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("failed to read lexicon file {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("failed to parse lexicon: {0}")]
    Parse(String),
    #[error("lexicon has no entries")]
    Empty,
    #[error("dangling subclass reference \"{subclass}\" ({context})")]
    DanglingSubclass { subclass: String, context: String },
    #[error("verb subclass \"{subclass}\" has no compatible {role} subclass")]
    NoCompatibleClass { subclass: String, role: String },
    #[error("entry \"{lemma}\" is missing required form {form}")]
    MissingForm { lemma: String, form: String },
    #[error("duplicate lemma \"{0}\"")]
    DuplicateLemma(String),
}

/// Errors raised while sampling slot fills or realizing sentences.
#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("no valid completion for slot {slot}: {reason}")]
    NoCompletion { slot: String, reason: String },
    #[error("entry \"{lemma}\" is missing form {form} required by {structure:?}")]
    MissingForm {
        lemma: String,
        form: String,
        structure: StructureId,
    },
    #[error("lexicon too small to split content words into disjoint adaptation/test pools: {0}")]
    PoolTooSmall(String),
    #[error("noise probability {name}={value} outside [0, 1]")]
    BadProbability { name: &'static str, value: f64 },
    #[error("unknown lemma \"{0}\" referenced by noise flags")]
    UnknownLemma(String),
}

/// Errors raised by language-model backends.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("token id {id} out of range for vocabulary of size {vocab}")]
    TokenOutOfRange { id: u32, vocab: usize },
    #[error("parameter shapes inconsistent with hyperparameters: {0}")]
    ShapeMismatch(String),
    #[error("empty sentence")]
    EmptySentence,
    #[error("all positions masked as unknown")]
    AllMasked,
    #[error("corpus has {tokens} tokens, smaller than bptt_len {bptt}")]
    CorpusTooSmall { tokens: usize, bptt: usize },
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("empty adaptation sentence list")]
    EmptyAdaptationSet,
    #[error("operation requires an LSTM backend, got {0}")]
    NotLstm(&'static str),
}

/// Errors raised while reading or writing checkpoints and record files.
#[derive(Debug, Error)]
pub enum PersistError {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("bad magic in {path}: expected {expected}, found {found}")]
    BadMagic {
        path: PathBuf,
        expected: String,
        found: String,
    },
    #[error("schema version mismatch in {path}: artifact has v{found}, this build expects v{expected}")]
    VersionMismatch {
        path: PathBuf,
        expected: u32,
        found: u32,
    },
    #[error("corrupt artifact {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
}

/// Errors raised by the experiment grid.
#[derive(Debug, Error)]
pub enum GridError {
    #[error(transparent)]
    Persist(#[from] PersistError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("plan references missing {kind} \"{id}\"")]
    MissingInput { kind: &'static str, id: String },
    #[error("test sentence {sentence_id} in list {list_id} has all tokens unknown")]
    AllUnknown { list_id: u32, sentence_id: u32 },
}

/// Errors raised by metric computations.
#[derive(Debug, Error)]
pub enum MetricError {
    #[error("missing pre/post pair for record {0}")]
    MissingPair(String),
    #[error("need at least 2 observations for a regression fit, got {0}")]
    TooFewObservations(usize),
    #[error("empty cell ({adapt:?}, {test:?})")]
    EmptyCell { adapt: StructureId, test: StructureId },
    #[error("row {row:?}: {reason}")]
    UndefinedRow { row: StructureId, reason: String },
    #[error("class has no usable rows: {0}")]
    EmptyClass(String),
    #[error("minimal pair {index}: {reason}")]
    BadPair { index: usize, reason: String },
}

/// Errors raised by the statistics module.
#[derive(Debug, Error)]
pub enum StatsError {
    #[error("contrast \"{name}\" covers fewer than 2 coding levels")]
    TooFewLevels { name: String },
    #[error("rank-deficient design for contrast \"{name}\"")]
    RankDeficient { name: String },
    #[error("missing analysis input: {0}")]
    MissingInput(String),
}
