//! Consistency checking and automatic repair for multi-wordnets and
//! sense-annotated parallel corpora.
//!
//! Synsets are treated as equivalence classes of sense identity: two senses
//! are synonymous exactly when they share a synset, and aligned senses in a
//! bitext assert translational equivalence. That single idea makes lexical
//! resources checkable: any pair of aligned annotations that cannot sit in
//! one multi-synset is an error in the corpus or the lexicon, and most such
//! errors are mechanically correctable.
//!
//! The crate is organized as a pipeline:
//!
//! - [`model`] — the immutable multilingual lexicon and the synonymy /
//!   translation predicates;
//! - [`ingest`] — streaming parsers and canonical writers for the
//!   line-delimited interchange formats, plus the instance filters;
//! - [`verify`] — theorem-premise enumeration and exception detection;
//! - [`repair`] — the correction algorithm and its application;
//! - [`synth`] — seeded ground-truth generation, error injection and oracle
//!   scoring;
//! - [`cli`] — the `equilex` binary's subcommands.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `lexicon_queries` and `repair_pipeline`.

pub mod cli;
pub mod ingest;
pub mod model;
pub mod repair;
pub mod synth;
pub mod verify;

pub use ingest::{AlignmentRecord, AnnotatedToken, FilterReport, SenseIndex, Strictness};
pub use model::{
    build_lexicon, senses_synonymous, LanguageId, Lemma, Lexicon, ModelError, MultiSynset,
    PartOfSpeech, Sense, SynsetId,
};
pub use repair::{CorrectionSuggestion, RepairPolicy, RepairReport, SuggestionKind};
pub use synth::GenConfig;
pub use verify::{Direction, ExceptionRecord, Side, TokenRef};
