//! The multilingual lexicon model: languages, lemmas, multi-synsets and the
//! synonymy / translation predicates defined over them.
//!
//! A [`Lexicon`] is an immutable collection of [`MultiSynset`]s together with
//! an inverse lemma index. Synsets act as the equivalence classes of sense
//! synonymy: two senses are synonymous exactly when they carry the same
//! synset id, so the predicates here reduce to set operations on synset-id
//! sets.

mod lexicon;
mod pairs;
mod synset;
mod types;

pub use lexicon::{build_lexicon, senses_synonymous, Lexicon};
pub use pairs::{SynsetWitness, WitnessReport, WitnessStatus};
pub use synset::MultiSynset;
pub use types::{normalize_form, LanguageId, Lemma, PartOfSpeech, Sense, SynsetId};

use thiserror::Error;

/// Errors raised by lexicon construction and the query predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid language code `{0}`: must be non-empty")]
    InvalidLanguage(String),
    #[error("unknown part-of-speech tag `{0}` (expected one of n, v, a, r)")]
    InvalidPartOfSpeech(String),
    #[error("invalid lemma form `{0}`: empty after normalization")]
    InvalidLemmaForm(String),
    #[error("synset id must be non-empty")]
    InvalidSynsetId,
    #[error("duplicate synset id `{0}`")]
    DuplicateSynsetId(SynsetId),
    #[error("synset `{synset}`: language `{lang}` appears in both members and gaps")]
    MemberGapConflict { synset: SynsetId, lang: LanguageId },
    #[error("synset `{0}` has no members in any language")]
    EmptySynset(SynsetId),
    #[error("synset `{synset}`: member list for `{lang}` is empty")]
    EmptyMemberSet { synset: SynsetId, lang: LanguageId },
    #[error("synset `{synset}`: duplicate member form `{form}` in `{lang}`")]
    DuplicateMemberForm {
        synset: SynsetId,
        lang: LanguageId,
        form: String,
    },
    #[error("unknown lemma `{0}`")]
    UnknownLemma(Lemma),
    #[error("unknown synset id `{0}`")]
    UnknownSynset(SynsetId),
    #[error("lemmas `{a}` and `{b}` are in different languages")]
    LanguageMismatch { a: Lemma, b: Lemma },
    #[error("lemmas `{a}` and `{b}` have different parts of speech")]
    PosMismatch { a: Lemma, b: Lemma },
    #[error("expected two distinct languages, got `{0}` twice")]
    SameLanguage(LanguageId),
    #[error("`{a}` and `{b}` are not near-synonyms: they share no synset")]
    NotNearSynonyms { a: Lemma, b: Lemma },
    #[error("`{lemma}` is not a member of synset `{synset}`")]
    SenseNotInSynset { lemma: Lemma, synset: SynsetId },
}
