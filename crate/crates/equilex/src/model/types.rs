use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use super::ModelError;

/// Short lowercase identifier of a natural language, e.g. `en` or `it`.
///
/// Codes are lowercased once at construction and compared case-sensitively
/// afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LanguageId(String);

impl LanguageId {
    pub fn new(code: &str) -> Result<Self, ModelError> {
        let code = code.trim().to_lowercase();
        if code.is_empty() {
            return Err(ModelError::InvalidLanguage(code));
        }
        Ok(LanguageId(code))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for LanguageId {
    type Error = ModelError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        LanguageId::new(&value)
    }
}

impl From<LanguageId> for String {
    fn from(value: LanguageId) -> Self {
        value.0
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The four wordnet parts of speech. Unknown tags are rejected at ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartOfSpeech {
    #[serde(rename = "n")]
    Noun,
    #[serde(rename = "v")]
    Verb,
    #[serde(rename = "a")]
    Adjective,
    #[serde(rename = "r")]
    Adverb,
}

impl PartOfSpeech {
    pub const ALL: [PartOfSpeech; 4] = [
        PartOfSpeech::Noun,
        PartOfSpeech::Verb,
        PartOfSpeech::Adjective,
        PartOfSpeech::Adverb,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            PartOfSpeech::Noun => "n",
            PartOfSpeech::Verb => "v",
            PartOfSpeech::Adjective => "a",
            PartOfSpeech::Adverb => "r",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self, ModelError> {
        match tag {
            "n" => Ok(PartOfSpeech::Noun),
            "v" => Ok(PartOfSpeech::Verb),
            "a" => Ok(PartOfSpeech::Adjective),
            "r" => Ok(PartOfSpeech::Adverb),
            other => Err(ModelError::InvalidPartOfSpeech(other.to_string())),
        }
    }
}

impl FromStr for PartOfSpeech {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PartOfSpeech::from_tag(s)
    }
}

impl fmt::Display for PartOfSpeech {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Normalize a raw word or phrase form: Unicode-lowercase, NFC, and collapse
/// internal whitespace to single spaces.
pub fn normalize_form(raw: &str) -> String {
    raw.to_lowercase()
        .nfc()
        .collect::<String>()
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
}

/// A word of a specific language and part of speech.
///
/// Non-compositional phrases ("single out") are allowed; the form is stored
/// normalized. Part of speech is part of lemma identity: the same surface
/// form used as a noun and as a verb is two distinct lemmas.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lemma {
    pub lang: LanguageId,
    pub form: String,
    pub pos: PartOfSpeech,
}

impl Lemma {
    pub fn new(lang: LanguageId, form: &str, pos: PartOfSpeech) -> Result<Self, ModelError> {
        let normalized = normalize_form(form);
        if normalized.is_empty() {
            return Err(ModelError::InvalidLemmaForm(form.to_string()));
        }
        Ok(Lemma {
            lang,
            form: normalized,
            pos,
        })
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}#{}", self.lang, self.form, self.pos)
    }
}

/// Opaque synset identifier, unique within a lexicon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SynsetId(String);

impl SynsetId {
    pub fn new(id: &str) -> Result<Self, ModelError> {
        if id.is_empty() {
            return Err(ModelError::InvalidSynsetId);
        }
        Ok(SynsetId(id.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for SynsetId {
    type Error = ModelError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        SynsetId::new(&value)
    }
}

impl From<SynsetId> for String {
    fn from(value: SynsetId) -> Self {
        value.0
    }
}

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A word sense: the pairing of a lemma with the synset it is used in.
///
/// Sense identity is the (lemma, synset) pair, so "every sense belongs to
/// exactly one synset" holds structurally. Senses attached to annotations may
/// reference synsets that do not actually list their lemma; that divergence
/// is what the consistency checker reports. Use [`Lexicon::sense`] to build a
/// membership-validated sense.
///
/// [`Lexicon::sense`]: super::Lexicon::sense
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sense {
    pub lemma: Lemma,
    pub synset: SynsetId,
}

impl Sense {
    pub fn new(lemma: Lemma, synset: SynsetId) -> Self {
        Sense { lemma, synset }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lemma, self.synset)
    }
}
