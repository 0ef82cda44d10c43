//! Seeded generator of ground-truth lexicons and sense-annotated bitexts,
//! controlled error injection, and oracle scoring of detection and repair.
//!
//! The generator is the executable model of the theory's assumptions: every
//! emitted alignment draws both senses from one synset, so a clean corpus
//! produces zero exceptions under every checker. Corruption then models the
//! two error classes seen in practice: sense annotations drifting to another
//! synset of the same word (version drift) and alignment links re-attached
//! across synsets.

mod generate;
mod inject;
mod score;

pub use generate::{generate_bitext, generate_lexicon};
pub use inject::{inject_errors, inject_isolated_reannotations};
pub use score::{
    detectability_census, score_correction, score_detection, score_detection_over_detectable,
    CorrectionScore, Detectability, DetectabilityFlags, DetectionScore,
};

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{parse_lines, ParseError, Parsed, Strictness};
use crate::model::{LanguageId, SynsetId};
use crate::verify::{Side, TokenRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("no synset is lexicalized in both `{src}` and `{tgt}`")]
    InsufficientLexicalization { src: LanguageId, tgt: LanguageId },
}

/// Generator parameters. All generation is a pure function of this config;
/// the seed feeds independent streams for the lexicon, the bitext and the
/// error injection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenConfig {
    pub seed: u64,
    pub n_synsets: usize,
    pub languages: Vec<LanguageId>,
    /// Probability that a non-anchor language is a gap in a synset. The
    /// first language is the anchor and is always lexicalized.
    pub gap_rate: f64,
    /// Mean of the members-per-synset-per-language distribution
    /// (1 + Poisson(synonym_rate - 1)).
    pub synonym_rate: f64,
    /// Power-law exponent for word reuse across synsets; smaller values
    /// spread reuse over more of the vocabulary.
    pub polysemy_shape: f64,
    pub n_alignments: usize,
    /// Per-token probability that a sense annotation is swapped for another
    /// synset of the same word.
    pub err_reannotate: f64,
    /// Per-record probability that the target side is re-linked to a word
    /// drawn from a different synset.
    pub err_misalign: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            n_synsets: 1000,
            languages: vec![
                LanguageId::new("en").expect("static code"),
                LanguageId::new("it").expect("static code"),
            ],
            gap_rate: 0.1,
            synonym_rate: 1.5,
            polysemy_shape: 1.5,
            n_alignments: 10_000,
            err_reannotate: 0.01,
            err_misalign: 0.005,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<(), SynthError> {
        if self.n_synsets < 1 {
            return Err(SynthError::InvalidConfig("n_synsets must be >= 1".into()));
        }
        if self.languages.len() < 2 {
            return Err(SynthError::InvalidConfig(
                "at least 2 languages are required".into(),
            ));
        }
        let mut langs = self.languages.clone();
        langs.sort();
        langs.dedup();
        if langs.len() != self.languages.len() {
            return Err(SynthError::InvalidConfig(
                "languages must be distinct".into(),
            ));
        }
        for (name, p) in [
            ("gap_rate", self.gap_rate),
            ("err_reannotate", self.err_reannotate),
            ("err_misalign", self.err_misalign),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(SynthError::InvalidConfig(format!(
                    "{name} must be in [0, 1], got {p}"
                )));
            }
        }
        if !self.synonym_rate.is_finite() || self.synonym_rate < 1.0 {
            return Err(SynthError::InvalidConfig(
                "synonym_rate must be >= 1 (mean members per synset per language)".into(),
            ));
        }
        if !self.polysemy_shape.is_finite() || self.polysemy_shape <= 0.0 {
            return Err(SynthError::InvalidConfig(
                "polysemy_shape must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn from_json(reader: impl io::Read) -> Result<GenConfig, SynthError> {
        let config: GenConfig = serde_json::from_reader(reader)
            .map_err(|e| SynthError::InvalidConfig(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialization cannot fail")
    }
}

/// How an injected error corrupted a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ErrorType {
    #[serde(rename = "reannotate")]
    Reannotate,
    #[serde(rename = "misalign")]
    Misalign,
}

/// One injected error: which token was corrupted, from which synset to
/// which.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthEntry {
    pub error_type: ErrorType,
    pub sent: String,
    pub side: Side,
    pub tok: u32,
    pub true_synset: SynsetId,
    pub corrupt_synset: SynsetId,
}

impl TruthEntry {
    pub fn token(&self) -> TokenRef {
        TokenRef {
            sent: self.sent.clone(),
            side: self.side,
            tok: self.tok,
        }
    }
}

/// The injection log: one entry per injected error.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TruthLog {
    pub entries: Vec<TruthEntry>,
}

impl TruthLog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct TruthLineWire {
    #[serde(rename = "type")]
    error_type: ErrorType,
    sent: String,
    side: Side,
    tok: u32,
    #[serde(rename = "true")]
    true_synset: String,
    corrupt: String,
}

/// Serialize the truth log one entry per line.
pub fn write_truth_file<'a>(
    mut writer: impl Write,
    entries: impl IntoIterator<Item = &'a TruthEntry>,
) -> io::Result<()> {
    for entry in entries {
        let wire = TruthLineWire {
            error_type: entry.error_type,
            sent: entry.sent.clone(),
            side: entry.side,
            tok: entry.tok,
            true_synset: entry.true_synset.to_string(),
            corrupt: entry.corrupt_synset.to_string(),
        };
        let line = serde_json::to_string(&wire).expect("truth serialization cannot fail");
        writeln!(writer, "{line}")?;
    }
    Ok(())
}

/// Parse a truth-log file.
pub fn parse_truth_file(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<Parsed<TruthEntry>, ParseError> {
    parse_lines(reader, strictness, |line, text| {
        let wire: TruthLineWire =
            serde_json::from_str(text).map_err(|e| crate::ingest::json_error(line, &e))?;
        let true_synset =
            SynsetId::new(&wire.true_synset).map_err(|e| ParseError::schema(line, "true", e))?;
        let corrupt_synset =
            SynsetId::new(&wire.corrupt).map_err(|e| ParseError::schema(line, "corrupt", e))?;
        Ok(TruthEntry {
            error_type: wire.error_type,
            sent: wire.sent,
            side: wire.side,
            tok: wire.tok,
            true_synset,
            corrupt_synset,
        })
    })
}
