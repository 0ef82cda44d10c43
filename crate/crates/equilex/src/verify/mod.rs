//! Theorem-premise enumeration over sense-annotated bitexts and the
//! exception detectors built on it.
//!
//! The checkers share one shape: enumerate every instance that satisfies a
//! premise (two source senses aligned to the same target sense; to distinct
//! but synonymous target senses; two words sharing a translation; one aligned
//! annotated pair), then flag the instances whose conclusion fails. On any
//! corpus whose annotations are drawn consistently from a single lexicon the
//! checkers report nothing; every flag points at an annotation or resource
//! error.

mod consistency;
mod instances;
mod substitution;
mod word_check;

pub use consistency::{
    check_alignment_consistency, ConsistencyIssue, ConsistencyReport, ConsistencyViolation,
};
pub use instances::{
    detect_sense_exceptions, enumerate_cor1_triples, enumerate_thm1_quads, AlignedPair,
    QuadInstance, SenseInstance, TripleInstance,
};
pub use substitution::{generate_substitution_candidates, SubstitutionCandidate};
pub use word_check::{
    check_word_theorem, WordCategory, WordCategoryCounts, WordCheckReport, WordTriple,
};

use std::fmt;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{parse_lines, AlignmentRecord, ParseError, Parsed, Strictness};
use crate::model::{LanguageId, Lemma, PartOfSpeech, Sense, SynsetId};

/// Which side of the alignment file plays the role of the premise's source
/// language. `SourceToTarget` reads the file as written; `TargetToSource`
/// swaps the roles, equivalent to enumerating the swapped corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    SourceToTarget,
    TargetToSource,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::SourceToTarget, Direction::TargetToSource];

    pub fn tag(&self) -> &'static str {
        match self {
            Direction::SourceToTarget => "st",
            Direction::TargetToSource => "ts",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Direction> {
        match tag {
            "st" => Some(Direction::SourceToTarget),
            "ts" => Some(Direction::TargetToSource),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A physical side of an alignment record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "src")]
    Src,
    #[serde(rename = "tgt")]
    Tgt,
}

impl Side {
    pub fn tag(&self) -> &'static str {
        match self {
            Side::Src => "src",
            Side::Tgt => "tgt",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Identity of one annotated token occurrence in the bitext.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TokenRef {
    pub sent: String,
    pub side: Side,
    pub tok: u32,
}

/// Provenance of one witnessing alignment record: the sentence plus the
/// token indices of both sides.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairOccurrence {
    pub sent: String,
    pub src_tok: u32,
    pub tgt_tok: u32,
}

impl PairOccurrence {
    pub fn of(record: &AlignmentRecord) -> PairOccurrence {
        PairOccurrence {
            sent: record.sent.clone(),
            src_tok: record.src.tok,
            tgt_tok: record.tgt.tok,
        }
    }

    pub fn token(&self, side: Side) -> TokenRef {
        TokenRef {
            sent: self.sent.clone(),
            side,
            tok: match side {
                Side::Src => self.src_tok,
                Side::Tgt => self.tgt_tok,
            },
        }
    }

    /// The token carrying the premise's source-role sense under `direction`.
    pub fn source_token(&self, direction: Direction) -> TokenRef {
        self.token(source_side(direction))
    }
}

/// File side playing the source role under a direction.
pub fn source_side(direction: Direction) -> Side {
    match direction {
        Direction::SourceToTarget => Side::Src,
        Direction::TargetToSource => Side::Tgt,
    }
}

/// The oriented view of a record: (source sense, target sense) under a
/// direction.
pub(crate) fn orient(record: &AlignmentRecord, direction: Direction) -> (Sense, Sense) {
    match direction {
        Direction::SourceToTarget => (record.src.sense(), record.tgt.sense()),
        Direction::TargetToSource => (record.tgt.sense(), record.src.sense()),
    }
}

/// Errors raised by the verification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("synset id `{synset}` is not in the lexicon (sentence `{sent}`, {side} token {tok})")]
    UnresolvedSynset {
        synset: SynsetId,
        sent: String,
        side: Side,
        tok: u32,
    },
    #[error("no sentence in the sentence file covers the exception witnessed in `{sent}`")]
    MissingSentence { sent: String },
    #[error("token index {tok} is out of range for sentence `{sent}` ({len} tokens)")]
    TokenOutOfRange { sent: String, tok: u32, len: usize },
}

/// First unresolved annotation, if any: strict-mode gate before enumeration.
pub fn ensure_resolved(
    records: &[AlignmentRecord],
    lex: &crate::model::Lexicon,
) -> Result<(), VerifyError> {
    for record in records {
        for (side, token) in [(Side::Src, &record.src), (Side::Tgt, &record.tgt)] {
            if !lex.contains_synset(&token.synset) {
                return Err(VerifyError::UnresolvedSynset {
                    synset: token.synset.clone(),
                    sent: record.sent.clone(),
                    side,
                    tok: token.tok,
                });
            }
        }
    }
    Ok(())
}

/// Split records into those whose annotations resolve in the lexicon and a
/// diagnostic per dropped record: lenient-mode gate.
pub fn partition_resolved(
    records: Vec<AlignmentRecord>,
    lex: &crate::model::Lexicon,
) -> (Vec<AlignmentRecord>, Vec<VerifyError>) {
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for record in records {
        match ensure_resolved(std::slice::from_ref(&record), lex) {
            Ok(()) => kept.push(record),
            Err(err) => dropped.push(err),
        }
    }
    (kept, dropped)
}

/// A detected violation: an instance that satisfies its theorem's premise
/// but not its conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionRecord {
    pub direction: Direction,
    pub exception: Exception,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exception {
    Triple(TripleInstance),
    Quad(QuadInstance),
    Word(WordTriple),
    Consistency(ConsistencyViolation),
}

impl ExceptionRecord {
    pub fn kind_tag(&self) -> &'static str {
        match &self.exception {
            Exception::Triple(_) => "TRIPLE",
            Exception::Quad(_) => "QUAD",
            Exception::Word(_) => "WORD",
            Exception::Consistency(_) => "CONSISTENCY",
        }
    }

    /// Every token occurrence that witnesses this exception, sorted and
    /// deduplicated. Both sides of each witnessing record are included, so
    /// an exception can always be traced back to any of its tokens.
    pub fn support_refs(&self) -> Vec<TokenRef> {
        let occurrences: Vec<&PairOccurrence> = match &self.exception {
            Exception::Triple(t) => t.support_a.iter().chain(t.support_b.iter()).collect(),
            Exception::Quad(q) => q
                .pair_1
                .support
                .iter()
                .chain(q.pair_2.support.iter())
                .collect(),
            Exception::Word(w) => w.support_a.iter().chain(w.support_b.iter()).collect(),
            Exception::Consistency(c) => c.support.iter().collect(),
        };
        let mut refs: Vec<TokenRef> = occurrences
            .into_iter()
            .flat_map(|occ| [occ.token(Side::Src), occ.token(Side::Tgt)])
            .collect();
        refs.sort();
        refs.dedup();
        refs
    }

    fn senses_wire(&self) -> Vec<SenseWire> {
        match &self.exception {
            Exception::Triple(t) => vec![
                SenseWire::of(&t.src_a),
                SenseWire::of(&t.src_b),
                SenseWire::of(&t.tgt),
            ],
            Exception::Quad(q) => vec![
                SenseWire::of(&q.pair_1.source),
                SenseWire::of(&q.pair_1.target),
                SenseWire::of(&q.pair_2.source),
                SenseWire::of(&q.pair_2.target),
            ],
            Exception::Word(w) => vec![
                SenseWire::of_lemma(&w.e_a),
                SenseWire::of_lemma(&w.e_b),
                SenseWire::of_lemma(&w.shared),
            ],
            Exception::Consistency(c) => match &c.issue {
                ConsistencyIssue::SynsetMismatch { src, tgt } => {
                    vec![SenseWire::of(src), SenseWire::of(tgt)]
                }
                ConsistencyIssue::Membership { sense, .. } => vec![SenseWire::of(sense)],
            },
        }
    }

    pub fn to_line(&self) -> ExceptionLine {
        let detail = match &self.exception {
            Exception::Consistency(c) => Some(
                match c.issue {
                    ConsistencyIssue::SynsetMismatch { .. } => "mismatch",
                    ConsistencyIssue::Membership { .. } => "membership",
                }
                .to_string(),
            ),
            _ => None,
        };
        ExceptionLine {
            kind: self.kind_tag().to_string(),
            direction: self.direction.tag().to_string(),
            detail,
            senses: self.senses_wire(),
            support: self.support_refs(),
        }
    }
}

/// Wire form of one exception record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionLine {
    pub kind: String,
    pub direction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub senses: Vec<SenseWire>,
    pub support: Vec<TokenRef>,
}

/// Wire form of a sense (or bare word, for word-level exceptions).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SenseWire {
    pub lang: String,
    pub lemma: String,
    pub pos: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub synset: Option<String>,
}

impl SenseWire {
    fn of(sense: &Sense) -> SenseWire {
        SenseWire {
            lang: sense.lemma.lang.to_string(),
            lemma: sense.lemma.form.clone(),
            pos: sense.lemma.pos.tag().to_string(),
            synset: Some(sense.synset.to_string()),
        }
    }

    fn of_lemma(lemma: &Lemma) -> SenseWire {
        SenseWire {
            lang: lemma.lang.to_string(),
            lemma: lemma.form.clone(),
            pos: lemma.pos.tag().to_string(),
            synset: None,
        }
    }

    pub fn lemma(&self) -> Result<Lemma, crate::model::ModelError> {
        Lemma::new(
            LanguageId::new(&self.lang)?,
            &self.lemma,
            PartOfSpeech::from_tag(&self.pos)?,
        )
    }
}

/// Serialize one exception per line.
pub fn write_exceptions_file<'a>(
    mut writer: impl Write,
    exceptions: impl IntoIterator<Item = &'a ExceptionRecord>,
) -> io::Result<()> {
    for exception in exceptions {
        let line = serde_json::to_string(&exception.to_line())
            .expect("exception serialization cannot fail");
        writeln!(writer, "{line}")?;
    }
    Ok(())
}

/// Parse an exceptions file back into wire records (used by scoring).
pub fn parse_exceptions_file(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<Parsed<ExceptionLine>, ParseError> {
    parse_lines(reader, strictness, |line, text| {
        serde_json::from_str(text).map_err(|e| crate::ingest::json_error(line, &e))
    })
}

/// Instance/exception tally for one check run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub instances: usize,
    pub exceptions: usize,
}
