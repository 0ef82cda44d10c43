//! Streaming parsers and writers for the line-delimited interchange formats,
//! the sense-number resolution adapter, and the alignment instance filters.
//!
//! Every format is UTF-8 with one JSON record per line. Writers emit a
//! canonical form (fixed field order, sorted member and gap lists, compact
//! JSON), so parse -> serialize -> parse is a fixed point for well-formed
//! files.

mod alignment;
mod filter;
mod lexicon_io;
mod sense_index;
mod sentences;
pub mod validate;

pub use alignment::{
    parse_alignment_file, parse_resolved_alignments, resolve_alignments, serialize_alignment,
    serialize_raw_alignment, write_alignment_file, AlignmentRecord, AnnotatedToken, RawAlignment,
    RawAnnotation, RawToken, ResolveOutcome,
};
pub use filter::{filter_alignments, FilterReport};
pub use lexicon_io::{
    parse_lexicon_file, parse_lexicon_records, serialize_synset, write_lexicon_file,
    RawSynsetRecord,
};
pub use sense_index::{parse_sense_index, serialize_sense_entry, SenseIndex, SenseKey};
pub use sentences::{parse_sentence_file, serialize_sentence, Sentence, SentenceSet};

use std::io::BufRead;

use thiserror::Error;

/// Parser failure tied to an input line. In lenient mode these are collected
/// as diagnostics and the offending line is skipped; in strict mode the first
/// one aborts the parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("read failed: {0}")]
    Io(String),
    #[error("line {line}: invalid JSON: {message}")]
    Syntax { line: u64, message: String },
    #[error("line {line}: field `{field}`: {message}")]
    Schema {
        line: u64,
        field: String,
        message: String,
    },
    #[error("line {line}: unresolved sense key: {message}")]
    UnresolvedKey { line: u64, message: String },
}

impl ParseError {
    pub fn line(&self) -> Option<u64> {
        match self {
            ParseError::Io(_) => None,
            ParseError::Syntax { line, .. }
            | ParseError::Schema { line, .. }
            | ParseError::UnresolvedKey { line, .. } => Some(*line),
        }
    }

    pub(crate) fn schema(line: u64, field: &str, message: impl ToString) -> ParseError {
        ParseError::Schema {
            line,
            field: field.to_string(),
            message: message.to_string(),
        }
    }
}

/// Abort on the first malformed line, or skip it and keep a diagnostic.
/// Validation tooling must not silently accept damage, so strict is the
/// default everywhere a mode is not given explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Lenient,
}

/// Parse outcome: the records of the well-formed lines plus one diagnostic
/// per skipped line (always empty in strict mode).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub records: Vec<T>,
    pub diagnostics: Vec<ParseError>,
}

/// Drive a line-oriented parser over a reader. Blank lines are skipped;
/// line numbers are 1-based and refer to physical lines.
pub(crate) fn parse_lines<T>(
    reader: impl BufRead,
    strictness: Strictness,
    parse_line: impl Fn(u64, &str) -> Result<T, ParseError>,
) -> Result<Parsed<T>, ParseError> {
    let mut records = Vec::new();
    let mut diagnostics = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx as u64 + 1;
        let line = line.map_err(|e| ParseError::Io(e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        match parse_line(line_no, trimmed) {
            Ok(record) => records.push(record),
            Err(err) => match strictness {
                Strictness::Strict => return Err(err),
                Strictness::Lenient => diagnostics.push(err),
            },
        }
    }
    Ok(Parsed {
        records,
        diagnostics,
    })
}

/// Classify a serde_json failure: decoding errors at the JSON level are
/// syntax errors, everything past that is a schema violation.
pub(crate) fn json_error(line: u64, err: &serde_json::Error) -> ParseError {
    if err.is_syntax() || err.is_eof() {
        ParseError::Syntax {
            line,
            message: err.to_string(),
        }
    } else {
        ParseError::Schema {
            line,
            field: String::new(),
            message: err.to_string(),
        }
    }
}
