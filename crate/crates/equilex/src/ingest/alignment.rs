use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::model::{LanguageId, Lemma, PartOfSpeech, Sense, SynsetId};

use super::sense_index::{SenseIndex, SenseKey};
use super::{json_error, parse_lines, ParseError, Parsed, Strictness};

/// One sense annotation as it appears in the file: either a synset id or a
/// versioned sense number to be resolved against a sense index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawAnnotation {
    Synset(SynsetId),
    SenseNumber(u32),
}

/// An aligned token before filtering and sense resolution. A token may carry
/// zero annotations (missing) or several (multi-sense); both are legal at
/// parse time and removed by [`filter_alignments`].
///
/// [`filter_alignments`]: super::filter_alignments
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawToken {
    pub lemma: Lemma,
    pub annotations: Vec<RawAnnotation>,
    pub tok: u32,
}

/// One aligned, annotated token pair as parsed from the alignment file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAlignment {
    pub sent: String,
    pub src: RawToken,
    pub tgt: RawToken,
    pub line: u64,
}

/// A fully resolved annotated token: exactly one synset id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedToken {
    pub lemma: Lemma,
    pub synset: SynsetId,
    pub tok: u32,
}

impl AnnotatedToken {
    pub fn sense(&self) -> Sense {
        Sense::new(self.lemma.clone(), self.synset.clone())
    }
}

/// One aligned sense-annotated token pair: the operational carrier of
/// translational equivalence between the two annotated senses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentRecord {
    pub sent: String,
    pub src: AnnotatedToken,
    pub tgt: AnnotatedToken,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlignmentLineWire {
    sent: Option<String>,
    src: Option<TokenWire>,
    tgt: Option<TokenWire>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TokenWire {
    lang: Option<String>,
    lemma: Option<String>,
    pos: Option<String>,
    #[serde(default)]
    synset: Option<Value>,
    #[serde(default)]
    sense_no: Option<Value>,
    tok: Option<u32>,
}

fn annotation_values(line: u64, field: &str, value: Value) -> Result<Vec<Value>, ParseError> {
    match value {
        Value::Array(items) => {
            if items.is_empty() {
                Err(ParseError::schema(line, field, "empty annotation list"))
            } else {
                Ok(items)
            }
        }
        other => Ok(vec![other]),
    }
}

fn parse_token(line: u64, field: &str, wire: TokenWire) -> Result<RawToken, ParseError> {
    let scoped = |sub: &str| format!("{field}.{sub}");
    let lang = wire
        .lang
        .ok_or_else(|| ParseError::schema(line, &scoped("lang"), "missing"))?;
    let lang = LanguageId::new(&lang).map_err(|e| ParseError::schema(line, &scoped("lang"), e))?;
    let lemma = wire
        .lemma
        .ok_or_else(|| ParseError::schema(line, &scoped("lemma"), "missing"))?;
    let pos = wire
        .pos
        .ok_or_else(|| ParseError::schema(line, &scoped("pos"), "missing"))?;
    let pos =
        PartOfSpeech::from_tag(&pos).map_err(|e| ParseError::schema(line, &scoped("pos"), e))?;
    let lemma =
        Lemma::new(lang, &lemma, pos).map_err(|e| ParseError::schema(line, &scoped("lemma"), e))?;
    let tok = wire
        .tok
        .ok_or_else(|| ParseError::schema(line, &scoped("tok"), "missing"))?;

    let mut annotations = Vec::new();
    match (wire.synset, wire.sense_no) {
        (Some(_), Some(_)) => {
            return Err(ParseError::schema(
                line,
                &scoped("synset"),
                "token carries both `synset` and `sense_no`",
            ));
        }
        (Some(value), None) => {
            for item in annotation_values(line, &scoped("synset"), value)? {
                let id = item.as_str().ok_or_else(|| {
                    ParseError::schema(line, &scoped("synset"), "must be a string")
                })?;
                let id = SynsetId::new(id)
                    .map_err(|e| ParseError::schema(line, &scoped("synset"), e))?;
                annotations.push(RawAnnotation::Synset(id));
            }
        }
        (None, Some(value)) => {
            for item in annotation_values(line, &scoped("sense_no"), value)? {
                let n = item
                    .as_u64()
                    .filter(|n| *n >= 1 && *n <= u32::MAX as u64)
                    .ok_or_else(|| {
                        ParseError::schema(line, &scoped("sense_no"), "must be a positive integer")
                    })?;
                annotations.push(RawAnnotation::SenseNumber(n as u32));
            }
        }
        (None, None) => {}
    }
    Ok(RawToken {
        lemma,
        annotations,
        tok,
    })
}

fn parse_record(line: u64, text: &str) -> Result<RawAlignment, ParseError> {
    let wire: AlignmentLineWire = serde_json::from_str(text).map_err(|e| json_error(line, &e))?;
    let sent = wire
        .sent
        .filter(|s| !s.is_empty())
        .ok_or_else(|| ParseError::schema(line, "sent", "missing or empty"))?;
    let src = parse_token(
        line,
        "src",
        wire.src
            .ok_or_else(|| ParseError::schema(line, "src", "missing"))?,
    )?;
    let tgt = parse_token(
        line,
        "tgt",
        wire.tgt
            .ok_or_else(|| ParseError::schema(line, "tgt", "missing"))?,
    )?;
    if src.lemma.lang == tgt.lemma.lang {
        return Err(ParseError::schema(
            line,
            "tgt.lang",
            format!("source and target language are both `{}`", src.lemma.lang),
        ));
    }
    Ok(RawAlignment {
        sent,
        src,
        tgt,
        line,
    })
}

/// Parse an alignment file into raw records, preserving input order.
pub fn parse_alignment_file(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<Parsed<RawAlignment>, ParseError> {
    parse_lines(reader, strictness, parse_record)
}

/// Outcome of resolving raw alignments: the usable records plus a diagnostic
/// for every record dropped on the way. Dropped records never form theorem
/// instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolveOutcome {
    pub records: Vec<AlignmentRecord>,
    pub dropped: Vec<ParseError>,
}

fn resolve_token(
    token: &RawToken,
    sent: &str,
    line: u64,
    side: &str,
    index: Option<&SenseIndex>,
) -> Result<AnnotatedToken, ParseError> {
    let annotation = match token.annotations.as_slice() {
        [one] => one,
        [] => {
            return Err(ParseError::schema(
                line,
                &format!("{side}.synset"),
                format!("token has no sense annotation (sentence `{sent}`)"),
            ))
        }
        many => {
            return Err(ParseError::schema(
                line,
                &format!("{side}.synset"),
                format!("token carries {} sense annotations", many.len()),
            ))
        }
    };
    let synset = match annotation {
        RawAnnotation::Synset(id) => id.clone(),
        RawAnnotation::SenseNumber(n) => {
            let key = SenseKey {
                lemma: token.lemma.clone(),
                sense_number: *n,
            };
            match index {
                Some(index) => index
                    .resolve(&key)
                    .map_err(|e| ParseError::UnresolvedKey {
                        line,
                        message: e.to_string(),
                    })?
                    .clone(),
                None => {
                    return Err(ParseError::UnresolvedKey {
                        line,
                        message: format!(
                            "token `{}` uses sense number {n} but no sense index was supplied",
                            token.lemma
                        ),
                    })
                }
            }
        }
    };
    Ok(AnnotatedToken {
        lemma: token.lemma.clone(),
        synset,
        tok: token.tok,
    })
}

/// Resolve filtered raw alignments into annotated records, translating sense
/// numbers through `index` when present. Records whose keys cannot be
/// resolved are dropped with a diagnostic.
pub fn resolve_alignments(
    records: impl IntoIterator<Item = RawAlignment>,
    index: Option<&SenseIndex>,
) -> ResolveOutcome {
    let mut out = Vec::new();
    let mut dropped = Vec::new();
    for record in records {
        let src = resolve_token(&record.src, &record.sent, record.line, "src", index);
        let tgt = resolve_token(&record.tgt, &record.sent, record.line, "tgt", index);
        match (src, tgt) {
            (Ok(src), Ok(tgt)) => out.push(AlignmentRecord {
                sent: record.sent,
                src,
                tgt,
            }),
            (Err(e), _) | (_, Err(e)) => dropped.push(e),
        }
    }
    ResolveOutcome {
        records: out,
        dropped,
    }
}

/// Parse an alignment file that is already in resolved form: every token
/// carries exactly one synset-id annotation.
pub fn parse_resolved_alignments(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<Parsed<AlignmentRecord>, ParseError> {
    parse_lines(reader, strictness, |line, text| {
        let raw = parse_record(line, text)?;
        let src = resolve_token(&raw.src, &raw.sent, line, "src", None)?;
        let tgt = resolve_token(&raw.tgt, &raw.sent, line, "tgt", None)?;
        Ok(AlignmentRecord {
            sent: raw.sent,
            src,
            tgt,
        })
    })
}

#[derive(Serialize)]
struct TokenOut<'a> {
    lang: &'a str,
    lemma: &'a str,
    pos: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    synset: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sense_no: Option<Value>,
    tok: u32,
}

#[derive(Serialize)]
struct AlignmentLineOut<'a> {
    sent: &'a str,
    src: TokenOut<'a>,
    tgt: TokenOut<'a>,
}

fn raw_token_out(token: &RawToken) -> TokenOut<'_> {
    let mut synsets = Vec::new();
    let mut numbers = Vec::new();
    for ann in &token.annotations {
        match ann {
            RawAnnotation::Synset(id) => synsets.push(Value::from(id.as_str())),
            RawAnnotation::SenseNumber(n) => numbers.push(Value::from(*n)),
        }
    }
    let collapse = |mut values: Vec<Value>| match values.len() {
        0 => None,
        1 => Some(values.pop().expect("length checked")),
        _ => Some(Value::Array(values)),
    };
    TokenOut {
        lang: token.lemma.lang.as_str(),
        lemma: &token.lemma.form,
        pos: token.lemma.pos.tag(),
        synset: collapse(synsets),
        sense_no: collapse(numbers),
        tok: token.tok,
    }
}

fn resolved_token_out(token: &AnnotatedToken) -> TokenOut<'_> {
    TokenOut {
        lang: token.lemma.lang.as_str(),
        lemma: &token.lemma.form,
        pos: token.lemma.pos.tag(),
        synset: Some(Value::from(token.synset.as_str())),
        sense_no: None,
        tok: token.tok,
    }
}

/// Canonical single-line serialization of a raw alignment record.
pub fn serialize_raw_alignment(record: &RawAlignment) -> String {
    let out = AlignmentLineOut {
        sent: &record.sent,
        src: raw_token_out(&record.src),
        tgt: raw_token_out(&record.tgt),
    };
    serde_json::to_string(&out).expect("alignment line serialization cannot fail")
}

/// Canonical single-line serialization of a resolved alignment record.
pub fn serialize_alignment(record: &AlignmentRecord) -> String {
    let out = AlignmentLineOut {
        sent: &record.sent,
        src: resolved_token_out(&record.src),
        tgt: resolved_token_out(&record.tgt),
    };
    serde_json::to_string(&out).expect("alignment line serialization cannot fail")
}

/// Write resolved alignment records one per line in canonical form.
pub fn write_alignment_file<'a>(
    mut writer: impl Write,
    records: impl IntoIterator<Item = &'a AlignmentRecord>,
) -> io::Result<()> {
    for record in records {
        writeln!(writer, "{}", serialize_alignment(record))?;
    }
    Ok(())
}
