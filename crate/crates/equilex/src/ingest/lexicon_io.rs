use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::model::{LanguageId, MultiSynset, PartOfSpeech, SynsetId};

use super::{json_error, parse_lines, ParseError, Parsed, Strictness};

/// Lexicon file record as parsed, before the synset invariants are applied.
/// `cmd validate` works on these so that semantic violations (member/gap
/// conflicts, duplicate forms) can be reported as findings rather than parse
/// failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSynsetRecord {
    pub id: SynsetId,
    pub pos: PartOfSpeech,
    pub members: Vec<(LanguageId, Vec<String>)>,
    pub gaps: Vec<LanguageId>,
    pub line: u64,
}

impl RawSynsetRecord {
    pub fn into_synset(self) -> Result<MultiSynset, crate::model::ModelError> {
        MultiSynset::new(self.id, self.pos, self.members, self.gaps)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LexiconLineWire {
    id: Option<String>,
    pos: Option<String>,
    members: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    gaps: Vec<String>,
}

#[derive(Serialize)]
struct LexiconLineOut<'a> {
    id: &'a str,
    pos: &'a str,
    members: BTreeMap<&'a str, Vec<&'a str>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    gaps: Vec<&'a str>,
}

fn parse_record(line: u64, text: &str) -> Result<RawSynsetRecord, ParseError> {
    let wire: LexiconLineWire = serde_json::from_str(text).map_err(|e| json_error(line, &e))?;
    let id = wire
        .id
        .ok_or_else(|| ParseError::schema(line, "id", "missing"))?;
    let id = SynsetId::new(&id).map_err(|e| ParseError::schema(line, "id", e))?;
    let pos = wire
        .pos
        .ok_or_else(|| ParseError::schema(line, "pos", "missing"))?;
    let pos = PartOfSpeech::from_tag(&pos).map_err(|e| ParseError::schema(line, "pos", e))?;
    let members = wire
        .members
        .ok_or_else(|| ParseError::schema(line, "members", "missing"))?;
    let mut parsed_members = Vec::with_capacity(members.len());
    for (code, forms) in members {
        let lang = LanguageId::new(&code).map_err(|e| ParseError::schema(line, "members", e))?;
        parsed_members.push((lang, forms));
    }
    let mut gaps = Vec::with_capacity(wire.gaps.len());
    for code in wire.gaps {
        gaps.push(LanguageId::new(&code).map_err(|e| ParseError::schema(line, "gaps", e))?);
    }
    Ok(RawSynsetRecord {
        id,
        pos,
        members: parsed_members,
        gaps,
        line,
    })
}

/// Parse a lexicon file into raw records, checking shape only.
pub fn parse_lexicon_records(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<Parsed<RawSynsetRecord>, ParseError> {
    parse_lines(reader, strictness, parse_record)
}

/// Parse a lexicon file into validated multi-synsets. Synset invariant
/// violations are reported as schema diagnostics on their line.
pub fn parse_lexicon_file(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<Parsed<MultiSynset>, ParseError> {
    parse_lines(reader, strictness, |line, text| {
        let record = parse_record(line, text)?;
        record
            .into_synset()
            .map_err(|e| ParseError::schema(line, "members", e))
    })
}

/// Canonical single-line serialization of a synset.
pub fn serialize_synset(synset: &MultiSynset) -> String {
    let out = LexiconLineOut {
        id: synset.id().as_str(),
        pos: synset.pos().tag(),
        members: synset
            .members()
            .iter()
            .map(|(lang, forms)| (lang.as_str(), forms.iter().map(String::as_str).collect()))
            .collect(),
        gaps: synset.gaps().iter().map(LanguageId::as_str).collect(),
    };
    serde_json::to_string(&out).expect("lexicon line serialization cannot fail")
}

/// Write synsets one per line in canonical form.
pub fn write_lexicon_file<'a>(
    mut writer: impl Write,
    synsets: impl IntoIterator<Item = &'a MultiSynset>,
) -> io::Result<()> {
    for synset in synsets {
        writeln!(writer, "{}", serialize_synset(synset))?;
    }
    Ok(())
}
