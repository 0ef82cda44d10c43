use std::collections::BTreeMap;
use std::io::BufRead;

use serde::Serialize;
use thiserror::Error;

use crate::model::{LanguageId, Lemma, PartOfSpeech, SynsetId};

use super::{json_error, parse_lines, ParseError, Parsed, Strictness};

/// A versioned sense identifier: a lemma plus its 1-based sense number in
/// some wordnet numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SenseKey {
    pub lemma: Lemma,
    pub sense_number: u32,
}

/// Signals an out-of-inventory annotation: the sense number does not exist
/// for the lemma in the supplied numbering. Itself a detectable error class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("sense number {number} of `{lemma}` is not in the index ({available} senses listed)")]
pub struct UnresolvedKey {
    pub lemma: Lemma,
    pub number: u32,
    pub available: usize,
}

/// Maps versioned sense numbers to synset ids: for each lemma, the synset of
/// sense *n* is the *n*-th entry. Distinct sense numbers of one lemma always
/// map to distinct synsets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SenseIndex {
    map: BTreeMap<Lemma, Vec<SynsetId>>,
}

impl SenseIndex {
    pub fn insert(&mut self, lemma: Lemma, senses: Vec<SynsetId>) -> Result<(), ParseError> {
        // Injectivity per lemma: duplicate synsets in the numbering would
        // put one sense in two positions.
        let mut seen = senses.clone();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(ParseError::schema(
                0,
                "senses",
                format!("duplicate synset id in the numbering of `{lemma}`"),
            ));
        }
        if senses.is_empty() {
            return Err(ParseError::schema(0, "senses", "empty sense list"));
        }
        if self.map.insert(lemma.clone(), senses).is_some() {
            return Err(ParseError::schema(
                0,
                "lemma",
                format!("duplicate sense-index entry for `{lemma}`"),
            ));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// The synset id a numbered sense denotes.
    pub fn resolve(&self, key: &SenseKey) -> Result<&SynsetId, UnresolvedKey> {
        let senses = self.map.get(&key.lemma);
        let available = senses.map_or(0, Vec::len);
        senses
            .and_then(|s| {
                key.sense_number
                    .checked_sub(1)
                    .and_then(|i| s.get(i as usize))
            })
            .ok_or_else(|| UnresolvedKey {
                lemma: key.lemma.clone(),
                number: key.sense_number,
                available,
            })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Lemma, &Vec<SynsetId>)> {
        self.map.iter()
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct SenseLineWire {
    lang: Option<String>,
    lemma: Option<String>,
    pos: Option<String>,
    senses: Option<Vec<String>>,
}

#[derive(Serialize)]
struct SenseLineOut<'a> {
    lang: &'a str,
    lemma: &'a str,
    pos: &'a str,
    senses: Vec<&'a str>,
}

/// Parse a sense-index file. In lenient mode malformed or duplicate lines
/// are skipped with diagnostics.
pub fn parse_sense_index(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<(SenseIndex, Vec<ParseError>), ParseError> {
    let parsed: Parsed<(Lemma, Vec<SynsetId>)> = parse_lines(reader, strictness, |line, text| {
        let wire: SenseLineWire = serde_json::from_str(text).map_err(|e| json_error(line, &e))?;
        let lang = wire
            .lang
            .ok_or_else(|| ParseError::schema(line, "lang", "missing"))?;
        let lang = LanguageId::new(&lang).map_err(|e| ParseError::schema(line, "lang", e))?;
        let pos = wire
            .pos
            .ok_or_else(|| ParseError::schema(line, "pos", "missing"))?;
        let pos = PartOfSpeech::from_tag(&pos).map_err(|e| ParseError::schema(line, "pos", e))?;
        let form = wire
            .lemma
            .ok_or_else(|| ParseError::schema(line, "lemma", "missing"))?;
        let lemma =
            Lemma::new(lang, &form, pos).map_err(|e| ParseError::schema(line, "lemma", e))?;
        let senses = wire
            .senses
            .ok_or_else(|| ParseError::schema(line, "senses", "missing"))?;
        let mut ids = Vec::with_capacity(senses.len());
        for id in senses {
            ids.push(SynsetId::new(&id).map_err(|e| ParseError::schema(line, "senses", e))?);
        }
        Ok((lemma, ids))
    })?;

    let mut index = SenseIndex::default();
    let mut diagnostics = parsed.diagnostics;
    for (lemma, senses) in parsed.records {
        if let Err(err) = index.insert(lemma, senses) {
            match strictness {
                Strictness::Strict => return Err(err),
                Strictness::Lenient => diagnostics.push(err),
            }
        }
    }
    Ok((index, diagnostics))
}

/// Canonical single-line serialization of one sense-index entry.
pub fn serialize_sense_entry(lemma: &Lemma, senses: &[SynsetId]) -> String {
    let out = SenseLineOut {
        lang: lemma.lang.as_str(),
        lemma: &lemma.form,
        pos: lemma.pos.tag(),
        senses: senses.iter().map(SynsetId::as_str).collect(),
    };
    serde_json::to_string(&out).expect("sense line serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn lemma(form: &str) -> Lemma {
        Lemma::new(LanguageId::new("en").unwrap(), form, PartOfSpeech::Noun).unwrap()
    }

    fn sid(id: &str) -> SynsetId {
        SynsetId::new(id).unwrap()
    }

    #[test]
    fn resolves_present_keys_and_rejects_overflow() {
        let mut index = SenseIndex::default();
        index
            .insert(lemma("test"), vec![sid("S1"), sid("S4")])
            .unwrap();
        let ok = SenseKey {
            lemma: lemma("test"),
            sense_number: 2,
        };
        assert_eq!(index.resolve(&ok).unwrap(), &sid("S4"));
        let over = SenseKey {
            lemma: lemma("test"),
            sense_number: 3,
        };
        let err = index.resolve(&over).unwrap_err();
        assert_eq!(err.available, 2);
        let zero = SenseKey {
            lemma: lemma("test"),
            sense_number: 0,
        };
        assert!(index.resolve(&zero).is_err());
    }

    #[test]
    fn five_lemma_fixture_matches_hand_built_map() {
        let mut text = String::new();
        let fixtures = [
            ("alpha", vec!["S1"]),
            ("beta", vec!["S2", "S3"]),
            ("gamma", vec!["S4"]),
            ("delta", vec!["S5", "S6", "S7"]),
            ("epsilon", vec!["S8"]),
        ];
        for (form, ids) in &fixtures {
            let quoted: Vec<String> = ids.iter().map(|i| format!("\"{i}\"")).collect();
            text.push_str(&format!(
                "{{\"lang\":\"en\",\"lemma\":\"{form}\",\"pos\":\"n\",\"senses\":[{}]}}\n",
                quoted.join(",")
            ));
        }
        let (index, diags) = parse_sense_index(Cursor::new(&text), Strictness::Strict).unwrap();
        assert!(diags.is_empty());
        for (form, ids) in &fixtures {
            for (i, id) in ids.iter().enumerate() {
                let key = SenseKey {
                    lemma: lemma(form),
                    sense_number: i as u32 + 1,
                };
                assert_eq!(index.resolve(&key).unwrap(), &sid(id));
            }
        }
        // Round-trip through the canonical writer.
        let rendered: String = index
            .entries()
            .map(|(l, s)| serialize_sense_entry(l, s) + "\n")
            .collect();
        let (reparsed, _) = parse_sense_index(Cursor::new(&rendered), Strictness::Strict).unwrap();
        assert_eq!(reparsed, index);
    }

    #[test]
    fn duplicate_entries_are_schema_errors() {
        let text = "{\"lang\":\"en\",\"lemma\":\"test\",\"pos\":\"n\",\"senses\":[\"S1\"]}\n{\"lang\":\"en\",\"lemma\":\"test\",\"pos\":\"n\",\"senses\":[\"S2\"]}\n";
        assert!(parse_sense_index(Cursor::new(text), Strictness::Strict).is_err());
    }
}
