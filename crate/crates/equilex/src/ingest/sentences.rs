use std::collections::BTreeMap;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::model::LanguageId;

use super::{json_error, parse_lines, ParseError, Strictness};

/// One tokenized sentence from the sentence file, keyed by its id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub sent: String,
    pub lang: LanguageId,
    pub tokens: Vec<String>,
}

impl Sentence {
    pub fn text(&self) -> String {
        self.tokens.join(" ")
    }
}

/// Sentences indexed by id, for substitution-candidate generation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SentenceSet {
    map: BTreeMap<String, Sentence>,
}

impl SentenceSet {
    pub fn get(&self, sent: &str) -> Option<&Sentence> {
        self.map.get(sent)
    }

    pub fn insert(&mut self, sentence: Sentence) -> Result<(), ParseError> {
        if self.map.contains_key(&sentence.sent) {
            return Err(ParseError::schema(
                0,
                "sent",
                format!("duplicate sentence id `{}`", sentence.sent),
            ));
        }
        self.map.insert(sentence.sent.clone(), sentence);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn sentences(&self) -> impl Iterator<Item = &Sentence> {
        self.map.values()
    }
}

impl FromIterator<Sentence> for SentenceSet {
    fn from_iter<T: IntoIterator<Item = Sentence>>(iter: T) -> Self {
        let mut set = SentenceSet::default();
        for sentence in iter {
            set.map.insert(sentence.sent.clone(), sentence);
        }
        set
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SentenceWire {
    sent: Option<String>,
    lang: Option<String>,
    tokens: Option<Vec<String>>,
}

#[derive(Serialize)]
struct SentenceOut<'a> {
    sent: &'a str,
    lang: &'a str,
    tokens: &'a [String],
}

/// Parse a sentence file into an id-indexed set.
pub fn parse_sentence_file(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<(SentenceSet, Vec<ParseError>), ParseError> {
    let parsed = parse_lines(reader, strictness, |line, text| {
        let wire: SentenceWire = serde_json::from_str(text).map_err(|e| json_error(line, &e))?;
        let sent = wire
            .sent
            .filter(|s| !s.is_empty())
            .ok_or_else(|| ParseError::schema(line, "sent", "missing or empty"))?;
        let lang = wire
            .lang
            .ok_or_else(|| ParseError::schema(line, "lang", "missing"))?;
        let lang = LanguageId::new(&lang).map_err(|e| ParseError::schema(line, "lang", e))?;
        let tokens = wire
            .tokens
            .ok_or_else(|| ParseError::schema(line, "tokens", "missing"))?;
        Ok(Sentence { sent, lang, tokens })
    })?;

    let mut set = SentenceSet::default();
    let mut diagnostics = parsed.diagnostics;
    for sentence in parsed.records {
        if let Err(err) = set.insert(sentence) {
            match strictness {
                Strictness::Strict => return Err(err),
                Strictness::Lenient => diagnostics.push(err),
            }
        }
    }
    Ok((set, diagnostics))
}

/// Canonical single-line serialization of a sentence.
pub fn serialize_sentence(sentence: &Sentence) -> String {
    let out = SentenceOut {
        sent: &sentence.sent,
        lang: sentence.lang.as_str(),
        tokens: &sentence.tokens,
    };
    serde_json::to_string(&out).expect("sentence serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn parses_and_round_trips() {
        let text = r#"{"sent":"s1","lang":"en","tokens":["Their","world","turned","black"]}
"#;
        let (set, diags) = parse_sentence_file(Cursor::new(text), Strictness::Strict).unwrap();
        assert!(diags.is_empty());
        let sentence = set.get("s1").unwrap();
        assert_eq!(sentence.text(), "Their world turned black");
        assert_eq!(serialize_sentence(sentence) + "\n", text);
    }

    #[test]
    fn duplicate_ids_are_rejected_in_strict_mode() {
        let text = "{\"sent\":\"s1\",\"lang\":\"en\",\"tokens\":[]}\n{\"sent\":\"s1\",\"lang\":\"en\",\"tokens\":[]}\n";
        assert!(parse_sentence_file(Cursor::new(text), Strictness::Strict).is_err());
    }
}
