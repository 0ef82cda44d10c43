//! The error-correction engine: turn sense-level exceptions into CORRECT /
//! ADD suggestions, aggregate them across the corpus, and apply accepted
//! suggestions to fresh copies of the bitext and lexicon.
//!
//! For an exception with target synset `P`, each diverging source sense `s`
//! yields either a re-annotation of its token to `(w(s), P)` when `w(s)` is
//! already a member of `P`, or the addition of `w(s)` to `P`. Both diverging
//! senses are corrected when both diverge, even though at most one may be
//! wrong; support counts let consumers rank.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{AlignmentRecord, ParseError, Parsed, Strictness};
use crate::model::{Lemma, Lexicon, Sense, SynsetId};
use crate::verify::{
    detect_sense_exceptions, enumerate_cor1_triples, enumerate_thm1_quads, Direction, Exception,
    ExceptionRecord, SenseInstance, Side, TokenRef, VerifyError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepairError {
    #[error("premise violation: target senses {t_u} and {t_v} are not synonymous")]
    PremiseViolation { t_u: Box<Sense>, t_v: Box<Sense> },
    #[error("synset `{0}` is not in the lexicon")]
    UnknownSynset(SynsetId),
    #[error("suggestion token {side} {tok} of sentence `{sent}` does not occur in the corpus")]
    UnknownToken { sent: String, side: Side, tok: u32 },
    #[error("invalid suggestion for token {tok} of `{sent}`: {message}")]
    InvalidSuggestion {
        sent: String,
        tok: u32,
        message: String,
    },
    #[error("{tokens} token(s) carry only conflicting suggestions under the skip policy")]
    ConflictUnresolved { tokens: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuggestionKind {
    Correct,
    Add,
}

impl SuggestionKind {
    pub fn tag(&self) -> &'static str {
        match self {
            SuggestionKind::Correct => "CORRECT",
            SuggestionKind::Add => "ADD",
        }
    }
}

/// One suggested change: re-annotate a token to its word's sense in
/// `to_synset` (CORRECT), or extend `to_synset` with the word and then
/// re-annotate (ADD).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionSuggestion {
    pub kind: SuggestionKind,
    pub token: TokenRef,
    pub from_sense: Sense,
    pub to_synset: SynsetId,
    /// The word to insert into `to_synset`; ADD only.
    pub new_lemma: Option<Lemma>,
    /// Number of independent exceptions implying this suggestion.
    pub support: u32,
}

/// One aligned sense pair feeding the correction algorithm, with the token
/// occurrences that carry the source sense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignedSensePair {
    pub source: Sense,
    pub target: Sense,
    pub source_tokens: Vec<TokenRef>,
}

/// The correction algorithm for one exception: two sense alignment pairs
/// with synonymous targets. Returns nothing when the source senses already
/// agree; otherwise one suggestion per diverging source-sense occurrence.
pub fn suggest_corrections(
    pair_1: &AlignedSensePair,
    pair_2: &AlignedSensePair,
    lex: &Lexicon,
) -> Result<Vec<CorrectionSuggestion>, RepairError> {
    if pair_1.target.synset != pair_2.target.synset {
        return Err(RepairError::PremiseViolation {
            t_u: Box::new(pair_1.target.clone()),
            t_v: Box::new(pair_2.target.clone()),
        });
    }
    if pair_1.source.synset == pair_2.source.synset {
        return Ok(Vec::new());
    }
    let shared = &pair_1.target.synset;
    let synset = lex
        .get(shared)
        .ok_or_else(|| RepairError::UnknownSynset(shared.clone()))?;

    let mut suggestions = Vec::new();
    for pair in [pair_1, pair_2] {
        if &pair.source.synset == shared {
            continue;
        }
        let word = &pair.source.lemma;
        let (kind, new_lemma) = if synset.contains(word) {
            (SuggestionKind::Correct, None)
        } else {
            (SuggestionKind::Add, Some(word.clone()))
        };
        for token in &pair.source_tokens {
            suggestions.push(CorrectionSuggestion {
                kind,
                token: token.clone(),
                from_sense: pair.source.clone(),
                to_synset: shared.clone(),
                new_lemma: new_lemma.clone(),
                support: 1,
            });
        }
    }
    Ok(suggestions)
}

/// Suggestions for a token that disagree on the target synset, listed with
/// all competitors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConflictEntry {
    pub token: TokenRef,
    pub candidates: Vec<SuggestionLine>,
}

/// Tally of suggested and applied changes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RepairReport {
    pub suggested_correct: usize,
    pub suggested_add: usize,
    pub conflicted_tokens: usize,
    pub applied_correct: usize,
    pub applied_add: usize,
    pub skipped_below_support: usize,
    pub skipped_add_disabled: usize,
    pub skipped_conflict: usize,
    pub conflicts: Vec<ConflictEntry>,
}

fn exception_pairs(record: &ExceptionRecord) -> Option<(AlignedSensePair, AlignedSensePair)> {
    let direction = record.direction;
    match &record.exception {
        Exception::Triple(t) => Some((
            AlignedSensePair {
                source: t.src_a.clone(),
                target: t.tgt.clone(),
                source_tokens: t
                    .support_a
                    .iter()
                    .map(|o| o.source_token(direction))
                    .collect(),
            },
            AlignedSensePair {
                source: t.src_b.clone(),
                target: t.tgt.clone(),
                source_tokens: t
                    .support_b
                    .iter()
                    .map(|o| o.source_token(direction))
                    .collect(),
            },
        )),
        Exception::Quad(q) => Some((
            AlignedSensePair {
                source: q.pair_1.source.clone(),
                target: q.pair_1.target.clone(),
                source_tokens: q
                    .pair_1
                    .support
                    .iter()
                    .map(|o| o.source_token(direction))
                    .collect(),
            },
            AlignedSensePair {
                source: q.pair_2.source.clone(),
                target: q.pair_2.target.clone(),
                source_tokens: q
                    .pair_2
                    .support
                    .iter()
                    .map(|o| o.source_token(direction))
                    .collect(),
            },
        )),
        _ => None,
    }
}

/// Run both sense-level enumerators, feed every exception through the
/// correction algorithm, and merge suggestions by (token, target synset),
/// accumulating support. Tokens with suggestions toward different synsets
/// are recorded as conflicts.
pub fn run_repair(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    direction: Direction,
) -> Result<(Vec<CorrectionSuggestion>, RepairReport), VerifyError> {
    let triples = enumerate_cor1_triples(records, lex, direction)?;
    let quads = enumerate_thm1_quads(records, lex, direction)?;
    let instances = triples
        .into_iter()
        .map(SenseInstance::Triple)
        .chain(quads.into_iter().map(SenseInstance::Quad));
    let exceptions = detect_sense_exceptions(instances, direction);
    Ok(merge_suggestions(&exceptions, lex))
}

/// Aggregate per-exception suggestions across an exception list.
pub fn merge_suggestions(
    exceptions: &[ExceptionRecord],
    lex: &Lexicon,
) -> (Vec<CorrectionSuggestion>, RepairReport) {
    let mut merged: BTreeMap<(TokenRef, SynsetId), CorrectionSuggestion> = BTreeMap::new();
    for record in exceptions {
        let Some((pair_1, pair_2)) = exception_pairs(record) else {
            continue;
        };
        // The premise held when the exception was detected; a failure here
        // would mean the exception no longer matches the lexicon.
        let Ok(suggestions) = suggest_corrections(&pair_1, &pair_2, lex) else {
            continue;
        };
        for suggestion in suggestions {
            let key = (suggestion.token.clone(), suggestion.to_synset.clone());
            merged
                .entry(key)
                .and_modify(|existing| existing.support += 1)
                .or_insert(suggestion);
        }
    }

    let suggestions: Vec<CorrectionSuggestion> = merged.into_values().collect();
    let mut report = RepairReport::default();
    for s in &suggestions {
        match s.kind {
            SuggestionKind::Correct => report.suggested_correct += 1,
            SuggestionKind::Add => report.suggested_add += 1,
        }
    }
    let mut by_token: BTreeMap<&TokenRef, Vec<&CorrectionSuggestion>> = BTreeMap::new();
    for s in &suggestions {
        by_token.entry(&s.token).or_default().push(s);
    }
    for (token, candidates) in by_token {
        if candidates.len() > 1 {
            report.conflicted_tokens += 1;
            report.conflicts.push(ConflictEntry {
                token: token.clone(),
                candidates: candidates.iter().map(|s| s.to_line()).collect(),
            });
        }
    }
    (suggestions, report)
}

/// How conflicting suggestions for one token are resolved at application
/// time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConflictPolicy {
    /// Leave conflicted tokens untouched for manual review.
    #[default]
    Skip,
    /// Apply the strictly highest-support suggestion; ties are skipped.
    HighestSupport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairPolicy {
    pub min_support: u32,
    pub allow_add: bool,
    pub conflict: ConflictPolicy,
}

impl Default for RepairPolicy {
    fn default() -> Self {
        RepairPolicy {
            min_support: 1,
            allow_add: false,
            conflict: ConflictPolicy::Skip,
        }
    }
}

/// Application outcome: fresh corpus and lexicon values plus the report.
#[derive(Debug, Clone)]
pub struct ApplyOutcome {
    pub records: Vec<AlignmentRecord>,
    pub lexicon: Lexicon,
    pub report: RepairReport,
}

/// Apply accepted suggestions. CORRECT rewrites the token's synset
/// annotation; ADD first inserts the lemma into the synset's member set and
/// then rewrites the annotation, so the amended bitext is consistent with
/// the amended lexicon. Inputs are left untouched.
///
/// Returns `ConflictUnresolved` when, under the skip policy, conflicts exist
/// and no suggestion at all is applicable.
pub fn apply_corrections(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    suggestions: &[CorrectionSuggestion],
    policy: &RepairPolicy,
) -> Result<ApplyOutcome, RepairError> {
    // Soundness of the branching, against the input lexicon.
    for s in suggestions {
        let member = lex
            .get(&s.to_synset)
            .is_some_and(|synset| synset.contains(&s.from_sense.lemma));
        let sound = match s.kind {
            SuggestionKind::Correct => member,
            SuggestionKind::Add => !member,
        };
        if !sound {
            return Err(RepairError::InvalidSuggestion {
                sent: s.token.sent.clone(),
                tok: s.token.tok,
                message: format!(
                    "{} of `{}` toward `{}` contradicts synset membership",
                    s.kind.tag(),
                    s.from_sense.lemma,
                    s.to_synset
                ),
            });
        }
    }

    let mut report = RepairReport::default();
    let mut eligible: BTreeMap<&TokenRef, Vec<&CorrectionSuggestion>> = BTreeMap::new();
    for s in suggestions {
        match s.kind {
            SuggestionKind::Correct => report.suggested_correct += 1,
            SuggestionKind::Add => report.suggested_add += 1,
        }
        if s.support < policy.min_support {
            report.skipped_below_support += 1;
            continue;
        }
        if s.kind == SuggestionKind::Add && !policy.allow_add {
            report.skipped_add_disabled += 1;
            continue;
        }
        eligible.entry(&s.token).or_default().push(s);
    }

    let mut accepted: Vec<&CorrectionSuggestion> = Vec::new();
    for (token, candidates) in &eligible {
        if candidates.len() == 1 {
            accepted.push(candidates[0]);
            continue;
        }
        report.conflicted_tokens += 1;
        report.conflicts.push(ConflictEntry {
            token: (*token).clone(),
            candidates: candidates.iter().map(|s| s.to_line()).collect(),
        });
        match policy.conflict {
            ConflictPolicy::Skip => {
                report.skipped_conflict += candidates.len();
            }
            ConflictPolicy::HighestSupport => {
                let best = candidates
                    .iter()
                    .max_by_key(|s| s.support)
                    .expect("non-empty candidate list");
                let tied = candidates
                    .iter()
                    .filter(|s| s.support == best.support)
                    .count();
                if tied == 1 {
                    accepted.push(best);
                    report.skipped_conflict += candidates.len() - 1;
                } else {
                    report.skipped_conflict += candidates.len();
                }
            }
        }
    }
    if accepted.is_empty()
        && report.conflicted_tokens > 0
        && policy.conflict == ConflictPolicy::Skip
    {
        return Err(RepairError::ConflictUnresolved {
            tokens: report.conflicted_tokens,
        });
    }

    // Amend the lexicon first so re-annotations land in updated synsets.
    let mut synsets: BTreeMap<SynsetId, crate::model::MultiSynset> =
        lex.synsets().map(|s| (s.id().clone(), s.clone())).collect();
    for s in &accepted {
        if s.kind == SuggestionKind::Add {
            let lemma = s.new_lemma.as_ref().unwrap_or(&s.from_sense.lemma);
            let synset = synsets
                .get(&s.to_synset)
                .ok_or_else(|| RepairError::UnknownSynset(s.to_synset.clone()))?;
            let updated =
                synset
                    .with_member(lemma)
                    .map_err(|e| RepairError::InvalidSuggestion {
                        sent: s.token.sent.clone(),
                        tok: s.token.tok,
                        message: e.to_string(),
                    })?;
            synsets.insert(s.to_synset.clone(), updated);
        }
    }
    let lexicon = crate::model::build_lexicon(synsets.into_values())
        .expect("amending members preserves lexicon invariants");

    // Rewrite the annotations.
    let mut edits: BTreeMap<&TokenRef, &CorrectionSuggestion> = BTreeMap::new();
    for s in &accepted {
        edits.insert(&s.token, s);
    }
    let mut records: Vec<AlignmentRecord> = records.to_vec();
    for record in &mut records {
        for side in [Side::Src, Side::Tgt] {
            let token = match side {
                Side::Src => &mut record.src,
                Side::Tgt => &mut record.tgt,
            };
            let token_ref = TokenRef {
                sent: record.sent.clone(),
                side,
                tok: token.tok,
            };
            if let Some(s) = edits.get(&token_ref) {
                token.synset = s.to_synset.clone();
            }
        }
    }
    for (token, s) in &edits {
        let exists = records.iter().any(|r| {
            (token.side == Side::Src && r.sent == token.sent && r.src.tok == token.tok)
                || (token.side == Side::Tgt && r.sent == token.sent && r.tgt.tok == token.tok)
        });
        if !exists {
            return Err(RepairError::UnknownToken {
                sent: s.token.sent.clone(),
                side: s.token.side,
                tok: s.token.tok,
            });
        }
    }

    for s in &accepted {
        match s.kind {
            SuggestionKind::Correct => report.applied_correct += 1,
            SuggestionKind::Add => report.applied_add += 1,
        }
    }
    Ok(ApplyOutcome {
        records,
        lexicon,
        report,
    })
}

/// Wire form of one suggestion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuggestionLine {
    pub kind: String,
    pub sent: String,
    pub side: Side,
    pub tok: u32,
    pub from: String,
    pub to: String,
    pub lemma: String,
    pub support: u32,
}

impl CorrectionSuggestion {
    pub fn to_line(&self) -> SuggestionLine {
        SuggestionLine {
            kind: self.kind.tag().to_string(),
            sent: self.token.sent.clone(),
            side: self.token.side,
            tok: self.token.tok,
            from: self.from_sense.synset.to_string(),
            to: self.to_synset.to_string(),
            lemma: self.from_sense.lemma.form.clone(),
            support: self.support,
        }
    }
}

impl SuggestionLine {
    pub fn token(&self) -> TokenRef {
        TokenRef {
            sent: self.sent.clone(),
            side: self.side,
            tok: self.tok,
        }
    }
}

/// Serialize suggestions one per line, in deterministic order.
pub fn write_suggestions_file<'a>(
    mut writer: impl Write,
    suggestions: impl IntoIterator<Item = &'a CorrectionSuggestion>,
) -> io::Result<()> {
    for suggestion in suggestions {
        let line = serde_json::to_string(&suggestion.to_line())
            .expect("suggestion serialization cannot fail");
        writeln!(writer, "{line}")?;
    }
    Ok(())
}

/// Parse a suggestions file back into wire records (used by scoring).
pub fn parse_suggestions_file(
    reader: impl BufRead,
    strictness: Strictness,
) -> Result<Parsed<SuggestionLine>, ParseError> {
    crate::ingest::parse_lines(reader, strictness, |line, text| {
        serde_json::from_str(text).map_err(|e| crate::ingest::json_error(line, &e))
    })
}
