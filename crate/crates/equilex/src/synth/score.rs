use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::ingest::AlignmentRecord;
use crate::model::{Lexicon, SynsetId};
use crate::verify::{Direction, Side, TokenRef};

use super::{TruthEntry, TruthLog};

/// Detection quality against the injection log. An exception counts as
/// matched when any of its supporting tokens is an injected error; an
/// injected error counts as flagged when any exception's support contains
/// its token. Empty denominators score 1.0 by convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetectionScore {
    pub precision: f64,
    pub recall: f64,
    pub exceptions: usize,
    pub exceptions_matched: usize,
    pub injected: usize,
    pub injected_flagged: usize,
}

/// Correction quality: over the suggestions whose token carries an injected
/// error, the fraction pointing back to the true synset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrectionScore {
    pub accuracy: f64,
    pub matched: usize,
    pub correct: usize,
}

fn ratio(numerator: usize, denominator: usize) -> f64 {
    if denominator == 0 {
        1.0
    } else {
        numerator as f64 / denominator as f64
    }
}

/// Score detection with recall over all injected errors.
pub fn score_detection(exception_supports: &[Vec<TokenRef>], truth: &TruthLog) -> DetectionScore {
    let truth_tokens: HashSet<TokenRef> = truth.entries.iter().map(TruthEntry::token).collect();
    let mut exceptions_matched = 0usize;
    let mut flagged_tokens: HashSet<&TokenRef> = HashSet::new();
    for support in exception_supports {
        let mut hit = false;
        for token in support {
            if truth_tokens.contains(token) {
                hit = true;
                flagged_tokens.insert(token);
            }
        }
        if hit {
            exceptions_matched += 1;
        }
    }
    let injected_flagged = truth
        .entries
        .iter()
        .filter(|e| flagged_tokens.contains(&e.token()))
        .count();
    DetectionScore {
        precision: ratio(exceptions_matched, exception_supports.len()),
        recall: ratio(injected_flagged, truth.len()),
        exceptions: exception_supports.len(),
        exceptions_matched,
        injected: truth.len(),
        injected_flagged,
    }
}

/// Score detection with recall restricted to errors the theory can see:
/// those participating in at least one premise per the brute-force census.
pub fn score_detection_over_detectable(
    exception_supports: &[Vec<TokenRef>],
    truth: &TruthLog,
    census: &Detectability,
) -> DetectionScore {
    let base = score_detection(exception_supports, truth);
    let truth_tokens: HashSet<TokenRef> = truth.entries.iter().map(TruthEntry::token).collect();
    let mut flagged: HashSet<&TokenRef> = HashSet::new();
    for support in exception_supports {
        for token in support {
            if truth_tokens.contains(token) {
                flagged.insert(token);
            }
        }
    }
    let detectable = census.detectable_count();
    let flagged_detectable = truth
        .entries
        .iter()
        .zip(&census.flags)
        .filter(|(e, f)| f.any() && flagged.contains(&e.token()))
        .count();
    DetectionScore {
        recall: ratio(flagged_detectable, detectable),
        injected: detectable,
        injected_flagged: flagged_detectable,
        ..base
    }
}

/// Score corrections by token: a suggestion matched to an injected error is
/// correct when its target synset equals the true synset.
pub fn score_correction(suggestions: &[(TokenRef, SynsetId)], truth: &TruthLog) -> CorrectionScore {
    let by_token: HashMap<TokenRef, &TruthEntry> =
        truth.entries.iter().map(|e| (e.token(), e)).collect();
    let mut matched = 0usize;
    let mut correct = 0usize;
    for (token, to_synset) in suggestions {
        if let Some(entry) = by_token.get(token) {
            matched += 1;
            if to_synset == &entry.true_synset {
                correct += 1;
            }
        }
    }
    CorrectionScore {
        accuracy: ratio(correct, matched),
        matched,
        correct,
    }
}

/// Which checker classes can see one injected error.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DetectabilityFlags {
    pub consistency: bool,
    pub sense_st: bool,
    pub sense_ts: bool,
    pub word_st: bool,
    pub word_ts: bool,
}

impl DetectabilityFlags {
    pub fn any(&self) -> bool {
        self.consistency || self.sense_level() || self.word_st || self.word_ts
    }

    pub fn sense_level(&self) -> bool {
        self.sense_st || self.sense_ts
    }
}

/// Per-truth-entry detectability, parallel to the log's entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Detectability {
    pub flags: Vec<DetectabilityFlags>,
}

impl Detectability {
    pub fn detectable_count(&self) -> usize {
        self.flags.iter().filter(|f| f.any()).count()
    }
}

fn oriented(
    record: &AlignmentRecord,
    direction: Direction,
) -> (
    &crate::ingest::AnnotatedToken,
    &crate::ingest::AnnotatedToken,
) {
    match direction {
        Direction::SourceToTarget => (&record.src, &record.tgt),
        Direction::TargetToSource => (&record.tgt, &record.src),
    }
}

/// Brute-force census over the corrupted corpus: for each injected error,
/// scan every record pair the error's record could form a premise with and
/// note the checker classes under which the instance violates its theorem.
/// Deliberately independent of the hash-join enumeration it is used to
/// judge.
pub fn detectability_census(
    truth: &TruthLog,
    records: &[AlignmentRecord],
    lex: &Lexicon,
) -> Detectability {
    let mut flags = Vec::with_capacity(truth.len());
    for entry in &truth.entries {
        let mut f = DetectabilityFlags::default();
        let hosts: Vec<&AlignmentRecord> = records
            .iter()
            .filter(|r| {
                r.sent == entry.sent
                    && match entry.side {
                        Side::Src => r.src.tok == entry.tok,
                        Side::Tgt => r.tgt.tok == entry.tok,
                    }
            })
            .collect();
        for host in &hosts {
            // Consistency: the aligned pair itself is the premise.
            let src_member = lex
                .get(&host.src.synset)
                .is_some_and(|s| s.contains(&host.src.lemma));
            let tgt_member = lex
                .get(&host.tgt.synset)
                .is_some_and(|s| s.contains(&host.tgt.lemma));
            if host.src.synset != host.tgt.synset || !src_member || !tgt_member {
                f.consistency = true;
            }
            for direction in Direction::BOTH {
                let (h_src, h_tgt) = oriented(host, direction);
                let sense_flag = match direction {
                    Direction::SourceToTarget => &mut f.sense_st,
                    Direction::TargetToSource => &mut f.sense_ts,
                };
                let word_flag = match direction {
                    Direction::SourceToTarget => &mut f.word_st,
                    Direction::TargetToSource => &mut f.word_ts,
                };
                for other in records {
                    if std::ptr::eq(*host, other) {
                        continue;
                    }
                    let (o_src, o_tgt) = oriented(other, direction);
                    let same_src_lang = h_src.lemma.lang == o_src.lemma.lang;
                    // Triple premise: identical target sense, distinct
                    // source senses. Quad premise: distinct target senses in
                    // one synset (same language), distinct source senses.
                    let same_target_sense =
                        h_tgt.lemma == o_tgt.lemma && h_tgt.synset == o_tgt.synset;
                    let synonymous_targets = h_tgt.synset == o_tgt.synset
                        && h_tgt.lemma.lang == o_tgt.lemma.lang
                        && !(h_tgt.lemma == o_tgt.lemma);
                    let distinct_sources =
                        !(h_src.lemma == o_src.lemma && h_src.synset == o_src.synset);
                    if same_src_lang
                        && distinct_sources
                        && (same_target_sense || synonymous_targets)
                        && h_src.synset != o_src.synset
                    {
                        *sense_flag = true;
                    }
                    // Word-level premise: same shared word, distinct source
                    // words; violating iff the shared word is monosemous and
                    // the source words share no synset.
                    if same_src_lang && h_tgt.lemma == o_tgt.lemma && h_src.lemma != o_src.lemma {
                        let poly = lex.synsets_of(&h_tgt.lemma).len() >= 2;
                        let near = lex
                            .synsets_of(&h_src.lemma)
                            .iter()
                            .any(|id| lex.synsets_of(&o_src.lemma).contains(id));
                        if !poly && !near {
                            *word_flag = true;
                        }
                    }
                }
            }
        }
        flags.push(f);
    }
    Detectability { flags }
}

#[cfg(test)]
mod tests {
    use super::super::{ErrorType, GenConfig};
    use super::*;
    use crate::synth::{generate_bitext, generate_lexicon, inject_errors};

    fn token(sent: &str, side: Side, tok: u32) -> TokenRef {
        TokenRef {
            sent: sent.into(),
            side,
            tok,
        }
    }

    fn entry(sent: &str) -> TruthEntry {
        TruthEntry {
            error_type: ErrorType::Reannotate,
            sent: sent.into(),
            side: Side::Src,
            tok: 0,
            true_synset: SynsetId::new("S1").unwrap(),
            corrupt_synset: SynsetId::new("S2").unwrap(),
        }
    }

    #[test]
    fn empty_inputs_score_one_by_convention() {
        let score = score_detection(&[], &TruthLog::default());
        assert_eq!(score.precision, 1.0);
        assert_eq!(score.recall, 1.0);
        let score = score_correction(&[], &TruthLog::default());
        assert_eq!(score.accuracy, 1.0);
    }

    #[test]
    fn one_matching_exception_scores_perfectly() {
        let truth = TruthLog {
            entries: vec![entry("s1")],
        };
        let supports = vec![vec![token("s1", Side::Src, 0), token("s1", Side::Tgt, 0)]];
        let score = score_detection(&supports, &truth);
        assert_eq!(score.precision, 1.0);
        assert_eq!(score.recall, 1.0);
        // A stray exception with no injected token halves precision.
        let supports = vec![
            vec![token("s1", Side::Src, 0)],
            vec![token("s9", Side::Src, 0)],
        ];
        let score = score_detection(&supports, &truth);
        assert_eq!(score.precision, 0.5);
        assert_eq!(score.recall, 1.0);
    }

    #[test]
    fn correction_counts_true_synset_hits_only() {
        let truth = TruthLog {
            entries: vec![entry("s1")],
        };
        let good = (token("s1", Side::Src, 0), SynsetId::new("S1").unwrap());
        let bad = (token("s1", Side::Src, 0), SynsetId::new("S3").unwrap());
        let unmatched = (token("s7", Side::Src, 0), SynsetId::new("S1").unwrap());
        let score = score_correction(&[good, bad, unmatched], &truth);
        assert_eq!(score.matched, 2);
        assert_eq!(score.correct, 1);
        assert_eq!(score.accuracy, 0.5);
    }

    #[test]
    fn census_marks_injected_errors_as_detectable() {
        let config = GenConfig {
            seed: 21,
            n_synsets: 80,
            n_alignments: 800,
            ..GenConfig::default()
        };
        let lex = generate_lexicon(&config).unwrap();
        let records = generate_bitext(&lex, &config).unwrap();
        let (corrupted, log) = inject_errors(&records, &lex, &config);
        assert!(!log.is_empty());
        let census = detectability_census(&log, &corrupted, &lex);
        assert_eq!(census.flags.len(), log.len());
        // Injection never recreates consistency, so every error is at least
        // consistency-detectable.
        assert_eq!(census.detectable_count(), log.len());
        for f in &census.flags {
            assert!(f.consistency);
        }
    }
}
