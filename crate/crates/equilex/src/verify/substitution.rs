use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ingest::SentenceSet;
use crate::model::{Lexicon, SynsetId};

use super::{source_side, Exception, ExceptionRecord, VerifyError};

/// A sentence pair differing only in the word in question, ready for a
/// substitution-test judgment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubstitutionCandidate {
    pub sent: String,
    pub tok: u32,
    pub original: String,
    pub modified: String,
    pub original_word: String,
    pub replacement_word: String,
    /// The synset the two words supposedly share.
    pub synset: SynsetId,
}

/// Build substitution-test sentence pairs from triple exceptions.
///
/// A triple exception qualifies when exactly one of its two source senses
/// shares a synset with some sense of the other source word. The occurrence
/// of the qualifying sense is replaced by that other word; the original
/// sentence is chosen at random (seeded) among the sentences witnessing the
/// qualifying sense. Non-triple exceptions and triples failing the
/// one-sided-sharing rule are skipped.
pub fn generate_substitution_candidates(
    exceptions: &[ExceptionRecord],
    sentences: &SentenceSet,
    lex: &Lexicon,
    seed: u64,
) -> Result<Vec<SubstitutionCandidate>, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = Vec::new();
    for record in exceptions {
        let triple = match &record.exception {
            Exception::Triple(t) => t,
            _ => continue,
        };
        // Does sense A's synset contain word B, and vice versa?
        let a_shared = lex
            .get(&triple.src_a.synset)
            .is_some_and(|s| s.contains(&triple.src_b.lemma));
        let b_shared = lex
            .get(&triple.src_b.synset)
            .is_some_and(|s| s.contains(&triple.src_a.lemma));
        let (sense, support, replacement) = match (a_shared, b_shared) {
            (true, false) => (&triple.src_a, &triple.support_a, &triple.src_b.lemma),
            (false, true) => (&triple.src_b, &triple.support_b, &triple.src_a.lemma),
            // Zero or two shared synsets: the selection rule does not apply.
            _ => continue,
        };

        let side = source_side(record.direction);
        let mut witnesses: Vec<(&str, u32)> = support
            .iter()
            .map(|occ| (occ.sent.as_str(), occ.token(side).tok))
            .filter(|(sent, tok)| {
                sentences
                    .get(sent)
                    .is_some_and(|s| (*tok as usize) < s.tokens.len())
            })
            .collect();
        witnesses.sort();
        witnesses.dedup();
        if witnesses.is_empty() {
            let sent = support
                .first()
                .map(|occ| occ.sent.clone())
                .unwrap_or_default();
            // Distinguish "sentence missing" from "token out of range".
            if let Some(occ) = support.first() {
                if let Some(s) = sentences.get(&occ.sent) {
                    return Err(VerifyError::TokenOutOfRange {
                        sent: occ.sent.clone(),
                        tok: occ.token(side).tok,
                        len: s.tokens.len(),
                    });
                }
            }
            return Err(VerifyError::MissingSentence { sent });
        }

        let (sent_id, tok) = witnesses[rng.random_range(0..witnesses.len())];
        let sentence = sentences.get(sent_id).expect("filtered above");
        let mut tokens = sentence.tokens.clone();
        tokens[tok as usize] = replacement.form.clone();
        candidates.push(SubstitutionCandidate {
            sent: sent_id.to_string(),
            tok,
            original: sentence.text(),
            modified: tokens.join(" "),
            original_word: sense.lemma.form.clone(),
            replacement_word: replacement.form.clone(),
            synset: sense.synset.clone(),
        });
    }
    Ok(candidates)
}
