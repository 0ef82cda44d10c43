use std::collections::BTreeMap;

use crate::ingest::AlignmentRecord;
use crate::model::{Lexicon, Sense};

use super::{Direction, Exception, ExceptionRecord, PairOccurrence, Side};

/// A violation of the operational reading of translational equivalence:
/// either the two aligned senses do not share a multi-synset, or a token is
/// annotated with a synset that does not contain its lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConsistencyIssue {
    SynsetMismatch { src: Sense, tgt: Sense },
    Membership { sense: Sense, side: Side },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyViolation {
    pub issue: ConsistencyIssue,
    pub support: Vec<PairOccurrence>,
}

/// Outcome of the alignment consistency check. `instances` counts the
/// distinct aligned sense pairs examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub instances: usize,
    pub exceptions: Vec<ExceptionRecord>,
}

/// Check that every aligned sense pair shares one multi-synset and that every
/// annotation's lemma is a member of its synset.
///
/// Violations are deduplicated (mismatches by the sense pair, membership by
/// the sense and side) with supports accumulating every occurrence. An
/// annotation referencing a synset id that is absent from the lexicon is a
/// membership violation: whatever that synset was meant to be, it does not
/// list the lemma. The check is orientation-free; its records carry the
/// file's own orientation.
pub fn check_alignment_consistency(
    records: &[AlignmentRecord],
    lex: &Lexicon,
) -> ConsistencyReport {
    let mut pair_seen: BTreeMap<(Sense, Sense), Vec<PairOccurrence>> = BTreeMap::new();
    let mut mismatches: BTreeMap<(Sense, Sense), Vec<PairOccurrence>> = BTreeMap::new();
    let mut memberships: BTreeMap<(Sense, Side), Vec<PairOccurrence>> = BTreeMap::new();

    for record in records {
        let occ = PairOccurrence::of(record);
        let src = record.src.sense();
        let tgt = record.tgt.sense();
        pair_seen
            .entry((src.clone(), tgt.clone()))
            .or_default()
            .push(occ.clone());
        if src.synset != tgt.synset {
            mismatches
                .entry((src.clone(), tgt.clone()))
                .or_default()
                .push(occ.clone());
        }
        for (side, sense) in [(Side::Src, &src), (Side::Tgt, &tgt)] {
            let member = lex
                .get(&sense.synset)
                .is_some_and(|synset| synset.contains(&sense.lemma));
            if !member {
                memberships
                    .entry((sense.clone(), side))
                    .or_default()
                    .push(occ.clone());
            }
        }
    }

    let mut exceptions = Vec::new();
    for ((src, tgt), support) in mismatches {
        exceptions.push(ExceptionRecord {
            direction: Direction::SourceToTarget,
            exception: Exception::Consistency(ConsistencyViolation {
                issue: ConsistencyIssue::SynsetMismatch { src, tgt },
                support,
            }),
        });
    }
    for ((sense, side), support) in memberships {
        exceptions.push(ExceptionRecord {
            direction: Direction::SourceToTarget,
            exception: Exception::Consistency(ConsistencyViolation {
                issue: ConsistencyIssue::Membership { sense, side },
                support,
            }),
        });
    }
    ConsistencyReport {
        instances: pair_seen.len(),
        exceptions,
    }
}
