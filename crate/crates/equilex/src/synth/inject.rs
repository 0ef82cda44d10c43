use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::ingest::AlignmentRecord;
use crate::model::{Lexicon, MultiSynset, SynsetId};
use crate::verify::Side;

use super::generate::{stream_rng, INJECT_STREAM};
use super::{ErrorType, GenConfig, TruthEntry, TruthLog};

/// Synsets other than `exclude` that contain the word, for re-annotation.
fn other_synsets(
    lex: &Lexicon,
    record: &AlignmentRecord,
    side: Side,
    exclude: &[&SynsetId],
) -> Vec<SynsetId> {
    let token = match side {
        Side::Src => &record.src,
        Side::Tgt => &record.tgt,
    };
    lex.synsets_of(&token.lemma)
        .iter()
        .filter(|id| !exclude.contains(id))
        .cloned()
        .collect()
}

/// Corrupt a corpus according to the configured rates.
///
/// Re-annotation swaps a token's synset for another synset of the same word,
/// so the corrupted sense still exists in the lexicon (modelling version
/// drift). Mis-alignment re-links the target side to a word drawn from a
/// different synset. Corruption never recreates a consistent annotation:
/// candidate synsets equal to the other side's annotation are excluded, and
/// a token with no remaining candidate is left untouched. A record carries
/// at most one error, so the log length always equals the record-level diff
/// between the clean and corrupted corpora.
pub fn inject_errors(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    config: &GenConfig,
) -> (Vec<AlignmentRecord>, TruthLog) {
    let mut rng = stream_rng(config.seed, INJECT_STREAM);
    let mut corrupted = records.to_vec();
    let mut log = TruthLog::default();

    let tgt_lang = &config.languages[1];
    let misalign_pool: Vec<&MultiSynset> = lex
        .synsets()
        .filter(|s| s.members_in(tgt_lang).is_some())
        .collect();

    for record in &mut corrupted {
        let mut touched = false;
        // Stage 1: per-token re-annotation; the target token is only drawn
        // when the source token stayed clean.
        for side in [Side::Src, Side::Tgt] {
            if touched || rng.random::<f64>() >= config.err_reannotate {
                continue;
            }
            // Exclude the token's own (true) synset and whatever the other
            // side currently carries, so the pair stays inconsistent.
            let (own, other) = match side {
                Side::Src => (record.src.synset.clone(), record.tgt.synset.clone()),
                Side::Tgt => (record.tgt.synset.clone(), record.src.synset.clone()),
            };
            let candidates = other_synsets(lex, record, side, &[&own, &other]);
            if candidates.is_empty() {
                continue; // monosemous word, or no usable alternative
            }
            let corrupt = candidates[rng.random_range(0..candidates.len())].clone();
            let token = match side {
                Side::Src => &mut record.src,
                Side::Tgt => &mut record.tgt,
            };
            log.entries.push(TruthEntry {
                error_type: ErrorType::Reannotate,
                sent: record.sent.clone(),
                side,
                tok: token.tok,
                true_synset: own,
                corrupt_synset: corrupt.clone(),
            });
            token.synset = corrupt;
            touched = true;
        }
        // Stage 2: per-record mis-alignment, only on untouched records so
        // each record carries errors of a single class.
        if touched || rng.random::<f64>() >= config.err_misalign {
            continue;
        }
        let candidates: Vec<&&MultiSynset> = misalign_pool
            .iter()
            .filter(|s| s.id() != &record.src.synset)
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let synset = candidates[rng.random_range(0..candidates.len())];
        let forms: Vec<&String> = synset
            .members_in(tgt_lang)
            .expect("pool filtered on membership")
            .iter()
            .collect();
        let form = forms[rng.random_range(0..forms.len())];
        log.entries.push(TruthEntry {
            error_type: ErrorType::Misalign,
            sent: record.sent.clone(),
            side: Side::Tgt,
            tok: record.tgt.tok,
            true_synset: record.tgt.synset.clone(),
            corrupt_synset: synset.id().clone(),
        });
        record.tgt.lemma = crate::model::Lemma {
            lang: tgt_lang.clone(),
            form: form.clone(),
            pos: synset.pos(),
        };
        record.tgt.synset = synset.id().clone();
    }
    (corrupted, log)
}

/// Inject exactly `n` isolated source-side re-annotation errors: one per
/// record, all in records with pairwise-distinct synsets, so no two errors
/// can meet inside one premise instance, and every corrupted word remains a
/// member of its true synset. Only records whose synset is drawn by at
/// least one other record are corrupted, so each error has a clean partner
/// to form a premise with and is therefore sense-level detectable. Returns
/// fewer than `n` entries when the corpus cannot host that many isolated
/// errors.
pub fn inject_isolated_reannotations(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    n: usize,
    seed: u64,
) -> (Vec<AlignmentRecord>, TruthLog) {
    let mut rng: ChaCha8Rng = stream_rng(seed, INJECT_STREAM);
    let mut corrupted = records.to_vec();
    let mut log = TruthLog::default();
    let mut used_synsets: Vec<SynsetId> = Vec::new();

    let mut drawn_by: std::collections::BTreeMap<&SynsetId, usize> =
        std::collections::BTreeMap::new();
    for record in records {
        *drawn_by.entry(&record.src.synset).or_default() += 1;
    }
    let partnered: Vec<SynsetId> = drawn_by
        .into_iter()
        .filter(|(_, count)| *count >= 2)
        .map(|(id, _)| id.clone())
        .collect();

    let mut order: Vec<usize> = (0..corrupted.len()).collect();
    // Fisher-Yates with the seeded stream.
    for i in (1..order.len()).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }

    for idx in order {
        if log.entries.len() >= n {
            break;
        }
        let record = &corrupted[idx];
        if used_synsets.contains(&record.src.synset) || !partnered.contains(&record.src.synset) {
            continue;
        }
        let own = record.src.synset.clone();
        let other = record.tgt.synset.clone();
        let candidates = other_synsets(lex, record, Side::Src, &[&own, &other]);
        if candidates.is_empty() {
            continue;
        }
        let corrupt = candidates[rng.random_range(0..candidates.len())].clone();
        used_synsets.push(own.clone());
        let record = &mut corrupted[idx];
        log.entries.push(TruthEntry {
            error_type: ErrorType::Reannotate,
            sent: record.sent.clone(),
            side: Side::Src,
            tok: record.src.tok,
            true_synset: own,
            corrupt_synset: corrupt.clone(),
        });
        record.src.synset = corrupt;
    }
    (corrupted, log)
}
