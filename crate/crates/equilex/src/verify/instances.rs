use std::collections::BTreeMap;

use crate::ingest::AlignmentRecord;
use crate::model::{Lexicon, Sense, SynsetId};

use super::{orient, Direction, Exception, ExceptionRecord, PairOccurrence, VerifyError};

/// Premise instance of the triple check: two distinct source senses, both
/// aligned at least once to one identical target sense. The source senses may
/// belong to the same word; `src_a < src_b` canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleInstance {
    pub src_a: Sense,
    pub src_b: Sense,
    pub tgt: Sense,
    pub support_a: Vec<PairOccurrence>,
    pub support_b: Vec<PairOccurrence>,
}

impl TripleInstance {
    /// The conclusion fails when the source senses are not synonymous.
    pub fn is_exception(&self) -> bool {
        self.src_a.synset != self.src_b.synset
    }

    pub fn key(&self) -> (&Sense, &Sense, &Sense) {
        (&self.src_a, &self.src_b, &self.tgt)
    }
}

/// One deduplicated aligned sense pair with its witnessing occurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignedPair {
    pub source: Sense,
    pub target: Sense,
    pub support: Vec<PairOccurrence>,
}

/// Premise instance of the quadruple check: two aligned sense pairs whose
/// target senses are distinct but synonymous. `pair_1 < pair_2` canonically
/// by (source, target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadInstance {
    pub pair_1: AlignedPair,
    pub pair_2: AlignedPair,
}

impl QuadInstance {
    pub fn is_exception(&self) -> bool {
        self.pair_1.source.synset != self.pair_2.source.synset
    }

    pub fn key(&self) -> ((&Sense, &Sense), (&Sense, &Sense)) {
        (
            (&self.pair_1.source, &self.pair_1.target),
            (&self.pair_2.source, &self.pair_2.target),
        )
    }
}

/// An instance from either sense-level enumerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SenseInstance {
    Triple(TripleInstance),
    Quad(QuadInstance),
}

/// Deduplicated aligned sense pairs grouped for enumeration.
fn distinct_pairs(
    records: &[AlignmentRecord],
    direction: Direction,
) -> BTreeMap<(Sense, Sense), Vec<PairOccurrence>> {
    let mut pairs: BTreeMap<(Sense, Sense), Vec<PairOccurrence>> = BTreeMap::new();
    for record in records {
        let (source, target) = orient(record, direction);
        pairs
            .entry((source, target))
            .or_default()
            .push(PairOccurrence::of(record));
    }
    pairs
}

/// Enumerate all unique triples: pairs of distinct same-language source
/// senses aligned with the same target sense. Output is sorted by canonical
/// key; supports accumulate every witnessing record.
pub fn enumerate_cor1_triples(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    direction: Direction,
) -> Result<Vec<TripleInstance>, VerifyError> {
    super::ensure_resolved(records, lex)?;
    let mut by_target: BTreeMap<Sense, Vec<(Sense, Vec<PairOccurrence>)>> = BTreeMap::new();
    for ((source, target), occurrences) in distinct_pairs(records, direction) {
        by_target
            .entry(target)
            .or_default()
            .push((source, occurrences));
    }
    let mut instances = Vec::new();
    for (target, sources) in by_target {
        for (i, (sense_a, support_a)) in sources.iter().enumerate() {
            for (sense_b, support_b) in &sources[i + 1..] {
                if sense_a.lemma.lang != sense_b.lemma.lang {
                    continue;
                }
                instances.push(TripleInstance {
                    src_a: sense_a.clone(),
                    src_b: sense_b.clone(),
                    tgt: target.clone(),
                    support_a: support_a.clone(),
                    support_b: support_b.clone(),
                });
            }
        }
    }
    instances.sort_by(|a, b| (&a.src_a, &a.src_b, &a.tgt).cmp(&(&b.src_a, &b.src_b, &b.tgt)));
    Ok(instances)
}

/// Enumerate all unique quadruples: two aligned sense pairs whose target
/// senses are distinct but share a synset (and share a language). Pairs with
/// identical target senses are covered by the triple check and excluded here,
/// so the two tallies stay disjoint.
pub fn enumerate_thm1_quads(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    direction: Direction,
) -> Result<Vec<QuadInstance>, VerifyError> {
    super::ensure_resolved(records, lex)?;
    type GroupKey = (crate::model::LanguageId, SynsetId);
    let mut by_target_synset: BTreeMap<GroupKey, Vec<AlignedPair>> = BTreeMap::new();
    for ((source, target), occurrences) in distinct_pairs(records, direction) {
        let key = (target.lemma.lang.clone(), target.synset.clone());
        by_target_synset.entry(key).or_default().push(AlignedPair {
            source,
            target,
            support: occurrences,
        });
    }
    let mut instances = Vec::new();
    for group in by_target_synset.into_values() {
        for (i, pair_1) in group.iter().enumerate() {
            for pair_2 in &group[i + 1..] {
                if pair_1.target == pair_2.target
                    || pair_1.source == pair_2.source
                    || pair_1.source.lemma.lang != pair_2.source.lemma.lang
                {
                    continue;
                }
                instances.push(QuadInstance {
                    pair_1: pair_1.clone(),
                    pair_2: pair_2.clone(),
                });
            }
        }
    }
    instances.sort_by(|a, b| a.key().cmp(&b.key()));
    Ok(instances)
}

/// Keep exactly the instances whose source senses are not synonymous.
pub fn detect_sense_exceptions(
    instances: impl IntoIterator<Item = SenseInstance>,
    direction: Direction,
) -> Vec<ExceptionRecord> {
    instances
        .into_iter()
        .filter_map(|instance| match instance {
            SenseInstance::Triple(t) if t.is_exception() => Some(ExceptionRecord {
                direction,
                exception: Exception::Triple(t),
            }),
            SenseInstance::Quad(q) if q.is_exception() => Some(ExceptionRecord {
                direction,
                exception: Exception::Quad(q),
            }),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::AnnotatedToken;
    use crate::model::{build_lexicon, LanguageId, Lemma, MultiSynset, PartOfSpeech};
    use std::collections::BTreeSet;

    fn lang(code: &str) -> LanguageId {
        LanguageId::new(code).unwrap()
    }

    fn sid(id: &str) -> SynsetId {
        SynsetId::new(id).unwrap()
    }

    fn lemma(code: &str, form: &str) -> Lemma {
        Lemma::new(lang(code), form, PartOfSpeech::Noun).unwrap()
    }

    fn record(sent: &str, src: (&str, &str), tgt: (&str, &str)) -> AlignmentRecord {
        AlignmentRecord {
            sent: sent.into(),
            src: AnnotatedToken {
                lemma: lemma("en", src.0),
                synset: sid(src.1),
                tok: 0,
            },
            tgt: AnnotatedToken {
                lemma: lemma("it", tgt.0),
                synset: sid(tgt.1),
                tok: 0,
            },
        }
    }

    fn lex_for(records: &[AlignmentRecord]) -> Lexicon {
        // A lexicon whose synsets cover every annotation in the corpus.
        let mut per_synset: BTreeMap<SynsetId, BTreeMap<LanguageId, BTreeSet<String>>> =
            BTreeMap::new();
        for r in records {
            for token in [&r.src, &r.tgt] {
                per_synset
                    .entry(token.synset.clone())
                    .or_default()
                    .entry(token.lemma.lang.clone())
                    .or_default()
                    .insert(token.lemma.form.clone());
            }
        }
        build_lexicon(per_synset.into_iter().map(|(id, members)| {
            MultiSynset::new(
                id,
                PartOfSpeech::Noun,
                members
                    .into_iter()
                    .map(|(l, forms)| (l, forms.into_iter().collect::<Vec<_>>())),
                [],
            )
            .unwrap()
        }))
        .unwrap()
    }

    #[test]
    fn single_pair_yields_no_triples() {
        let records = vec![record("s1", ("test", "S1"), ("prova", "S1"))];
        let lex = lex_for(&records);
        let triples = enumerate_cor1_triples(&records, &lex, Direction::SourceToTarget).unwrap();
        assert!(triples.is_empty());
    }

    #[test]
    fn two_sources_on_one_target_sense_form_one_triple() {
        let records = vec![
            record("s1", ("test", "S1"), ("prova", "S1")),
            record("s2", ("trial", "S1"), ("prova", "S1")),
            record("s3", ("trial", "S1"), ("prova", "S1")),
        ];
        let lex = lex_for(&records);
        let triples = enumerate_cor1_triples(&records, &lex, Direction::SourceToTarget).unwrap();
        assert_eq!(triples.len(), 1);
        let t = &triples[0];
        assert_eq!(t.src_a.lemma, lemma("en", "test"));
        assert_eq!(t.src_b.lemma, lemma("en", "trial"));
        assert_eq!(t.support_a.len(), 1);
        assert_eq!(t.support_b.len(), 2);
        assert!(!t.is_exception());
    }

    #[test]
    fn quads_need_distinct_synonymous_targets() {
        // Targets in different synsets: premise fails.
        let different = vec![
            record("s1", ("test", "S1"), ("prova", "S1")),
            record("s2", ("time", "S3"), ("tempo", "S3")),
        ];
        let lex = lex_for(&different);
        assert!(
            enumerate_thm1_quads(&different, &lex, Direction::SourceToTarget)
                .unwrap()
                .is_empty()
        );

        // Distinct target senses in the same synset: one quad.
        let synonymous = vec![
            record("s1", ("gist", "S5"), ("essenza", "S5")),
            record("s2", ("core", "S5"), ("nocciolo", "S5")),
        ];
        let lex = lex_for(&synonymous);
        let quads = enumerate_thm1_quads(&synonymous, &lex, Direction::SourceToTarget).unwrap();
        assert_eq!(quads.len(), 1);
        assert!(!quads[0].is_exception());

        // Identical target senses are the triple case, not a quad.
        let identical = vec![
            record("s1", ("gist", "S5"), ("essenza", "S5")),
            record("s2", ("core", "S5"), ("essenza", "S5")),
        ];
        let lex = lex_for(&identical);
        assert!(
            enumerate_thm1_quads(&identical, &lex, Direction::SourceToTarget)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn same_source_sense_never_forms_an_instance() {
        // The same sense pair repeated is deduplicated, and a sense is never
        // paired with itself.
        let records = vec![
            record("s1", ("test", "S1"), ("prova", "S1")),
            record("s2", ("test", "S1"), ("prova", "S1")),
        ];
        let lex = lex_for(&records);
        assert!(
            enumerate_cor1_triples(&records, &lex, Direction::SourceToTarget)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn exception_iff_source_synsets_differ() {
        let records = vec![
            record("s1", ("test", "S1"), ("prova", "S1")),
            record("s2", ("quiz", "S2"), ("prova", "S1")),
        ];
        let lex = lex_for(&records);
        let triples = enumerate_cor1_triples(&records, &lex, Direction::SourceToTarget).unwrap();
        assert_eq!(triples.len(), 1);
        let exceptions = detect_sense_exceptions(
            triples.into_iter().map(SenseInstance::Triple),
            Direction::SourceToTarget,
        );
        assert_eq!(exceptions.len(), 1);
        assert_eq!(exceptions[0].kind_tag(), "TRIPLE");
    }

    #[test]
    fn unresolved_synset_is_an_error() {
        let records = vec![record("s1", ("test", "S1"), ("prova", "S9"))];
        let mut lex_records = records.clone();
        lex_records[0].tgt.synset = sid("S1");
        let lex = lex_for(&lex_records); // knows S1 only
        let err = enumerate_cor1_triples(&records, &lex, Direction::SourceToTarget).unwrap_err();
        assert!(matches!(err, VerifyError::UnresolvedSynset { .. }));
    }

    #[test]
    fn direction_symmetry_with_swapped_corpus() {
        let records = vec![
            record("s1", ("test", "S1"), ("prova", "S1")),
            record("s2", ("trial", "S1"), ("prova", "S1")),
            record("s3", ("gist", "S5"), ("essenza", "S5")),
            record("s4", ("core", "S5"), ("nocciolo", "S5")),
        ];
        let lex = lex_for(&records);
        let swapped: Vec<AlignmentRecord> = records
            .iter()
            .map(|r| AlignmentRecord {
                sent: r.sent.clone(),
                src: r.tgt.clone(),
                tgt: r.src.clone(),
            })
            .collect();
        let st = enumerate_cor1_triples(&records, &lex, Direction::SourceToTarget).unwrap();
        let ts_on_swapped =
            enumerate_cor1_triples(&swapped, &lex, Direction::TargetToSource).unwrap();
        let keys = |v: &[TripleInstance]| -> Vec<(Sense, Sense, Sense)> {
            v.iter()
                .map(|t| (t.src_a.clone(), t.src_b.clone(), t.tgt.clone()))
                .collect()
        };
        assert_eq!(keys(&st), keys(&ts_on_swapped));
    }
}
