//! Brute-force reference implementations used as oracles by the integration
//! and acceptance suites. Everything here works by O(n^2) pairwise scans
//! over the records, independently of the grouped enumeration in the crate.

use std::collections::{BTreeMap, BTreeSet};

use equilex::ingest::AlignmentRecord;
use equilex::model::{Lemma, Lexicon, Sense};
use equilex::verify::Direction;

pub fn oriented(record: &AlignmentRecord, direction: Direction) -> (Sense, Sense) {
    match direction {
        Direction::SourceToTarget => (record.src.sense(), record.tgt.sense()),
        Direction::TargetToSource => (record.tgt.sense(), record.src.sense()),
    }
}

/// Distinct (source sense, target sense) pairs of the corpus.
pub fn distinct_pairs(records: &[AlignmentRecord], direction: Direction) -> Vec<(Sense, Sense)> {
    let set: BTreeSet<(Sense, Sense)> = records.iter().map(|r| oriented(r, direction)).collect();
    set.into_iter().collect()
}

pub type TripleKey = (Sense, Sense, Sense);
pub type QuadKey = ((Sense, Sense), (Sense, Sense));

/// All triple-premise instances by pairwise scan: two distinct same-language
/// source senses aligned to one identical target sense.
pub fn brute_triples(records: &[AlignmentRecord], direction: Direction) -> BTreeSet<TripleKey> {
    let pairs = distinct_pairs(records, direction);
    let mut keys = BTreeSet::new();
    for (i, (s1, t1)) in pairs.iter().enumerate() {
        for (s2, t2) in &pairs[i + 1..] {
            if t1 == t2 && s1 != s2 && s1.lemma.lang == s2.lemma.lang {
                let (a, b) = if s1 < s2 { (s1, s2) } else { (s2, s1) };
                keys.insert((a.clone(), b.clone(), t1.clone()));
            }
        }
    }
    keys
}

/// All quad-premise instances by pairwise scan: two aligned pairs with
/// distinct but synonymous same-language target senses and distinct
/// same-language source senses.
pub fn brute_quads(records: &[AlignmentRecord], direction: Direction) -> BTreeSet<QuadKey> {
    let pairs = distinct_pairs(records, direction);
    let mut keys = BTreeSet::new();
    for (i, p1) in pairs.iter().enumerate() {
        for p2 in &pairs[i + 1..] {
            let (s1, t1) = p1;
            let (s2, t2) = p2;
            if t1 != t2
                && t1.synset == t2.synset
                && t1.lemma.lang == t2.lemma.lang
                && s1 != s2
                && s1.lemma.lang == s2.lemma.lang
            {
                let (a, b) = if (s1, t1) < (s2, t2) {
                    (p1, p2)
                } else {
                    (p2, p1)
                };
                keys.insert((a.clone(), b.clone()));
            }
        }
    }
    keys
}

/// All word-triple instances with their two consequents, by pairwise scan
/// over distinct oriented word pairs.
pub fn brute_word_triples(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    direction: Direction,
) -> BTreeMap<(Lemma, Lemma, Lemma), (bool, bool)> {
    let word_pairs: BTreeSet<(Lemma, Lemma)> = records
        .iter()
        .map(|r| {
            let (s, t) = oriented(r, direction);
            (s.lemma, t.lemma)
        })
        .collect();
    let pairs: Vec<(Lemma, Lemma)> = word_pairs.into_iter().collect();
    let mut out = BTreeMap::new();
    for (i, (e1, f1)) in pairs.iter().enumerate() {
        for (e2, f2) in &pairs[i + 1..] {
            if f1 == f2 && e1 != e2 && e1.lang == e2.lang {
                let poly = lex.synsets_of(f1).len() >= 2;
                let near = lex
                    .synsets_of(e1)
                    .iter()
                    .any(|id| lex.synsets_of(e2).contains(id));
                let (a, b) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
                out.insert((a.clone(), b.clone(), f1.clone()), (poly, near));
            }
        }
    }
    out
}

/// Sense-level exception keys: brute premises whose source synsets differ.
pub fn brute_triple_exceptions(
    records: &[AlignmentRecord],
    direction: Direction,
) -> BTreeSet<TripleKey> {
    brute_triples(records, direction)
        .into_iter()
        .filter(|(a, b, _)| a.synset != b.synset)
        .collect()
}

pub fn brute_quad_exceptions(
    records: &[AlignmentRecord],
    direction: Direction,
) -> BTreeSet<QuadKey> {
    brute_quads(records, direction)
        .into_iter()
        .filter(|((s1, _), (s2, _))| s1.synset != s2.synset)
        .collect()
}
