use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ingest::AlignmentRecord;
use crate::model::{Lemma, Lexicon};

use super::{orient, Direction, Exception, ExceptionRecord, PairOccurrence};

/// Two distinct same-language words both aligned at least once to the same
/// word of the other language, with the two consequents evaluated against
/// the lexicon. `e_a < e_b` canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordTriple {
    pub e_a: Lemma,
    pub e_b: Lemma,
    pub shared: Lemma,
    pub f_polysemous: bool,
    pub e_near_synonyms: bool,
    pub support_a: Vec<PairOccurrence>,
    pub support_b: Vec<PairOccurrence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordCategory {
    /// The shared word is polysemous and the pair are near-synonyms.
    Both,
    PolysemyOnly,
    SynonymyOnly,
    /// Neither consequent holds: an exception to the word-level theorem.
    Neither,
}

impl WordTriple {
    pub fn category(&self) -> WordCategory {
        match (self.f_polysemous, self.e_near_synonyms) {
            (true, true) => WordCategory::Both,
            (true, false) => WordCategory::PolysemyOnly,
            (false, true) => WordCategory::SynonymyOnly,
            (false, false) => WordCategory::Neither,
        }
    }

    pub fn is_exception(&self) -> bool {
        matches!(self.category(), WordCategory::Neither)
    }
}

/// Word-level tallies. The four categories partition the triples; the
/// `with_*` fields are the overlapping totals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordCategoryCounts {
    pub triples: usize,
    pub polysemy_only: usize,
    pub synonymy_only: usize,
    pub both: usize,
    pub neither: usize,
    pub with_polysemous_shared_word: usize,
    pub with_near_synonym_pair: usize,
}

/// Outcome of the word-level check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCheckReport {
    pub counts: WordCategoryCounts,
    pub triples: Vec<WordTriple>,
    pub direction: Direction,
}

impl WordCheckReport {
    pub fn exceptions(&self) -> Vec<ExceptionRecord> {
        self.triples
            .iter()
            .filter(|t| t.is_exception())
            .map(|t| ExceptionRecord {
                direction: self.direction,
                exception: Exception::Word(t.clone()),
            })
            .collect()
    }
}

/// Enumerate distinct word triples and evaluate both consequents: is the
/// shared word polysemous, and are the two source-side words near-synonyms?
///
/// Polysemy and near-synonymy are read off the full lexicon's lemma index;
/// restricting the lexicon to either language first would not change the
/// answer, because a shared synset of two same-language words always
/// survives restriction to that language. Words missing from the lexicon
/// count as monosemous: there is no evidence of a second sense. Word pairs
/// with different parts of speech can never share a synset, so the
/// near-synonymy consequent is simply false for them.
pub fn check_word_theorem(
    records: &[AlignmentRecord],
    lex: &Lexicon,
    direction: Direction,
) -> WordCheckReport {
    let mut by_shared: BTreeMap<Lemma, BTreeMap<Lemma, Vec<PairOccurrence>>> = BTreeMap::new();
    for record in records {
        let (source, target) = orient(record, direction);
        by_shared
            .entry(target.lemma)
            .or_default()
            .entry(source.lemma)
            .or_default()
            .push(PairOccurrence::of(record));
    }

    let mut triples = Vec::new();
    let mut counts = WordCategoryCounts::default();
    for (shared, sources) in by_shared {
        let f_polysemous = lex.synsets_of(&shared).len() >= 2;
        let sources: Vec<(&Lemma, &Vec<PairOccurrence>)> = sources.iter().collect();
        for (i, (e_a, support_a)) in sources.iter().enumerate() {
            for (e_b, support_b) in &sources[i + 1..] {
                if e_a.lang != e_b.lang {
                    continue;
                }
                let e_near_synonyms = shares_synset(lex, e_a, e_b);
                let triple = WordTriple {
                    e_a: (*e_a).clone(),
                    e_b: (*e_b).clone(),
                    shared: shared.clone(),
                    f_polysemous,
                    e_near_synonyms,
                    support_a: (*support_a).clone(),
                    support_b: (*support_b).clone(),
                };
                counts.triples += 1;
                match triple.category() {
                    WordCategory::Both => counts.both += 1,
                    WordCategory::PolysemyOnly => counts.polysemy_only += 1,
                    WordCategory::SynonymyOnly => counts.synonymy_only += 1,
                    WordCategory::Neither => counts.neither += 1,
                }
                triples.push(triple);
            }
        }
    }
    counts.with_polysemous_shared_word = counts.both + counts.polysemy_only;
    counts.with_near_synonym_pair = counts.both + counts.synonymy_only;
    WordCheckReport {
        counts,
        triples,
        direction,
    }
}

fn shares_synset(lex: &Lexicon, a: &Lemma, b: &Lemma) -> bool {
    let (sa, sb) = (lex.synsets_of(a), lex.synsets_of(b));
    let (mut i, mut j) = (0, 0);
    while i < sa.len() && j < sb.len() {
        match sa[i].cmp(&sb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
