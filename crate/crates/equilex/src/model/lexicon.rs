use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use super::synset::MultiSynset;
use super::types::{LanguageId, Lemma, Sense, SynsetId};
use super::ModelError;

/// An immutable multilingual lexicon: synsets keyed by id plus the inverse
/// lemma index.
///
/// All queries are pure; construction is the only writer, so a built lexicon
/// can be shared freely between threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    synsets: BTreeMap<SynsetId, MultiSynset>,
    index: BTreeMap<Lemma, Vec<SynsetId>>,
}

/// Build a lexicon from individually valid synsets, rejecting duplicate ids.
pub fn build_lexicon(
    records: impl IntoIterator<Item = MultiSynset>,
) -> Result<Lexicon, ModelError> {
    let mut synsets = BTreeMap::new();
    for record in records {
        match synsets.entry(record.id().clone()) {
            Entry::Occupied(entry) => {
                return Err(ModelError::DuplicateSynsetId(entry.key().clone()));
            }
            Entry::Vacant(entry) => {
                entry.insert(record);
            }
        }
    }
    let mut index: BTreeMap<Lemma, Vec<SynsetId>> = BTreeMap::new();
    for synset in synsets.values() {
        for lemma in synset.lemmas() {
            index.entry(lemma).or_default().push(synset.id().clone());
        }
    }
    for ids in index.values_mut() {
        ids.sort();
        // A form can occur only once per language inside one synset, so the
        // inverse index never holds duplicates.
        debug_assert!(ids.windows(2).all(|w| w[0] != w[1]));
    }
    Ok(Lexicon { synsets, index })
}

/// Two senses are synonymous exactly when they sit in the same synset
/// (synset-id equality), which makes this an equivalence relation.
pub fn senses_synonymous(a: &Sense, b: &Sense) -> bool {
    a.synset == b.synset
}

impl Lexicon {
    pub fn empty() -> Lexicon {
        Lexicon {
            synsets: BTreeMap::new(),
            index: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.synsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.synsets.is_empty()
    }

    pub fn synsets(&self) -> impl Iterator<Item = &MultiSynset> {
        self.synsets.values()
    }

    pub fn get(&self, id: &SynsetId) -> Option<&MultiSynset> {
        self.synsets.get(id)
    }

    pub fn synset(&self, id: &SynsetId) -> Result<&MultiSynset, ModelError> {
        self.synsets
            .get(id)
            .ok_or_else(|| ModelError::UnknownSynset(id.clone()))
    }

    pub fn contains_synset(&self, id: &SynsetId) -> bool {
        self.synsets.contains_key(id)
    }

    /// All synsets containing `lemma`, in synset-id order. Empty for unknown
    /// lemmas.
    pub fn synsets_of(&self, lemma: &Lemma) -> &[SynsetId] {
        self.index.get(lemma).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn contains_lemma(&self, lemma: &Lemma) -> bool {
        self.index.contains_key(lemma)
    }

    pub fn lemmas(&self) -> impl Iterator<Item = &Lemma> {
        self.index.keys()
    }

    pub fn lemmas_in<'a>(&'a self, lang: &'a LanguageId) -> impl Iterator<Item = &'a Lemma> + 'a {
        self.index.keys().filter(move |lemma| &lemma.lang == lang)
    }

    /// Every language that occurs in the lexicon, as a member language or as
    /// a gap marker.
    pub fn languages(&self) -> BTreeSet<LanguageId> {
        let mut langs = BTreeSet::new();
        for synset in self.synsets.values() {
            langs.extend(synset.members().keys().cloned());
            langs.extend(synset.gaps().iter().cloned());
        }
        langs
    }

    /// A word is monosemous iff it is in a single synset.
    pub fn is_monosemous(&self, lemma: &Lemma) -> Result<bool, ModelError> {
        match self.synsets_of(lemma) {
            [] => Err(ModelError::UnknownLemma(lemma.clone())),
            ids => Ok(ids.len() == 1),
        }
    }

    /// A word is polysemous iff it is in multiple synsets.
    pub fn is_polysemous(&self, lemma: &Lemma) -> Result<bool, ModelError> {
        self.is_monosemous(lemma).map(|mono| !mono)
    }

    /// Membership-validated sense of `lemma` in the synset `id`.
    pub fn sense(&self, lemma: &Lemma, id: &SynsetId) -> Result<Sense, ModelError> {
        let synset = self.synset(id)?;
        if !synset.contains(lemma) {
            return Err(ModelError::SenseNotInSynset {
                lemma: lemma.clone(),
                synset: id.clone(),
            });
        }
        Ok(Sense::new(lemma.clone(), id.clone()))
    }

    fn check_comparable(&self, a: &Lemma, b: &Lemma) -> Result<(), ModelError> {
        if a.lang != b.lang {
            return Err(ModelError::LanguageMismatch {
                a: a.clone(),
                b: b.clone(),
            });
        }
        if a.pos != b.pos {
            return Err(ModelError::PosMismatch {
                a: a.clone(),
                b: b.clone(),
            });
        }
        Ok(())
    }

    /// Words are near-synonyms iff they share at least one synset.
    pub fn near_synonyms(&self, a: &Lemma, b: &Lemma) -> Result<bool, ModelError> {
        self.check_comparable(a, b)?;
        Ok(share_any(self.synsets_of(a), self.synsets_of(b)))
    }

    /// Words are absolute synonyms iff they share all their synsets.
    pub fn absolute_synonyms(&self, a: &Lemma, b: &Lemma) -> Result<bool, ModelError> {
        self.check_comparable(a, b)?;
        let sa = self.synsets_of(a);
        if sa.is_empty() {
            return Err(ModelError::UnknownLemma(a.clone()));
        }
        let sb = self.synsets_of(b);
        if sb.is_empty() {
            return Err(ModelError::UnknownLemma(b.clone()));
        }
        Ok(sa == sb)
    }

    /// Monolingual lexicon obtained by restricting every synset to `lang`.
    /// Synsets without members in `lang` are dropped; ids are preserved.
    pub fn restrict_to_language(&self, lang: &LanguageId) -> Lexicon {
        let restricted = self
            .synsets
            .values()
            .filter_map(|synset| synset.restricted_to(lang));
        build_lexicon(restricted).expect("restriction preserves ids and members")
    }

    /// Rebuild the inverse index from the synsets and compare: structural
    /// self-check used by the validation command and tests.
    pub fn index_is_consistent(&self) -> bool {
        match build_lexicon(self.synsets.values().cloned()) {
            Ok(rebuilt) => rebuilt.index == self.index,
            Err(_) => false,
        }
    }
}

/// True when two sorted id slices intersect.
fn share_any(a: &[SynsetId], b: &[SynsetId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
