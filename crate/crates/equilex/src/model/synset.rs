use std::collections::{BTreeMap, BTreeSet};

use super::types::{normalize_form, LanguageId, Lemma, PartOfSpeech, SynsetId};
use super::ModelError;

/// A multilingual synset: one lexicalized concept with its member words per
/// language and the languages in which the concept is a lexical gap.
///
/// Invariants enforced at construction:
/// - a language never appears in both `members` and `gaps`;
/// - every listed member set is non-empty and holds no duplicate forms;
/// - at least one language has members (every concept is lexicalized
///   somewhere).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSynset {
    id: SynsetId,
    pos: PartOfSpeech,
    members: BTreeMap<LanguageId, BTreeSet<String>>,
    gaps: BTreeSet<LanguageId>,
}

impl MultiSynset {
    pub fn new(
        id: SynsetId,
        pos: PartOfSpeech,
        members: impl IntoIterator<Item = (LanguageId, Vec<String>)>,
        gaps: impl IntoIterator<Item = LanguageId>,
    ) -> Result<Self, ModelError> {
        let gaps: BTreeSet<LanguageId> = gaps.into_iter().collect();
        let mut normalized: BTreeMap<LanguageId, BTreeSet<String>> = BTreeMap::new();
        for (lang, forms) in members {
            if forms.is_empty() {
                return Err(ModelError::EmptyMemberSet { synset: id, lang });
            }
            let entry = normalized.entry(lang.clone()).or_default();
            for raw in forms {
                let form = normalize_form(&raw);
                if form.is_empty() {
                    return Err(ModelError::InvalidLemmaForm(raw));
                }
                if !entry.insert(form.clone()) {
                    return Err(ModelError::DuplicateMemberForm {
                        synset: id,
                        lang,
                        form,
                    });
                }
            }
        }
        if normalized.is_empty() {
            return Err(ModelError::EmptySynset(id));
        }
        if let Some(lang) = normalized.keys().find(|lang| gaps.contains(*lang)) {
            return Err(ModelError::MemberGapConflict {
                synset: id,
                lang: lang.clone(),
            });
        }
        Ok(MultiSynset {
            id,
            pos,
            members: normalized,
            gaps,
        })
    }

    pub fn id(&self) -> &SynsetId {
        &self.id
    }

    pub fn pos(&self) -> PartOfSpeech {
        self.pos
    }

    pub fn members(&self) -> &BTreeMap<LanguageId, BTreeSet<String>> {
        &self.members
    }

    pub fn gaps(&self) -> &BTreeSet<LanguageId> {
        &self.gaps
    }

    pub fn members_in(&self, lang: &LanguageId) -> Option<&BTreeSet<String>> {
        self.members.get(lang)
    }

    pub fn is_gap_in(&self, lang: &LanguageId) -> bool {
        self.gaps.contains(lang)
    }

    /// True when the lemma (language, form and part of speech) is listed in
    /// this synset.
    pub fn contains(&self, lemma: &Lemma) -> bool {
        self.pos == lemma.pos
            && self
                .members
                .get(&lemma.lang)
                .is_some_and(|forms| forms.contains(&lemma.form))
    }

    /// All member lemmas, in (language, form) order.
    pub fn lemmas(&self) -> impl Iterator<Item = Lemma> + '_ {
        self.members.iter().flat_map(move |(lang, forms)| {
            forms.iter().map(move |form| Lemma {
                lang: lang.clone(),
                form: form.clone(),
                pos: self.pos,
            })
        })
    }

    /// Copy of this synset with `lemma` inserted as a member. If the lemma's
    /// language was marked as a gap, the gap marker is removed: listing a
    /// member is a stronger assertion than the gap it replaces.
    pub fn with_member(&self, lemma: &Lemma) -> Result<MultiSynset, ModelError> {
        if lemma.pos != self.pos {
            return Err(ModelError::PosMismatch {
                a: lemma.clone(),
                b: Lemma {
                    lang: lemma.lang.clone(),
                    form: lemma.form.clone(),
                    pos: self.pos,
                },
            });
        }
        let mut updated = self.clone();
        updated.gaps.remove(&lemma.lang);
        updated
            .members
            .entry(lemma.lang.clone())
            .or_default()
            .insert(lemma.form.clone());
        Ok(updated)
    }

    /// Copy reduced to the members of a single language, or `None` if the
    /// concept is not lexicalized there. Gap markers are dropped: they carry
    /// no information in a monolingual lexicon.
    pub fn restricted_to(&self, lang: &LanguageId) -> Option<MultiSynset> {
        let forms = self.members.get(lang)?;
        let mut members = BTreeMap::new();
        members.insert(lang.clone(), forms.clone());
        Some(MultiSynset {
            id: self.id.clone(),
            pos: self.pos,
            members,
            gaps: BTreeSet::new(),
        })
    }
}
