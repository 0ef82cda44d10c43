use std::collections::BTreeMap;

use super::lexicon::Lexicon;
use super::types::{LanguageId, Lemma, SynsetId};
use super::ModelError;

/// Witness status for one shared synset: a target-language word that
/// translates both near-synonyms, an asserted lexical gap, or no coverage
/// information either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessStatus {
    Word(Lemma),
    Gap,
    Uncovered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynsetWitness {
    pub synset: SynsetId,
    pub status: WitnessStatus,
}

/// Per-shared-synset shared-translation witnesses for a near-synonym pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub a: Lemma,
    pub b: Lemma,
    pub target: LanguageId,
    pub entries: Vec<SynsetWitness>,
}

impl WitnessReport {
    /// True when every shared synset has either a word witness or a gap
    /// marker in the target language.
    pub fn fully_covered(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !matches!(e.status, WitnessStatus::Uncovered))
    }
}

impl Lexicon {
    /// All unordered intra-language pairs of lemmas with identical synset
    /// sets, i.e. the absolute synonym pairs of `lang`.
    ///
    /// Lemmas are bucketed by their full synset-id tuple, so the cost is
    /// linear in the vocabulary rather than quadratic.
    pub fn absolute_synonym_pairs(&self, lang: &LanguageId) -> Vec<(Lemma, Lemma)> {
        let mut buckets: BTreeMap<&[SynsetId], Vec<&Lemma>> = BTreeMap::new();
        for lemma in self.lemmas_in(lang) {
            buckets
                .entry(self.synsets_of(lemma))
                .or_default()
                .push(lemma);
        }
        let mut pairs = Vec::new();
        for group in buckets.values() {
            for (i, a) in group.iter().enumerate() {
                for b in &group[i + 1..] {
                    pairs.push(((*a).clone(), (*b).clone()));
                }
            }
        }
        pairs
    }

    /// All cross-language pairs whose synset sets are identical: each word
    /// can always be translated by the other (absolute translation pairs).
    pub fn absolute_translation_pairs(
        &self,
        lang_e: &LanguageId,
        lang_f: &LanguageId,
    ) -> Result<Vec<(Lemma, Lemma)>, ModelError> {
        if lang_e == lang_f {
            return Err(ModelError::SameLanguage(lang_e.clone()));
        }
        let mut buckets: BTreeMap<&[SynsetId], (Vec<&Lemma>, Vec<&Lemma>)> = BTreeMap::new();
        for lemma in self.lemmas() {
            if &lemma.lang == lang_e {
                buckets
                    .entry(self.synsets_of(lemma))
                    .or_default()
                    .0
                    .push(lemma);
            } else if &lemma.lang == lang_f {
                buckets
                    .entry(self.synsets_of(lemma))
                    .or_default()
                    .1
                    .push(lemma);
            }
        }
        let mut pairs = Vec::new();
        for (side_e, side_f) in buckets.values() {
            for e in side_e {
                for f in side_f {
                    pairs.push(((*e).clone(), (*f).clone()));
                }
            }
        }
        Ok(pairs)
    }

    /// For each synset shared by the near-synonyms `a` and `b`, report a
    /// target-language member that translates both, the gap marker when the
    /// concept is asserted unlexicalized in `target`, or `Uncovered` when
    /// the synset says nothing about `target` at all.
    pub fn shared_translation_witness(
        &self,
        a: &Lemma,
        b: &Lemma,
        target: &LanguageId,
    ) -> Result<WitnessReport, ModelError> {
        let shared = match self.near_synonyms(a, b)? {
            true => intersect(self.synsets_of(a), self.synsets_of(b)),
            false => {
                return Err(ModelError::NotNearSynonyms {
                    a: a.clone(),
                    b: b.clone(),
                })
            }
        };
        let mut entries = Vec::new();
        for id in shared {
            let synset = self.synset(&id)?;
            let status = match synset.members_in(target) {
                Some(forms) => {
                    let form = forms.iter().next().expect("member sets are non-empty");
                    WitnessStatus::Word(Lemma {
                        lang: target.clone(),
                        form: form.clone(),
                        pos: synset.pos(),
                    })
                }
                None if synset.is_gap_in(target) => WitnessStatus::Gap,
                None => WitnessStatus::Uncovered,
            };
            entries.push(SynsetWitness { synset: id, status });
        }
        Ok(WitnessReport {
            a: a.clone(),
            b: b.clone(),
            target: target.clone(),
            entries,
        })
    }
}

fn intersect(a: &[SynsetId], b: &[SynsetId]) -> Vec<SynsetId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::lexicon::build_lexicon;
    use super::super::synset::MultiSynset;
    use super::super::types::PartOfSpeech;
    use super::*;

    fn lang(code: &str) -> LanguageId {
        LanguageId::new(code).unwrap()
    }

    fn sid(id: &str) -> SynsetId {
        SynsetId::new(id).unwrap()
    }

    fn lemma(code: &str, form: &str) -> Lemma {
        Lemma::new(lang(code), form, PartOfSpeech::Noun).unwrap()
    }

    fn synset(id: &str, members: &[(&str, &[&str])], gaps: &[&str]) -> MultiSynset {
        MultiSynset::new(
            sid(id),
            PartOfSpeech::Noun,
            members.iter().map(|(code, forms)| {
                (
                    lang(code),
                    forms.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                )
            }),
            gaps.iter().map(|code| lang(code)),
        )
        .unwrap()
    }

    /// O(V^2) reference scan used to cross-check the bucketed enumeration.
    fn brute_force_synonym_pairs(lex: &Lexicon, l: &LanguageId) -> Vec<(Lemma, Lemma)> {
        let lemmas: Vec<&Lemma> = lex.lemmas_in(l).collect();
        let mut pairs = Vec::new();
        for (i, a) in lemmas.iter().enumerate() {
            for b in &lemmas[i + 1..] {
                if lex.synsets_of(a) == lex.synsets_of(b) {
                    pairs.push(((*a).clone(), (*b).clone()));
                }
            }
        }
        pairs
    }

    fn brute_force_translation_pairs(
        lex: &Lexicon,
        e: &LanguageId,
        f: &LanguageId,
    ) -> Vec<(Lemma, Lemma)> {
        let mut pairs = Vec::new();
        for a in lex.lemmas_in(e) {
            for b in lex.lemmas_in(f) {
                if lex.synsets_of(a) == lex.synsets_of(b) {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        pairs
    }

    fn sorted(mut v: Vec<(Lemma, Lemma)>) -> Vec<(Lemma, Lemma)> {
        v.sort();
        v
    }

    #[test]
    fn synonym_pairs_on_empty_lexicon() {
        let lex = build_lexicon([]).unwrap();
        assert!(lex.absolute_synonym_pairs(&lang("en")).is_empty());
    }

    #[test]
    fn liter_litre_is_the_only_pair() {
        let lex = build_lexicon([
            synset(
                "L1",
                &[("en", &["liter", "litre"]), ("it", &["litro"])],
                &[],
            ),
            synset("S2", &[("en", &["time"]), ("it", &["tempo"])], &[]),
            synset("S3", &[("en", &["weather"]), ("it", &["tempo"])], &[]),
        ])
        .unwrap();
        let pairs = lex.absolute_synonym_pairs(&lang("en"));
        assert_eq!(pairs, vec![(lemma("en", "liter"), lemma("en", "litre"))]);
        assert_eq!(
            sorted(pairs),
            sorted(brute_force_synonym_pairs(&lex, &lang("en")))
        );
    }

    #[test]
    fn all_monosemous_unique_words_yield_no_pairs() {
        let lex = build_lexicon([
            synset("S1", &[("en", &["one"])], &[]),
            synset("S2", &[("en", &["two"])], &[]),
        ])
        .unwrap();
        assert!(lex.absolute_synonym_pairs(&lang("en")).is_empty());
    }

    #[test]
    fn translation_pairs_match_brute_force_on_toy_lexicon() {
        let lex = build_lexicon([
            synset(
                "G1",
                &[("en", &["globally"]), ("it", &["globalmente"])],
                &[],
            ),
            synset("S1", &[("en", &["test", "trial"]), ("it", &["prova"])], &[]),
            synset("S2", &[("en", &["proof"]), ("it", &["prova"])], &[]),
            synset("S3", &[("en", &["time"]), ("it", &["tempo"])], &[]),
            synset("S4", &[("en", &["weather"]), ("it", &["tempo"])], &[]),
        ])
        .unwrap();
        let pairs = lex
            .absolute_translation_pairs(&lang("en"), &lang("it"))
            .unwrap();
        // globally/globalmente occupy exactly the same synsets; prova shares
        // only part of its synsets with test or proof, so it is excluded.
        assert_eq!(
            pairs,
            vec![(lemma("en", "globally"), lemma("it", "globalmente"))]
        );
        assert_eq!(
            sorted(pairs),
            sorted(brute_force_translation_pairs(
                &lex,
                &lang("en"),
                &lang("it")
            ))
        );
        assert_eq!(
            lex.absolute_translation_pairs(&lang("en"), &lang("en")),
            Err(ModelError::SameLanguage(lang("en")))
        );
    }

    #[test]
    fn witness_reports_word_gap_and_uncovered() {
        let lex = build_lexicon([
            synset("S1", &[("en", &["test", "trial"]), ("it", &["prova"])], &[]),
            synset("W1", &[("en", &["privacy", "privateness"])], &["it"]),
            synset("U1", &[("en", &["privacy", "privateness"])], &[]),
        ])
        .unwrap();
        let report = lex
            .shared_translation_witness(&lemma("en", "test"), &lemma("en", "trial"), &lang("it"))
            .unwrap();
        assert_eq!(
            report.entries,
            vec![SynsetWitness {
                synset: sid("S1"),
                status: WitnessStatus::Word(lemma("it", "prova")),
            }]
        );
        assert!(report.fully_covered());

        let report = lex
            .shared_translation_witness(
                &lemma("en", "privacy"),
                &lemma("en", "privateness"),
                &lang("it"),
            )
            .unwrap();
        assert_eq!(
            report.entries,
            vec![
                SynsetWitness {
                    synset: sid("U1"),
                    status: WitnessStatus::Uncovered,
                },
                SynsetWitness {
                    synset: sid("W1"),
                    status: WitnessStatus::Gap,
                },
            ]
        );
        assert!(!report.fully_covered());

        let err = lex
            .shared_translation_witness(&lemma("en", "test"), &lemma("en", "privacy"), &lang("it"))
            .unwrap_err();
        assert!(matches!(err, ModelError::NotNearSynonyms { .. }));
    }
}
