use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ingest::{AlignmentRecord, AnnotatedToken};
use crate::model::{
    build_lexicon, LanguageId, Lemma, Lexicon, MultiSynset, PartOfSpeech, SynsetId,
};

use super::{GenConfig, SynthError};

const LEXICON_STREAM: u64 = 0;
const BITEXT_STREAM: u64 = 1;
pub(super) const INJECT_STREAM: u64 = 2;

/// Chance that a member slot reuses an existing word instead of minting a
/// new one; reuse across synsets is what makes words polysemous.
const MEMBER_REUSE_RATE: f64 = 0.4;

pub(super) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Per-language word pool with power-law reuse: ranks are drawn with weight
/// proportional to (rank + 1)^(-shape), so early words accumulate many
/// senses while the tail stays mostly monosemous.
struct WordPool {
    lang: LanguageId,
    words: Vec<String>,
    cumulative: Vec<f64>,
    shape: f64,
}

impl WordPool {
    fn new(lang: LanguageId, shape: f64) -> WordPool {
        WordPool {
            lang,
            words: Vec::new(),
            cumulative: Vec::new(),
            shape,
        }
    }

    fn mint(&mut self) -> String {
        let word = format!("w{:04}_{}", self.words.len(), self.lang);
        let weight = ((self.words.len() + 1) as f64).powf(-self.shape);
        let total = self.cumulative.last().copied().unwrap_or(0.0);
        self.words.push(word.clone());
        self.cumulative.push(total + weight);
        word
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> &str {
        let total = *self.cumulative.last().expect("pool is non-empty");
        let draw = rng.random::<f64>() * total;
        let idx = self.cumulative.partition_point(|&c| c <= draw);
        &self.words[idx.min(self.words.len() - 1)]
    }
}

/// 1 + Poisson(lambda) via Knuth's product method; lambda is small here.
fn member_count(rng: &mut ChaCha8Rng, mean: f64) -> usize {
    let lambda = mean - 1.0;
    if lambda <= 0.0 {
        return 1;
    }
    let threshold = (-lambda).exp();
    let mut product = rng.random::<f64>();
    let mut count = 0usize;
    while product > threshold {
        count += 1;
        product *= rng.random::<f64>();
    }
    1 + count
}

/// Generate a ground-truth lexicon. The first configured language anchors
/// every synset; other languages are gapped with `gap_rate` and otherwise
/// lexicalized with `1 + Poisson(synonym_rate - 1)` members.
pub fn generate_lexicon(config: &GenConfig) -> Result<Lexicon, SynthError> {
    config.validate()?;
    let mut rng = stream_rng(config.seed, LEXICON_STREAM);
    let mut pools: Vec<WordPool> = config
        .languages
        .iter()
        .map(|lang| WordPool::new(lang.clone(), config.polysemy_shape))
        .collect();

    let mut synsets = Vec::with_capacity(config.n_synsets);
    for idx in 0..config.n_synsets {
        let id = SynsetId::new(&format!("S{idx:05}")).expect("generated ids are non-empty");
        let mut members: Vec<(LanguageId, Vec<String>)> = Vec::new();
        let mut gaps: Vec<LanguageId> = Vec::new();
        for (li, pool) in pools.iter_mut().enumerate() {
            if li > 0 && rng.random::<f64>() < config.gap_rate {
                gaps.push(pool.lang.clone());
                continue;
            }
            let want = member_count(&mut rng, config.synonym_rate);
            let mut forms: Vec<String> = Vec::with_capacity(want);
            for _ in 0..want {
                let mut form = None;
                if !pool.words.is_empty() && rng.random::<f64>() < MEMBER_REUSE_RATE {
                    // A word may appear only once per synset; give reuse a
                    // few tries before minting.
                    for _ in 0..4 {
                        let candidate = pool.sample(&mut rng).to_string();
                        if !forms.contains(&candidate) {
                            form = Some(candidate);
                            break;
                        }
                    }
                }
                forms.push(form.unwrap_or_else(|| pool.mint()));
            }
            members.push((pool.lang.clone(), forms));
        }
        let synset = MultiSynset::new(id, PartOfSpeech::Noun, members, gaps)
            .expect("generated synsets satisfy the invariants");
        synsets.push(synset);
    }
    Ok(build_lexicon(synsets).expect("generated ids are unique"))
}

/// Generate a sense-annotated bitext between the first two configured
/// languages. Every pair draws both senses from one synset lexicalized in
/// both languages, so the output is exception-free under every checker.
pub fn generate_bitext(
    lex: &Lexicon,
    config: &GenConfig,
) -> Result<Vec<AlignmentRecord>, SynthError> {
    config.validate()?;
    let src_lang = &config.languages[0];
    let tgt_lang = &config.languages[1];
    let candidates: Vec<&MultiSynset> = lex
        .synsets()
        .filter(|s| s.members_in(src_lang).is_some() && s.members_in(tgt_lang).is_some())
        .collect();
    if candidates.is_empty() {
        return Err(SynthError::InsufficientLexicalization {
            src: src_lang.clone(),
            tgt: tgt_lang.clone(),
        });
    }

    let mut rng = stream_rng(config.seed, BITEXT_STREAM);
    let mut records = Vec::with_capacity(config.n_alignments);
    for i in 0..config.n_alignments {
        let synset = candidates[rng.random_range(0..candidates.len())];
        let pick = |rng: &mut ChaCha8Rng, lang: &LanguageId| -> Lemma {
            let forms: Vec<&String> = synset
                .members_in(lang)
                .expect("filtered above")
                .iter()
                .collect();
            let form = forms[rng.random_range(0..forms.len())];
            Lemma {
                lang: lang.clone(),
                form: form.clone(),
                pos: synset.pos(),
            }
        };
        let src_lemma = pick(&mut rng, src_lang);
        let tgt_lemma = pick(&mut rng, tgt_lang);
        records.push(AlignmentRecord {
            sent: format!("sent{i:06}"),
            src: AnnotatedToken {
                lemma: src_lemma,
                synset: synset.id().clone(),
                tok: 0,
            },
            tgt: AnnotatedToken {
                lemma: tgt_lemma,
                synset: synset.id().clone(),
                tok: 0,
            },
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(seed: u64) -> GenConfig {
        GenConfig {
            seed,
            n_synsets: 50,
            n_alignments: 200,
            ..GenConfig::default()
        }
    }

    #[test]
    fn single_synset_two_languages_no_gaps() {
        let config = GenConfig {
            n_synsets: 1,
            gap_rate: 0.0,
            ..config(3)
        };
        let lex = generate_lexicon(&config).unwrap();
        assert_eq!(lex.len(), 1);
        let synset = lex.synsets().next().unwrap();
        assert_eq!(synset.members().len(), 2);
        assert!(synset.gaps().is_empty());
        let records = generate_bitext(
            &lex,
            &GenConfig {
                n_alignments: 10,
                ..config
            },
        )
        .unwrap();
        assert_eq!(records.len(), 10);
        for r in &records {
            assert_eq!(r.src.synset, synset.id().clone());
            assert_eq!(r.tgt.synset, synset.id().clone());
        }
    }

    #[test]
    fn gap_rate_one_makes_the_second_language_gap_only() {
        let config = GenConfig {
            gap_rate: 1.0,
            ..config(5)
        };
        let lex = generate_lexicon(&config).unwrap();
        let it = LanguageId::new("it").unwrap();
        for synset in lex.synsets() {
            assert!(synset.members_in(&it).is_none());
            assert!(synset.is_gap_in(&it));
        }
        // No synset covers both languages, so a bitext cannot be drawn.
        assert!(matches!(
            generate_bitext(&lex, &config),
            Err(SynthError::InsufficientLexicalization { .. })
        ));
    }

    #[test]
    fn generation_is_deterministic_under_the_seed() {
        let seven = config(7);
        let lex_a = generate_lexicon(&seven).unwrap();
        let lex_b = generate_lexicon(&seven).unwrap();
        assert_eq!(lex_a, lex_b);
        let bitext_a = generate_bitext(&lex_a, &seven).unwrap();
        let bitext_b = generate_bitext(&lex_b, &seven).unwrap();
        assert_eq!(bitext_a, bitext_b);
        // A different seed diverges.
        let lex_c = generate_lexicon(&config(8)).unwrap();
        assert_ne!(lex_a, lex_c);
    }

    #[test]
    fn generated_corpus_annotations_are_consistent() {
        let config = config(11);
        let lex = generate_lexicon(&config).unwrap();
        let records = generate_bitext(&lex, &config).unwrap();
        for r in &records {
            assert_eq!(r.src.synset, r.tgt.synset);
            let synset = lex.get(&r.src.synset).unwrap();
            assert!(synset.contains(&r.src.lemma));
            assert!(synset.contains(&r.tgt.lemma));
        }
        // Reuse must produce at least some polysemy for error injection to
        // have targets.
        let polysemous = lex
            .lemmas()
            .filter(|l| lex.synsets_of(l).len() >= 2)
            .count();
        assert!(polysemous > 0);
    }
}
