//! Enumerate absolute synonym pairs and absolute translation pairs: the
//! words that share *all* their synsets, within one language and across two.
//!
//! Run with: cargo run --example absolute_pairs

use equilex::model::{build_lexicon, LanguageId, MultiSynset, PartOfSpeech, SynsetId};

fn main() {
    let noun = PartOfSpeech::Noun;
    let adv = PartOfSpeech::Adverb;
    let synset = |id: &str, pos: PartOfSpeech, members: &[(&str, &[&str])]| {
        MultiSynset::new(
            SynsetId::new(id).unwrap(),
            pos,
            members.iter().map(|(lang, forms)| {
                (
                    LanguageId::new(lang).unwrap(),
                    forms.iter().map(|f| f.to_string()).collect(),
                )
            }),
            [],
        )
        .unwrap()
    };

    let lex = build_lexicon([
        // Variant spellings with a single shared sense.
        synset(
            "L1",
            noun,
            &[("en", &["liter", "litre"]), ("it", &["litro"])],
        ),
        // Absolute synonyms with three senses each.
        synset(
            "H1",
            noun,
            &[("en", &["haste", "hurry"]), ("it", &["fretta"])],
        ),
        synset(
            "H2",
            noun,
            &[("en", &["haste", "hurry"]), ("it", &["premura"])],
        ),
        synset("H3", noun, &[("en", &["haste", "hurry"])]),
        // A cognate adverb pair occupying exactly the same synsets.
        synset(
            "G1",
            adv,
            &[("en", &["globally"]), ("it", &["globalmente"])],
        ),
        // Near-synonyms that share only one of two synsets: not absolute.
        synset(
            "N1",
            noun,
            &[("en", &["shot", "injection"]), ("it", &["iniezione"])],
        ),
        synset("N2", noun, &[("en", &["shot"]), ("it", &["sparo"])]),
    ])
    .unwrap();

    let en = LanguageId::new("en").unwrap();
    let it = LanguageId::new("it").unwrap();

    println!("absolute synonym pairs in en:");
    for (a, b) in lex.absolute_synonym_pairs(&en) {
        let senses = lex.synsets_of(&a).len();
        println!("  {} = {}  ({senses} shared sense(s))", a, b);
    }

    println!("absolute translation pairs en-it:");
    for (e, f) in lex.absolute_translation_pairs(&en, &it).unwrap() {
        println!("  {} = {}", e, f);
    }

    // shot/injection share N1 but not N2: near-synonyms, not absolute.
    let shot = equilex::model::Lemma::new(en.clone(), "shot", noun).unwrap();
    let injection = equilex::model::Lemma::new(en.clone(), "injection", noun).unwrap();
    println!(
        "shot/injection: near = {}, absolute = {}",
        lex.near_synonyms(&shot, &injection).unwrap(),
        lex.absolute_synonyms(&shot, &injection).unwrap(),
    );
}
