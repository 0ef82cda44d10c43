//! Build a small bilingual lexicon in code and walk through the synonymy
//! and translation predicates.
//!
//! Run with: cargo run --example lexicon_queries

use equilex::model::{
    build_lexicon, senses_synonymous, LanguageId, Lemma, MultiSynset, PartOfSpeech, SynsetId,
    WitnessStatus,
};

fn synset(id: &str, pos: PartOfSpeech, members: &[(&str, &[&str])], gaps: &[&str]) -> MultiSynset {
    MultiSynset::new(
        SynsetId::new(id).unwrap(),
        pos,
        members.iter().map(|(lang, forms)| {
            (
                LanguageId::new(lang).unwrap(),
                forms.iter().map(|f| f.to_string()).collect(),
            )
        }),
        gaps.iter().map(|lang| LanguageId::new(lang).unwrap()),
    )
    .unwrap()
}

fn main() {
    let noun = PartOfSpeech::Noun;
    let lex = build_lexicon([
        // test and trial share a synset with Italian prova...
        synset(
            "S1",
            noun,
            &[("en", &["test", "trial"]), ("it", &["prova"])],
            &[],
        ),
        // ...which also covers proof, so prova is polysemous.
        synset("S2", noun, &[("en", &["proof"]), ("it", &["prova"])], &[]),
        // time and weather both translate tempo without being synonyms.
        synset("S3", noun, &[("en", &["time"]), ("it", &["tempo"])], &[]),
        synset("S4", noun, &[("en", &["weather"]), ("it", &["tempo"])], &[]),
        // gist / essence / core lexicalize one concept.
        synset(
            "S5",
            noun,
            &[("en", &["gist", "essence", "core"]), ("it", &["essenza"])],
            &[],
        ),
        // a concept asserted to be a lexical gap in Italian.
        synset("S6", noun, &[("en", &["privacy", "privateness"])], &["it"]),
    ])
    .unwrap();

    let en = LanguageId::new("en").unwrap();
    let it = LanguageId::new("it").unwrap();
    let lemma = |lang: &LanguageId, form: &str| Lemma::new(lang.clone(), form, noun).unwrap();

    let prova = lemma(&it, "prova");
    println!("synsets of it:prova = {:?}", lex.synsets_of(&prova));
    println!(
        "is prova polysemous? {}",
        lex.is_polysemous(&prova).unwrap()
    );

    let gist = lex
        .sense(&lemma(&en, "gist"), &SynsetId::new("S5").unwrap())
        .unwrap();
    let essence = lex
        .sense(&lemma(&en, "essence"), &SynsetId::new("S5").unwrap())
        .unwrap();
    println!(
        "senses ({gist}) and ({essence}) synonymous? {}",
        senses_synonymous(&gist, &essence)
    );

    for (a, b) in [("test", "trial"), ("time", "weather")] {
        println!(
            "near_synonyms({a}, {b}) = {}",
            lex.near_synonyms(&lemma(&en, a), &lemma(&en, b)).unwrap()
        );
    }

    // Every near-synonym pair has a shared translation, a gap marker, or an
    // explicit coverage hole in each shared synset.
    for (a, b) in [("test", "trial"), ("privacy", "privateness")] {
        let report = lex
            .shared_translation_witness(&lemma(&en, a), &lemma(&en, b), &it)
            .unwrap();
        for entry in &report.entries {
            let status = match &entry.status {
                WitnessStatus::Word(witness) => format!("translated by {witness}"),
                WitnessStatus::Gap => "a lexical gap in it".to_string(),
                WitnessStatus::Uncovered => "uncovered in it".to_string(),
            };
            println!("{a}/{b} share {}: {status}", entry.synset);
        }
    }

    // Restriction to one language keeps synset ids and the per-language
    // index intact.
    let english = lex.restrict_to_language(&en);
    println!(
        "restricted to en: {} of {} synsets survive",
        english.len(),
        lex.len()
    );
}
