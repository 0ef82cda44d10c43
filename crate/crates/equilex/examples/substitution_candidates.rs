//! Turn triple exceptions into substitution-test sentence pairs: when
//! exactly one of the two conflicting senses shares a synset with the other
//! word, swapping the words should preserve meaning if the annotation is
//! right.
//!
//! Run with: cargo run --example substitution_candidates

use equilex::ingest::{parse_sentence_file, Strictness};
use equilex::model::{build_lexicon, LanguageId, MultiSynset, PartOfSpeech, SynsetId};
use equilex::verify::{
    detect_sense_exceptions, enumerate_cor1_triples, generate_substitution_candidates, Direction,
    SenseInstance,
};
use std::io::Cursor;

fn main() {
    let verb = PartOfSpeech::Verb;
    let synset = |id: &str, en: &[&str], it: &[&str]| {
        let mut members = vec![(
            LanguageId::new("en").unwrap(),
            en.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        )];
        if !it.is_empty() {
            members.push((
                LanguageId::new("it").unwrap(),
                it.iter().map(|f| f.to_string()).collect(),
            ));
        }
        MultiSynset::new(SynsetId::new(id).unwrap(), verb, members, []).unwrap()
    };
    // "turned" is annotated with V1, whose members include "reversed";
    // "reversed" is annotated with V2, which does not list "turned".
    let lex = build_lexicon([
        synset("V1", &["turned", "reversed"], &["girare"]),
        synset("V2", &["reversed"], &["invertire"]),
    ])
    .unwrap();

    let alignments = r#"{"sent":"msc42","src":{"lang":"en","lemma":"turned","pos":"v","synset":"V1","tok":2},"tgt":{"lang":"it","lemma":"girare","pos":"v","synset":"V1","tok":2}}
{"sent":"msc77","src":{"lang":"en","lemma":"reversed","pos":"v","synset":"V2","tok":1},"tgt":{"lang":"it","lemma":"girare","pos":"v","synset":"V1","tok":2}}
"#;
    let records =
        equilex::ingest::parse_resolved_alignments(Cursor::new(alignments), Strictness::Strict)
            .unwrap()
            .records;

    let sentences = r#"{"sent":"msc42","lang":"en","tokens":["Their","world","turned","black"]}
{"sent":"msc77","lang":"en","tokens":["He","reversed","the","charges"]}
"#;
    let (sentences, _) = parse_sentence_file(Cursor::new(sentences), Strictness::Strict).unwrap();

    // Both English senses are aligned to the same Italian sense of girare:
    // a triple premise whose conclusion fails, since V1 != V2.
    let direction = Direction::SourceToTarget;
    let triples = enumerate_cor1_triples(&records, &lex, direction).unwrap();
    let exceptions =
        detect_sense_exceptions(triples.into_iter().map(SenseInstance::Triple), direction);
    println!("triple exceptions: {}", exceptions.len());

    let candidates = generate_substitution_candidates(&exceptions, &sentences, &lex, 7).unwrap();
    for candidate in &candidates {
        println!("sentence  {}: {}", candidate.sent, candidate.original);
        println!(
            "modified    {}  ({} -> {} within {})",
            candidate.modified,
            candidate.original_word,
            candidate.replacement_word,
            candidate.synset
        );
    }
}
