//! Generate a ground-truth corpus, corrupt it, and run all four checkers,
//! printing an instances/exceptions table per check and direction.
//!
//! Run with: cargo run --example detect_exceptions

use equilex::synth::{generate_bitext, generate_lexicon, inject_errors, GenConfig};
use equilex::verify::{
    check_alignment_consistency, check_word_theorem, detect_sense_exceptions,
    enumerate_cor1_triples, enumerate_thm1_quads, Direction, SenseInstance,
};

fn main() {
    let config = GenConfig {
        seed: 11,
        n_synsets: 400,
        n_alignments: 4000,
        err_reannotate: 0.01,
        err_misalign: 0.005,
        ..GenConfig::default()
    };
    let lex = generate_lexicon(&config).expect("valid config");
    let clean = generate_bitext(&lex, &config).expect("bilingual synsets");
    let (records, truth) = inject_errors(&clean, &lex, &config);
    println!(
        "corpus: {} aligned pairs, {} injected errors\n",
        records.len(),
        truth.len()
    );

    println!(
        "{:<12} {:<10} {:>10} {:>10}",
        "check", "direction", "instances", "exceptions"
    );
    for direction in Direction::BOTH {
        let triples = enumerate_cor1_triples(&records, &lex, direction).unwrap();
        let exceptions = detect_sense_exceptions(
            triples.iter().cloned().map(SenseInstance::Triple),
            direction,
        );
        println!(
            "{:<12} {:<10} {:>10} {:>10}",
            "triples",
            direction.tag(),
            triples.len(),
            exceptions.len()
        );

        let quads = enumerate_thm1_quads(&records, &lex, direction).unwrap();
        let exceptions =
            detect_sense_exceptions(quads.iter().cloned().map(SenseInstance::Quad), direction);
        println!(
            "{:<12} {:<10} {:>10} {:>10}",
            "quads",
            direction.tag(),
            quads.len(),
            exceptions.len()
        );

        let word = check_word_theorem(&records, &lex, direction);
        println!(
            "{:<12} {:<10} {:>10} {:>10}",
            "word",
            direction.tag(),
            word.counts.triples,
            word.counts.neither
        );
        println!(
            "{:<23} polysemy-only {}, synonymy-only {}, both {}",
            "", word.counts.polysemy_only, word.counts.synonymy_only, word.counts.both
        );
    }

    let consistency = check_alignment_consistency(&records, &lex);
    println!(
        "{:<12} {:<10} {:>10} {:>10}",
        "consistency",
        "-",
        consistency.instances,
        consistency.exceptions.len()
    );

    // A couple of concrete exceptions, as they would land in the output file.
    println!("\nfirst exceptions as line records:");
    for record in consistency.exceptions.iter().take(2) {
        println!("{}", serde_json::to_string(&record.to_line()).unwrap());
    }
}
