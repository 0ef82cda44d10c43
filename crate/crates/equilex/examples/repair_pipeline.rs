//! Full repair loop on a synthetic corpus with isolated annotation errors:
//! inject, detect, suggest, apply, re-detect, score.
//!
//! Run with: cargo run --example repair_pipeline

use equilex::model::SynsetId;
use equilex::repair::{apply_corrections, run_repair, ConflictPolicy, RepairPolicy};
use equilex::synth::{
    detectability_census, generate_bitext, generate_lexicon, inject_isolated_reannotations,
    score_correction, score_detection_over_detectable, GenConfig,
};
use equilex::verify::{
    detect_sense_exceptions, enumerate_cor1_triples, enumerate_thm1_quads, Direction,
    SenseInstance, TokenRef,
};

fn main() {
    let config = GenConfig {
        seed: 5,
        n_synsets: 300,
        n_alignments: 3000,
        err_reannotate: 0.0,
        err_misalign: 0.0,
        ..GenConfig::default()
    };
    let lex = generate_lexicon(&config).expect("valid config");
    let clean = generate_bitext(&lex, &config).expect("bilingual synsets");
    let (records, truth) = inject_isolated_reannotations(&clean, &lex, 20, 99);
    println!("injected {} isolated re-annotation errors", truth.len());

    let direction = Direction::SourceToTarget;
    let (suggestions, report) = run_repair(&records, &lex, direction).expect("resolved corpus");
    println!(
        "suggestions: {} CORRECT, {} ADD, {} conflicted token(s)",
        report.suggested_correct, report.suggested_add, report.conflicted_tokens
    );
    for suggestion in suggestions.iter().take(3) {
        println!(
            "  {}",
            serde_json::to_string(&suggestion.to_line()).unwrap()
        );
    }

    // Score detection against the truth log before applying anything.
    let triples = enumerate_cor1_triples(&records, &lex, direction).unwrap();
    let quads = enumerate_thm1_quads(&records, &lex, direction).unwrap();
    let exceptions = detect_sense_exceptions(
        triples
            .into_iter()
            .map(SenseInstance::Triple)
            .chain(quads.into_iter().map(SenseInstance::Quad)),
        direction,
    );
    let supports: Vec<Vec<TokenRef>> = exceptions.iter().map(|e| e.support_refs()).collect();
    let census = detectability_census(&truth, &records, &lex);
    let detection = score_detection_over_detectable(&supports, &truth, &census);
    println!(
        "detection: precision {:.3}, recall {:.3} over {} detectable errors",
        detection.precision, detection.recall, detection.injected
    );

    let outcome = apply_corrections(
        &records,
        &lex,
        &suggestions,
        &RepairPolicy {
            min_support: 1,
            allow_add: true,
            conflict: ConflictPolicy::Skip,
        },
    )
    .expect("isolated errors never conflict");
    println!(
        "applied: {} CORRECT, {} ADD",
        outcome.report.applied_correct, outcome.report.applied_add
    );

    let pairs: Vec<(TokenRef, SynsetId)> = suggestions
        .iter()
        .map(|s| (s.token.clone(), s.to_synset.clone()))
        .collect();
    let correction = score_correction(&pairs, &truth);
    println!(
        "correction accuracy: {:.3} ({} / {} matched suggestions)",
        correction.accuracy, correction.correct, correction.matched
    );

    let post = run_repair(&outcome.records, &outcome.lexicon, direction)
        .expect("resolved corpus")
        .0;
    println!(
        "post-repair suggestions: {} (corpus identical to the clean original: {})",
        post.len(),
        outcome.records == clean
    );
}
