//! The line-delimited interchange formats: write canonical files, read them
//! back, filter and resolve annotations, and see what diagnostics look like.
//!
//! Run with: cargo run --example file_formats

use std::io::Cursor;

use equilex::ingest::{
    filter_alignments, parse_alignment_file, parse_lexicon_file, parse_sense_index,
    resolve_alignments, serialize_synset, validate::validate_lexicon_records, Strictness,
};

fn main() {
    // One synset per line; members map languages to word lists, gaps list
    // languages the concept is not lexicalized in.
    let lexicon_text = r#"{"id":"S1","pos":"n","members":{"en":["essence","gist"],"it":["essenza"]}}
{"id":"S2","pos":"n","members":{"en":["privacy"]},"gaps":["it"]}
{"id":"S3","pos":"v","members":{"en":["single out"]}}
"#;
    let parsed = parse_lexicon_file(Cursor::new(lexicon_text), Strictness::Strict).unwrap();
    println!("parsed {} synsets; canonical form:", parsed.records.len());
    for synset in &parsed.records {
        println!("  {}", serialize_synset(synset));
    }

    // Tokens may carry a synset id, a versioned sense number (resolved
    // through a sense index), several annotations, or none at all.
    let alignment_text = r#"{"sent":"s1","src":{"lang":"en","lemma":"gist","pos":"n","synset":"S1","tok":3},"tgt":{"lang":"it","lemma":"essenza","pos":"n","synset":"S1","tok":2}}
{"sent":"s2","src":{"lang":"en","lemma":"gist","pos":"n","sense_no":1,"tok":0},"tgt":{"lang":"it","lemma":"essenza","pos":"n","synset":"S1","tok":0}}
{"sent":"s3","src":{"lang":"en","lemma":"gist","pos":"n","synset":["S1","S2"],"tok":0},"tgt":{"lang":"it","lemma":"essenza","pos":"n","synset":"S1","tok":0}}
{"sent":"s4","src":{"lang":"en","lemma":"gist","pos":"n","tok":0},"tgt":{"lang":"it","lemma":"essenza","pos":"n","synset":"S1","tok":0}}
"#;
    let alignments = parse_alignment_file(Cursor::new(alignment_text), Strictness::Strict).unwrap();
    let (kept, report) = filter_alignments(alignments.records);
    println!(
        "\nfilter: kept {}, multi-sense {}, missing {}, pos-mismatch {}",
        report.kept,
        report.dropped_multi_sense,
        report.dropped_missing,
        report.dropped_pos_mismatch
    );

    let index_text = r#"{"lang":"en","lemma":"gist","pos":"n","senses":["S1"]}
"#;
    let (index, _) = parse_sense_index(Cursor::new(index_text), Strictness::Strict).unwrap();
    let resolved = resolve_alignments(kept, Some(&index));
    println!(
        "resolved {} records ({} dropped)",
        resolved.records.len(),
        resolved.dropped.len()
    );

    // Lenient parsing collects positioned diagnostics instead of aborting.
    let damaged = r#"{"id":"S1","pos":"n","members":{"en":["dog"]}}
{"id":"S2","members":{"en":["cat"]}}
{"id":"S3","pos":"x","members":{"en":["fox"]}}
"#;
    let parsed = parse_lexicon_file(Cursor::new(damaged), Strictness::Lenient).unwrap();
    println!(
        "\nlenient parse kept {} of 3 lines; diagnostics:",
        parsed.records.len()
    );
    for diagnostic in &parsed.diagnostics {
        println!("  {diagnostic}");
    }

    // Structural validation classifies semantic damage by synset property.
    let conflicted = r#"{"id":"S1","pos":"n","members":{"en":["dog","Dog"]},"gaps":["en"]}
"#;
    let raw = equilex::ingest::parse_lexicon_records(Cursor::new(conflicted), Strictness::Strict)
        .unwrap();
    let report = validate_lexicon_records(&raw.records);
    for check in report.checks.iter().filter(|c| !c.passed()) {
        println!("\nFAIL {}:", check.name);
        for violation in &check.violations {
            println!("  line {}: {}", violation.line, violation.message);
        }
    }
}
