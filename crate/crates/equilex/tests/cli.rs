//! End-to-end tests of the `equilex` binary: exit-code contract, report
//! shapes, determinism, and pipeline closure (every output feeds the
//! consuming command).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use equilex::ingest::{write_alignment_file, write_lexicon_file};
use equilex::synth::{generate_bitext, generate_lexicon, inject_isolated_reannotations, GenConfig};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_equilex"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).expect("fixture writes");
    path
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

const TOY_LEXICON: &str = r#"{"id":"S1","pos":"n","members":{"en":["test","trial"],"it":["prova"]}}
{"id":"S2","pos":"n","members":{"en":["proof"],"it":["prova"]}}
{"id":"S3","pos":"n","members":{"en":["liter","litre"],"it":["litro"]}}
"#;

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let valid = write(dir.path(), "valid.jsonl", TOY_LEXICON);
    let output = run(&["validate", "--lexicon", valid.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");

    // Member/gap conflict: structural finding, exit 1, named check.
    let conflicted = write(
        dir.path(),
        "conflict.jsonl",
        r#"{"id":"S1","pos":"n","members":{"en":["dog"]},"gaps":["en"]}"#,
    );
    let output = run(&["validate", "--lexicon", conflicted.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("member-gap-disjoint"), "{stdout}");

    // Duplicate sense listing: exit 1 citing property 4.
    let duplicated = write(
        dir.path(),
        "dup.jsonl",
        r#"{"id":"S1","pos":"n","members":{"en":["dog","Dog"]}}"#,
    );
    let output = run(&["validate", "--lexicon", duplicated.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("FAIL  synset-property-4"), "{stdout}");

    // Malformed line: parse failure, exit 2.
    let malformed = write(
        dir.path(),
        "broken.jsonl",
        r#"{"id":"S1","members":{"en":["dog"]}}"#,
    );
    let output = run(&["validate", "--lexicon", malformed.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    // Missing file is also an input error.
    let output = run(&["validate", "--lexicon", "/nonexistent.jsonl"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn stats_counts_toy_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let lexicon = write(dir.path(), "lex.jsonl", TOY_LEXICON);
    let output = run(&["stats", "--lexicon", lexicon.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let report = stdout_json(&output);
    // liter/litre and test/trial each share all their synsets. The cross
    // pairs are liter/litro and litre/litro; test and trial don't pair with
    // prova, which has the extra proof synset.
    assert_eq!(report["languages"]["en"]["absolute_synonym_pairs"], 2);
    assert_eq!(report["languages"]["en"]["words_with_absolute_synonym"], 4);
    assert_eq!(report["pairs"]["en-it"]["absolute_translation_pairs"], 2);
    assert_eq!(report["languages"]["it"]["polysemous"], 1);

    // Unknown language selector: input error.
    let output = run(&[
        "stats",
        "--lexicon",
        lexicon.to_str().unwrap(),
        "--lang",
        "xx",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn stats_on_empty_lexicon_is_all_zero() {
    let dir = tempfile::tempdir().unwrap();
    let lexicon = write(dir.path(), "empty.jsonl", "");
    let output = run(&["stats", "--lexicon", lexicon.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let report = stdout_json(&output);
    assert_eq!(report["synsets"], 0);
}

fn synth_config(dir: &Path, seed: u64, errors: bool) -> PathBuf {
    let (re, mis) = if errors { (0.01, 0.005) } else { (0.0, 0.0) };
    write(
        dir,
        &format!("config_{seed}_{errors}.json"),
        &format!(
            r#"{{"seed":{seed},"n_synsets":120,"languages":["en","it"],"gap_rate":0.1,"synonym_rate":1.5,"polysemy_shape":1.5,"n_alignments":600,"err_reannotate":{re},"err_misalign":{mis}}}"#
        ),
    )
}

struct SynthFiles {
    lexicon: PathBuf,
    alignments: PathBuf,
    truth: PathBuf,
}

fn run_synth(dir: &Path, tag: &str, config: &Path) -> SynthFiles {
    let files = SynthFiles {
        lexicon: dir.join(format!("lex_{tag}.jsonl")),
        alignments: dir.join(format!("align_{tag}.jsonl")),
        truth: dir.join(format!("truth_{tag}.jsonl")),
    };
    let output = run(&[
        "synth",
        "--config",
        config.to_str().unwrap(),
        "--out-lexicon",
        files.lexicon.to_str().unwrap(),
        "--out-alignments",
        files.alignments.to_str().unwrap(),
        "--out-truth",
        files.truth.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    files
}

#[test]
fn synth_is_deterministic_and_detect_branches_on_cleanliness() {
    let dir = tempfile::tempdir().unwrap();
    let config = synth_config(dir.path(), 42, false);
    let first = run_synth(dir.path(), "a", &config);
    let second = run_synth(dir.path(), "b", &config);
    assert_eq!(
        fs::read(&first.lexicon).unwrap(),
        fs::read(&second.lexicon).unwrap()
    );
    assert_eq!(
        fs::read(&first.alignments).unwrap(),
        fs::read(&second.alignments).unwrap()
    );
    assert_eq!(fs::read(&first.truth).unwrap(), b"");

    // Clean corpus: detect exits 0 with zero exceptions.
    let output = run(&[
        "detect",
        "--lexicon",
        first.lexicon.to_str().unwrap(),
        "--alignments",
        first.alignments.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let report = stdout_json(&output);
    assert_eq!(report["total_exceptions"], 0);
    assert_eq!(report["filter"]["kept"], 600);

    // Corrupted corpus: detect exits 1 and the word check reports its
    // four-way categorization.
    let config = synth_config(dir.path(), 43, true);
    let corrupted = run_synth(dir.path(), "c", &config);
    assert_ne!(fs::read(&corrupted.truth).unwrap(), b"");
    let exceptions_path = dir.path().join("exceptions.jsonl");
    let output = run(&[
        "detect",
        "--lexicon",
        corrupted.lexicon.to_str().unwrap(),
        "--alignments",
        corrupted.alignments.to_str().unwrap(),
        "--mode",
        "all",
        "--direction",
        "both",
        "--out",
        exceptions_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
    let report = stdout_json(&output);
    assert!(report["total_exceptions"].as_u64().unwrap() > 0);
    let word_entry = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["mode"] == "word")
        .expect("word check present");
    assert!(word_entry["categories"]["polysemy_only"].is_u64());

    // Pipeline closure: the exceptions file scores against the truth log.
    let output = run(&[
        "score",
        "--exceptions",
        exceptions_path.to_str().unwrap(),
        "--truth",
        corrupted.truth.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let score = stdout_json(&output);
    assert_eq!(score["detection"]["precision"], 1.0);
    assert_eq!(score["detection"]["recall"], 1.0);
}

#[test]
fn score_of_a_clean_run_is_one_by_convention() {
    let dir = tempfile::tempdir().unwrap();
    let exceptions = write(dir.path(), "exceptions.jsonl", "");
    let truth = write(dir.path(), "truth.jsonl", "");
    let output = run(&[
        "score",
        "--exceptions",
        exceptions.to_str().unwrap(),
        "--truth",
        truth.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let score = stdout_json(&output);
    assert_eq!(score["detection"]["precision"], 1.0);
    assert_eq!(score["detection"]["recall"], 1.0);
}

#[test]
fn repair_clean_inputs_pass_through_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let config = synth_config(dir.path(), 44, false);
    let clean = run_synth(dir.path(), "clean", &config);
    let out_alignments = dir.path().join("out_align.jsonl");
    let out_lexicon = dir.path().join("out_lex.jsonl");
    let out_suggestions = dir.path().join("out_sugg.jsonl");
    let output = run(&[
        "repair",
        "--lexicon",
        clean.lexicon.to_str().unwrap(),
        "--alignments",
        clean.alignments.to_str().unwrap(),
        "--apply",
        "--out-alignments",
        out_alignments.to_str().unwrap(),
        "--out-lexicon",
        out_lexicon.to_str().unwrap(),
        "--out-suggestions",
        out_suggestions.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let report = stdout_json(&output);
    assert_eq!(report["suggestions"], 0);
    assert_eq!(
        fs::read(&out_alignments).unwrap(),
        fs::read(&clean.alignments).unwrap()
    );
    assert_eq!(
        fs::read(&out_lexicon).unwrap(),
        fs::read(&clean.lexicon).unwrap()
    );
    assert_eq!(fs::read(&out_suggestions).unwrap(), b"");
}

#[test]
fn repair_recovers_isolated_errors_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    // Build the isolated-error corpus with the library, drive everything
    // else through the binary.
    let config = GenConfig {
        seed: 45,
        n_synsets: 120,
        n_alignments: 600,
        err_reannotate: 0.0,
        err_misalign: 0.0,
        ..GenConfig::default()
    };
    let lex = generate_lexicon(&config).unwrap();
    let clean = generate_bitext(&lex, &config).unwrap();
    let (corrupted, truth) = inject_isolated_reannotations(&clean, &lex, 10, 9);
    assert_eq!(truth.len(), 10);

    let lexicon_path = dir.path().join("lex.jsonl");
    let mut writer = fs::File::create(&lexicon_path).unwrap();
    write_lexicon_file(&mut writer, lex.synsets()).unwrap();
    let alignments_path = dir.path().join("align.jsonl");
    let mut writer = fs::File::create(&alignments_path).unwrap();
    write_alignment_file(&mut writer, &corrupted).unwrap();
    let truth_path = dir.path().join("truth.jsonl");
    let mut writer = fs::File::create(&truth_path).unwrap();
    equilex::synth::write_truth_file(&mut writer, &truth.entries).unwrap();

    let out_alignments = dir.path().join("repaired_align.jsonl");
    let out_lexicon = dir.path().join("repaired_lex.jsonl");
    let out_suggestions = dir.path().join("suggestions.jsonl");
    let repair_args = [
        "repair",
        "--lexicon",
        lexicon_path.to_str().unwrap(),
        "--alignments",
        alignments_path.to_str().unwrap(),
        "--direction",
        "st",
        "--apply",
        "--out-alignments",
        out_alignments.to_str().unwrap(),
        "--out-lexicon",
        out_lexicon.to_str().unwrap(),
        "--out-suggestions",
        out_suggestions.to_str().unwrap(),
    ];
    let output = run(&repair_args);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let report = stdout_json(&output);
    assert_eq!(report["suggestions"], 10);
    assert_eq!(report["report"]["applied_correct"], 10);

    // Suggestions are byte-deterministic across runs.
    let rerun_suggestions = dir.path().join("suggestions2.jsonl");
    let rerun_args: Vec<&str> = repair_args
        .iter()
        .map(|s| {
            if *s == out_suggestions.to_str().unwrap() {
                rerun_suggestions.to_str().unwrap()
            } else {
                *s
            }
        })
        .collect();
    let output = run(&rerun_args);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        fs::read(&out_suggestions).unwrap(),
        fs::read(&rerun_suggestions).unwrap()
    );

    // Correction scoring: every suggestion recovers the true synset.
    let output = run(&[
        "score",
        "--exceptions",
        out_suggestions.to_str().unwrap(), // any jsonl with support? no: use empty exceptions
        "--truth",
        truth_path.to_str().unwrap(),
    ]);
    // The suggestions file is not an exceptions file; scoring must reject it.
    assert_eq!(output.status.code(), Some(2), "{output:?}");

    let exceptions_path = dir.path().join("exceptions.jsonl");
    let output = run(&[
        "detect",
        "--lexicon",
        lexicon_path.to_str().unwrap(),
        "--alignments",
        alignments_path.to_str().unwrap(),
        "--out",
        exceptions_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let output = run(&[
        "score",
        "--exceptions",
        exceptions_path.to_str().unwrap(),
        "--suggestions",
        out_suggestions.to_str().unwrap(),
        "--truth",
        truth_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let score = stdout_json(&output);
    assert_eq!(score["detection"]["recall"], 1.0);
    assert_eq!(score["detection"]["precision"], 1.0);
    assert_eq!(score["correction"]["accuracy"], 1.0);
    assert_eq!(score["correction"]["matched"], 10);

    // Pipeline closure: the repaired resources re-detect clean.
    let output = run(&[
        "detect",
        "--lexicon",
        out_lexicon.to_str().unwrap(),
        "--alignments",
        out_alignments.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let report = stdout_json(&output);
    assert_eq!(report["total_exceptions"], 0);
}

#[test]
fn repair_conflicts_exit_one_under_skip_policy() {
    let dir = tempfile::tempdir().unwrap();
    // One src token aligned to targets in two different synsets, each
    // exception implying a different re-annotation for it.
    let lexicon = write(
        dir.path(),
        "lex.jsonl",
        r#"{"id":"S1","pos":"n","members":{"en":["exam","test","trial"],"it":["prova"]}}
{"id":"S2","pos":"n","members":{"en":["exam","quiz"],"it":["esame"]}}
{"id":"S3","pos":"n","members":{"en":["exam","paper"],"it":["compito"]}}
"#,
    );
    let alignments = write(
        dir.path(),
        "align.jsonl",
        r#"{"sent":"s1","src":{"lang":"en","lemma":"exam","pos":"n","synset":"S2","tok":0},"tgt":{"lang":"it","lemma":"prova","pos":"n","synset":"S1","tok":0}}
{"sent":"s1","src":{"lang":"en","lemma":"exam","pos":"n","synset":"S2","tok":0},"tgt":{"lang":"it","lemma":"compito","pos":"n","synset":"S3","tok":1}}
{"sent":"s2","src":{"lang":"en","lemma":"trial","pos":"n","synset":"S1","tok":0},"tgt":{"lang":"it","lemma":"prova","pos":"n","synset":"S1","tok":0}}
{"sent":"s3","src":{"lang":"en","lemma":"paper","pos":"n","synset":"S3","tok":0},"tgt":{"lang":"it","lemma":"compito","pos":"n","synset":"S3","tok":0}}
"#,
    );
    let output = run(&[
        "repair",
        "--lexicon",
        lexicon.to_str().unwrap(),
        "--alignments",
        alignments.to_str().unwrap(),
        "--apply",
    ]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
    let report = stdout_json(&output);
    assert!(report["report"]["conflicted_tokens"].as_u64().unwrap() >= 1);
    assert!(!report["report"]["conflicts"].as_array().unwrap().is_empty());
}

#[test]
fn detect_strict_fails_on_unresolved_synsets() {
    let dir = tempfile::tempdir().unwrap();
    let lexicon = write(dir.path(), "lex.jsonl", TOY_LEXICON);
    let alignments = write(
        dir.path(),
        "align.jsonl",
        r#"{"sent":"s1","src":{"lang":"en","lemma":"test","pos":"n","synset":"S9","tok":0},"tgt":{"lang":"it","lemma":"prova","pos":"n","synset":"S1","tok":0}}
"#,
    );
    let output = run(&[
        "detect",
        "--lexicon",
        lexicon.to_str().unwrap(),
        "--alignments",
        alignments.to_str().unwrap(),
        "--strict",
    ]);
    assert_eq!(output.status.code(), Some(2), "{output:?}");

    // Lenient mode drops the record and reports it.
    let output = run(&[
        "detect",
        "--lexicon",
        lexicon.to_str().unwrap(),
        "--alignments",
        alignments.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    let report = stdout_json(&output);
    assert_eq!(report["dropped_unresolved"], 1);
}

#[test]
fn detect_resolves_sense_numbers_through_the_index() {
    let dir = tempfile::tempdir().unwrap();
    let lexicon = write(dir.path(), "lex.jsonl", TOY_LEXICON);
    let sense_index = write(
        dir.path(),
        "senses.jsonl",
        r#"{"lang":"en","lemma":"test","pos":"n","senses":["S1"]}
{"lang":"it","lemma":"prova","pos":"n","senses":["S1","S2"]}
"#,
    );
    let alignments = write(
        dir.path(),
        "align.jsonl",
        r#"{"sent":"s1","src":{"lang":"en","lemma":"test","pos":"n","sense_no":1,"tok":0},"tgt":{"lang":"it","lemma":"prova","pos":"n","sense_no":1,"tok":0}}
{"sent":"s2","src":{"lang":"en","lemma":"test","pos":"n","sense_no":1,"tok":0},"tgt":{"lang":"it","lemma":"prova","pos":"n","sense_no":2,"tok":0}}
"#,
    );
    let output = run(&[
        "detect",
        "--lexicon",
        lexicon.to_str().unwrap(),
        "--alignments",
        alignments.to_str().unwrap(),
        "--sense-index",
        sense_index.to_str().unwrap(),
        "--mode",
        "consistency",
    ]);
    // The second record resolves to a mismatched pair: one exception.
    assert_eq!(output.status.code(), Some(1), "{output:?}");
    let report = stdout_json(&output);
    assert_eq!(report["total_exceptions"], 1);
}
