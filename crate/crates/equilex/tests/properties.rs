//! Property tests for the pieces with wide input domains: form
//! normalization, the instance filter tally, and parser robustness.

use std::io::Cursor;

use proptest::prelude::*;

use equilex::ingest::{
    filter_alignments, parse_alignment_file, parse_lexicon_file, RawAlignment, RawAnnotation,
    RawToken, Strictness,
};
use equilex::model::{normalize_form, LanguageId, Lemma, PartOfSpeech, SynsetId};

proptest! {
    /// Normalization is idempotent and never yields interior runs of
    /// whitespace.
    #[test]
    fn normalize_form_is_idempotent(raw in ".{0,40}") {
        let once = normalize_form(&raw);
        prop_assert_eq!(normalize_form(&once), once.clone());
        prop_assert!(!once.contains("  "));
        prop_assert_eq!(once.trim(), once.as_str());
    }

    /// The filter never loses or double-counts a record: category counts
    /// always sum to the input size.
    #[test]
    fn filter_report_counts_partition_the_input(defects in proptest::collection::vec(0u8..4, 0..120)) {
        let en = LanguageId::new("en").unwrap();
        let it = LanguageId::new("it").unwrap();
        let ann = |id: &str| RawAnnotation::Synset(SynsetId::new(id).unwrap());
        let records: Vec<RawAlignment> = defects
            .iter()
            .enumerate()
            .map(|(i, defect)| {
                let mut record = RawAlignment {
                    sent: format!("s{i}"),
                    src: RawToken {
                        lemma: Lemma::new(en.clone(), "test", PartOfSpeech::Noun).unwrap(),
                        annotations: vec![ann("S1")],
                        tok: 0,
                    },
                    tgt: RawToken {
                        lemma: Lemma::new(it.clone(), "prova", PartOfSpeech::Noun).unwrap(),
                        annotations: vec![ann("S1")],
                        tok: 0,
                    },
                    line: i as u64 + 1,
                };
                match defect {
                    1 => record.src.annotations.push(ann("S2")),
                    2 => record.tgt.annotations.clear(),
                    3 => record.src.lemma.pos = PartOfSpeech::Verb,
                    _ => {}
                }
                record
            })
            .collect();
        let expected_kept = defects.iter().filter(|d| **d == 0).count();
        let (kept, report) = filter_alignments(records);
        prop_assert_eq!(report.total(), defects.len());
        prop_assert_eq!(kept.len(), report.kept);
        prop_assert_eq!(report.kept, expected_kept);
    }

    /// The parsers return a diagnostic or a record for every input, but
    /// never panic, whatever bytes arrive.
    #[test]
    fn parsers_never_panic_on_arbitrary_text(text in ".{0,200}") {
        let _ = parse_lexicon_file(Cursor::new(text.as_bytes()), Strictness::Lenient);
        let _ = parse_alignment_file(Cursor::new(text.as_bytes()), Strictness::Lenient);
    }
}
