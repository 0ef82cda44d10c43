use serde::Serialize;

use super::alignment::RawAlignment;

/// Instance-filter tally. The categories are checked in a fixed order
/// (multi-sense, then missing annotation, then POS mismatch) so each dropped
/// record is counted exactly once, and the counts always sum to the input
/// size.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub kept: usize,
    pub dropped_multi_sense: usize,
    pub dropped_missing: usize,
    pub dropped_pos_mismatch: usize,
}

impl FilterReport {
    pub fn total(&self) -> usize {
        self.kept + self.dropped_multi_sense + self.dropped_missing + self.dropped_pos_mismatch
    }

    pub fn dropped(&self) -> usize {
        self.total() - self.kept
    }
}

/// Drop alignment instances with multi-sense annotations, missing sense
/// annotations, or mismatched part of speech between the aligned tokens.
pub fn filter_alignments(
    records: impl IntoIterator<Item = RawAlignment>,
) -> (Vec<RawAlignment>, FilterReport) {
    let mut kept = Vec::new();
    let mut report = FilterReport::default();
    for record in records {
        if record.src.annotations.len() > 1 || record.tgt.annotations.len() > 1 {
            report.dropped_multi_sense += 1;
        } else if record.src.annotations.is_empty() || record.tgt.annotations.is_empty() {
            report.dropped_missing += 1;
        } else if record.src.lemma.pos != record.tgt.lemma.pos {
            report.dropped_pos_mismatch += 1;
        } else {
            kept.push(record);
        }
    }
    report.kept = kept.len();
    (kept, report)
}
