//! Command-line wiring: validate, detect, repair, stats, synth and score
//! subcommands over the library pipelines.
//!
//! Exit codes: 0 = clean, 1 = exceptions or unresolved conflicts found,
//! 2 = input error (parse failures are always 2). Reports go to stdout as
//! JSON; `--pretty` renders a table instead.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::ingest::{
    self, filter_alignments, parse_alignment_file, parse_lexicon_records, parse_sense_index,
    resolve_alignments, validate::validate_lexicon_records, write_alignment_file,
    write_lexicon_file, AlignmentRecord, FilterReport, SenseIndex, Strictness,
};
use crate::model::{build_lexicon, LanguageId, Lexicon};
use crate::repair::{
    apply_corrections, merge_suggestions, parse_suggestions_file, run_repair,
    write_suggestions_file, ConflictPolicy, RepairError, RepairPolicy, RepairReport,
};
use crate::synth::{
    generate_bitext, generate_lexicon, inject_errors, parse_truth_file, score_correction,
    score_detection, write_truth_file, GenConfig, TruthLog,
};
use crate::verify::{
    check_alignment_consistency, check_word_theorem, detect_sense_exceptions, ensure_resolved,
    enumerate_cor1_triples, enumerate_thm1_quads, parse_exceptions_file, partition_resolved,
    write_exceptions_file, Direction, ExceptionRecord, SenseInstance, WordCategoryCounts,
};

/// Exit status contract for pipeline automation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Clean,
    Findings,
    InputError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Clean => 0,
            ExitStatus::Findings => 1,
            ExitStatus::InputError => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "equilex",
    version,
    about = "Consistency checking and repair for multi-wordnets and sense-annotated bitexts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a lexicon file and check every structural synset property.
    Validate {
        #[arg(long)]
        lexicon: PathBuf,
        /// Abort on the first malformed line instead of reporting them all.
        #[arg(long)]
        strict: bool,
        /// Emit the report as JSON instead of per-property lines.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate theorem instances over a bitext and report exceptions.
    Detect {
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        alignments: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::All)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = DirectionArg::Both)]
        direction: DirectionArg,
        /// Write exception records (one JSON object per line) here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sense-index file for resolving `sense_no` annotations.
        #[arg(long)]
        sense_index: Option<PathBuf>,
        /// Fail (exit 2) on unresolved synset ids or sense keys instead of
        /// dropping the records.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Suggest corrections for sense-level exceptions; optionally apply them.
    Repair {
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        alignments: PathBuf,
        #[arg(long, default_value_t = 1)]
        min_support: u32,
        /// Apply accepted suggestions and write the amended resources.
        #[arg(long)]
        apply: bool,
        #[arg(long)]
        out_alignments: Option<PathBuf>,
        #[arg(long)]
        out_lexicon: Option<PathBuf>,
        #[arg(long)]
        out_suggestions: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = DirectionArg::St)]
        direction: DirectionArg,
        /// Allow ADD suggestions (extending synsets) to be applied.
        #[arg(long)]
        allow_add: bool,
        #[arg(long, value_enum, default_value_t = ConflictArg::Skip)]
        conflict: ConflictArg,
        #[arg(long)]
        sense_index: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
    },
    /// Lexicon statistics: polysemy histogram and absolute pair counts.
    Stats {
        #[arg(long)]
        lexicon: PathBuf,
        /// Restrict to one language.
        #[arg(long)]
        lang: Option<String>,
        /// Restrict to one language pair, e.g. `en,it`.
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// Generate a seeded lexicon, bitext and truth log.
    Synth {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_lexicon: PathBuf,
        #[arg(long)]
        out_alignments: PathBuf,
        #[arg(long)]
        out_truth: PathBuf,
    },
    /// Score detection and correction output against a truth log.
    Score {
        #[arg(long)]
        exceptions: PathBuf,
        #[arg(long)]
        suggestions: Option<PathBuf>,
        #[arg(long)]
        truth: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Triples,
    Quads,
    Word,
    Consistency,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    St,
    Ts,
    Both,
}

impl DirectionArg {
    fn directions(self) -> Vec<Direction> {
        match self {
            DirectionArg::St => vec![Direction::SourceToTarget],
            DirectionArg::Ts => vec![Direction::TargetToSource],
            DirectionArg::Both => Direction::BOTH.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConflictArg {
    Skip,
    #[value(alias = "highest_support")]
    HighestSupport,
}

struct CliError(String);

fn input_error(e: impl Display) -> CliError {
    CliError(e.to_string())
}

/// Run a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Validate {
            lexicon,
            strict,
            json,
        } => cmd_validate(&lexicon, strict, json),
        Command::Detect {
            lexicon,
            alignments,
            mode,
            direction,
            out,
            sense_index,
            strict,
            pretty,
        } => cmd_detect(
            &lexicon,
            &alignments,
            mode,
            direction,
            out.as_deref(),
            sense_index.as_deref(),
            strict,
            pretty,
        ),
        Command::Repair {
            lexicon,
            alignments,
            min_support,
            apply,
            out_alignments,
            out_lexicon,
            out_suggestions,
            direction,
            allow_add,
            conflict,
            sense_index,
            strict,
        } => cmd_repair(RepairArgs {
            lexicon,
            alignments,
            min_support,
            apply,
            out_alignments,
            out_lexicon,
            out_suggestions,
            direction,
            allow_add,
            conflict,
            sense_index,
            strict,
        }),
        Command::Stats {
            lexicon,
            lang,
            pair,
            pretty,
        } => cmd_stats(&lexicon, lang.as_deref(), pair.as_deref(), pretty),
        Command::Synth {
            config,
            out_lexicon,
            out_alignments,
            out_truth,
        } => cmd_synth(&config, &out_lexicon, &out_alignments, &out_truth),
        Command::Score {
            exceptions,
            suggestions,
            truth,
        } => cmd_score(&exceptions, suggestions.as_deref(), &truth),
    };
    match result {
        Ok(status) => status.code(),
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitStatus::InputError.code()
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError(format!("cannot open {}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError(format!("cannot create {}: {e}", path.display())))
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization cannot fail")
    );
}

fn load_lexicon(path: &Path) -> Result<Lexicon, CliError> {
    let parsed =
        ingest::parse_lexicon_file(open(path)?, Strictness::Strict).map_err(input_error)?;
    build_lexicon(parsed.records).map_err(input_error)
}

fn load_alignments(
    path: &Path,
    sense_index: Option<&Path>,
    strict: bool,
) -> Result<(Vec<AlignmentRecord>, FilterReport, usize), CliError> {
    let parsed = parse_alignment_file(open(path)?, Strictness::Strict).map_err(input_error)?;
    let index: Option<SenseIndex> = match sense_index {
        Some(path) => {
            let (index, diagnostics) =
                parse_sense_index(open(path)?, Strictness::Strict).map_err(input_error)?;
            debug_assert!(diagnostics.is_empty());
            Some(index)
        }
        None => None,
    };
    let (kept, filter) = filter_alignments(parsed.records);
    let outcome = resolve_alignments(kept, index.as_ref());
    if strict {
        if let Some(first) = outcome.dropped.first() {
            return Err(input_error(first));
        }
    }
    Ok((outcome.records, filter, outcome.dropped.len()))
}

fn cmd_validate(path: &Path, strict: bool, json: bool) -> Result<ExitStatus, CliError> {
    let strictness = if strict {
        Strictness::Strict
    } else {
        Strictness::Lenient
    };
    let parsed = parse_lexicon_records(open(path)?, strictness).map_err(input_error)?;
    if !parsed.diagnostics.is_empty() {
        for diagnostic in &parsed.diagnostics {
            eprintln!("parse error: {diagnostic}");
        }
        return Err(CliError(format!(
            "{} malformed line(s) in {}",
            parsed.diagnostics.len(),
            path.display()
        )));
    }
    let report = validate_lexicon_records(&parsed.records);
    if json {
        print_json(&report);
    } else {
        for check in &report.checks {
            let status = if check.passed() { "PASS" } else { "FAIL" };
            println!("{status}  {:<22} {}", check.name, check.description);
            for violation in &check.violations {
                println!("      line {}: {}", violation.line, violation.message);
            }
        }
    }
    if report.passed() {
        Ok(ExitStatus::Clean)
    } else {
        Ok(ExitStatus::Findings)
    }
}

#[derive(Serialize)]
struct CheckEntry {
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    direction: Option<String>,
    instances: usize,
    exceptions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    categories: Option<WordCategoryCounts>,
}

#[derive(Serialize)]
struct DetectReport {
    filter: FilterReport,
    dropped_unresolved: usize,
    checks: Vec<CheckEntry>,
    total_exceptions: usize,
}

#[allow(clippy::too_many_arguments)]
fn cmd_detect(
    lexicon: &Path,
    alignments: &Path,
    mode: ModeArg,
    direction: DirectionArg,
    out: Option<&Path>,
    sense_index: Option<&Path>,
    strict: bool,
    pretty: bool,
) -> Result<ExitStatus, CliError> {
    let lex = load_lexicon(lexicon)?;
    let (records, filter, dropped_keys) = load_alignments(alignments, sense_index, strict)?;
    let (records, dropped) = if strict {
        ensure_resolved(&records, &lex).map_err(input_error)?;
        (records, 0)
    } else {
        let (kept, dropped) = partition_resolved(records, &lex);
        (kept, dropped.len())
    };

    let mut checks = Vec::new();
    let mut exceptions: Vec<ExceptionRecord> = Vec::new();
    let run_sense = |records: &[AlignmentRecord],
                     direction: Direction,
                     triples: bool|
     -> Result<(usize, Vec<ExceptionRecord>), CliError> {
        if triples {
            let instances =
                enumerate_cor1_triples(records, &lex, direction).map_err(input_error)?;
            let n = instances.len();
            let found = detect_sense_exceptions(
                instances.into_iter().map(SenseInstance::Triple),
                direction,
            );
            Ok((n, found))
        } else {
            let instances = enumerate_thm1_quads(records, &lex, direction).map_err(input_error)?;
            let n = instances.len();
            let found =
                detect_sense_exceptions(instances.into_iter().map(SenseInstance::Quad), direction);
            Ok((n, found))
        }
    };

    for dir in direction.directions() {
        if matches!(mode, ModeArg::Triples | ModeArg::All) {
            let (instances, found) = run_sense(&records, dir, true)?;
            checks.push(CheckEntry {
                mode: "triples",
                direction: Some(dir.tag().to_string()),
                instances,
                exceptions: found.len(),
                categories: None,
            });
            exceptions.extend(found);
        }
        if matches!(mode, ModeArg::Quads | ModeArg::All) {
            let (instances, found) = run_sense(&records, dir, false)?;
            checks.push(CheckEntry {
                mode: "quads",
                direction: Some(dir.tag().to_string()),
                instances,
                exceptions: found.len(),
                categories: None,
            });
            exceptions.extend(found);
        }
        if matches!(mode, ModeArg::Word | ModeArg::All) {
            let report = check_word_theorem(&records, &lex, dir);
            let found = report.exceptions();
            checks.push(CheckEntry {
                mode: "word",
                direction: Some(dir.tag().to_string()),
                instances: report.counts.triples,
                exceptions: found.len(),
                categories: Some(report.counts),
            });
            exceptions.extend(found);
        }
    }
    if matches!(mode, ModeArg::Consistency | ModeArg::All) {
        let report = check_alignment_consistency(&records, &lex);
        checks.push(CheckEntry {
            mode: "consistency",
            direction: None,
            instances: report.instances,
            exceptions: report.exceptions.len(),
            categories: None,
        });
        exceptions.extend(report.exceptions);
    }

    if let Some(path) = out {
        let mut writer = create(path)?;
        write_exceptions_file(&mut writer, &exceptions).map_err(input_error)?;
        writer.flush().map_err(input_error)?;
    }

    let report = DetectReport {
        filter,
        dropped_unresolved: dropped + dropped_keys,
        total_exceptions: exceptions.len(),
        checks,
    };
    if pretty {
        println!(
            "{:<12} {:<9} {:>10} {:>10}",
            "check", "direction", "instances", "exceptions"
        );
        for entry in &report.checks {
            println!(
                "{:<12} {:<9} {:>10} {:>10}",
                entry.mode,
                entry.direction.as_deref().unwrap_or("-"),
                entry.instances,
                entry.exceptions
            );
            if let Some(c) = &entry.categories {
                println!(
                    "{:<12} {:<9} polysemy-only {}, synonymy-only {}, both {}, neither {}",
                    "", "", c.polysemy_only, c.synonymy_only, c.both, c.neither
                );
            }
        }
        println!("total exceptions: {}", report.total_exceptions);
    } else {
        print_json(&report);
    }
    if report.total_exceptions > 0 {
        Ok(ExitStatus::Findings)
    } else {
        Ok(ExitStatus::Clean)
    }
}

struct RepairArgs {
    lexicon: PathBuf,
    alignments: PathBuf,
    min_support: u32,
    apply: bool,
    out_alignments: Option<PathBuf>,
    out_lexicon: Option<PathBuf>,
    out_suggestions: Option<PathBuf>,
    direction: DirectionArg,
    allow_add: bool,
    conflict: ConflictArg,
    sense_index: Option<PathBuf>,
    strict: bool,
}

#[derive(Serialize)]
struct RepairCliReport<'a> {
    filter: FilterReport,
    dropped_unresolved: usize,
    suggestions: usize,
    report: &'a RepairReport,
}

fn cmd_repair(args: RepairArgs) -> Result<ExitStatus, CliError> {
    let lex = load_lexicon(&args.lexicon)?;
    let (records, filter, dropped_keys) =
        load_alignments(&args.alignments, args.sense_index.as_deref(), args.strict)?;
    let (records, dropped) = if args.strict {
        ensure_resolved(&records, &lex).map_err(input_error)?;
        (records, 0)
    } else {
        let (kept, dropped) = partition_resolved(records, &lex);
        (kept, dropped.len())
    };

    let (suggestions, mut report) = match args.direction {
        DirectionArg::Both => {
            // Merge exceptions from both directions before aggregation so
            // supports accumulate across directions.
            let mut exceptions = Vec::new();
            for dir in Direction::BOTH {
                let triples = enumerate_cor1_triples(&records, &lex, dir).map_err(input_error)?;
                let quads = enumerate_thm1_quads(&records, &lex, dir).map_err(input_error)?;
                exceptions.extend(detect_sense_exceptions(
                    triples
                        .into_iter()
                        .map(SenseInstance::Triple)
                        .chain(quads.into_iter().map(SenseInstance::Quad)),
                    dir,
                ));
            }
            merge_suggestions(&exceptions, &lex)
        }
        single => {
            let dir = single.directions()[0];
            run_repair(&records, &lex, dir).map_err(input_error)?
        }
    };

    if let Some(path) = &args.out_suggestions {
        let mut writer = create(path)?;
        write_suggestions_file(&mut writer, &suggestions).map_err(input_error)?;
        writer.flush().map_err(input_error)?;
    }

    let mut status = ExitStatus::Clean;
    if args.apply {
        let policy = RepairPolicy {
            min_support: args.min_support,
            allow_add: args.allow_add,
            conflict: match args.conflict {
                ConflictArg::Skip => ConflictPolicy::Skip,
                ConflictArg::HighestSupport => ConflictPolicy::HighestSupport,
            },
        };
        match apply_corrections(&records, &lex, &suggestions, &policy) {
            Ok(outcome) => {
                if let Some(path) = &args.out_alignments {
                    let mut writer = create(path)?;
                    write_alignment_file(&mut writer, &outcome.records).map_err(input_error)?;
                    writer.flush().map_err(input_error)?;
                }
                if let Some(path) = &args.out_lexicon {
                    let mut writer = create(path)?;
                    write_lexicon_file(&mut writer, outcome.lexicon.synsets())
                        .map_err(input_error)?;
                    writer.flush().map_err(input_error)?;
                }
                report = outcome.report;
            }
            Err(err @ RepairError::ConflictUnresolved { .. }) => {
                eprintln!("repair not applied: {err}");
                status = ExitStatus::Findings;
            }
            Err(err) => return Err(input_error(err)),
        }
    } else if args.out_alignments.is_some() || args.out_lexicon.is_some() {
        // Without --apply the resources pass through unchanged.
        if let Some(path) = &args.out_alignments {
            let mut writer = create(path)?;
            write_alignment_file(&mut writer, &records).map_err(input_error)?;
            writer.flush().map_err(input_error)?;
        }
        if let Some(path) = &args.out_lexicon {
            let mut writer = create(path)?;
            write_lexicon_file(&mut writer, lex.synsets()).map_err(input_error)?;
            writer.flush().map_err(input_error)?;
        }
    }

    if !report.conflicts.is_empty() {
        status = ExitStatus::Findings;
    }
    let cli_report = RepairCliReport {
        filter,
        dropped_unresolved: dropped + dropped_keys,
        suggestions: suggestions.len(),
        report: &report,
    };
    print_json(&cli_report);
    Ok(status)
}

#[derive(Serialize)]
struct LanguageStats {
    words: usize,
    monosemous: usize,
    polysemous: usize,
    /// Word counts keyed by number of senses.
    histogram: BTreeMap<usize, usize>,
    absolute_synonym_pairs: usize,
    words_with_absolute_synonym: usize,
}

#[derive(Serialize)]
struct PairStats {
    absolute_translation_pairs: usize,
}

#[derive(Serialize)]
struct StatsReport {
    synsets: usize,
    languages: BTreeMap<String, LanguageStats>,
    pairs: BTreeMap<String, PairStats>,
}

fn language_stats(lex: &Lexicon, lang: &LanguageId) -> LanguageStats {
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut words = 0usize;
    for lemma in lex.lemmas_in(lang) {
        words += 1;
        *histogram.entry(lex.synsets_of(lemma).len()).or_default() += 1;
    }
    let monosemous = histogram.get(&1).copied().unwrap_or(0);
    let pairs = lex.absolute_synonym_pairs(lang);
    let mut with_synonym: Vec<&crate::model::Lemma> = Vec::new();
    for (a, b) in &pairs {
        with_synonym.push(a);
        with_synonym.push(b);
    }
    with_synonym.sort();
    with_synonym.dedup();
    LanguageStats {
        words,
        monosemous,
        polysemous: words - monosemous,
        histogram,
        absolute_synonym_pairs: pairs.len(),
        words_with_absolute_synonym: with_synonym.len(),
    }
}

fn cmd_stats(
    path: &Path,
    lang: Option<&str>,
    pair: Option<&str>,
    pretty: bool,
) -> Result<ExitStatus, CliError> {
    let lex = load_lexicon(path)?;
    let known = lex.languages();
    let parse_lang = |code: &str| -> Result<LanguageId, CliError> {
        let lang = LanguageId::new(code).map_err(input_error)?;
        if !known.contains(&lang) {
            return Err(CliError(format!(
                "language `{lang}` does not occur in the lexicon"
            )));
        }
        Ok(lang)
    };

    let selected_langs: Vec<LanguageId> = match (lang, pair) {
        (Some(code), None) => vec![parse_lang(code)?],
        (None, Some(spec)) => {
            let (e, f) = spec
                .split_once(',')
                .ok_or_else(|| CliError(format!("--pair expects `E,F`, got `{spec}`")))?;
            vec![parse_lang(e.trim())?, parse_lang(f.trim())?]
        }
        (None, None) => known.iter().cloned().collect(),
        (Some(_), Some(_)) => {
            return Err(CliError("--lang and --pair are mutually exclusive".into()))
        }
    };

    let mut languages = BTreeMap::new();
    for l in &selected_langs {
        languages.insert(l.to_string(), language_stats(&lex, l));
    }
    let mut pairs = BTreeMap::new();
    if lang.is_none() {
        for (i, e) in selected_langs.iter().enumerate() {
            for f in &selected_langs[i + 1..] {
                let count = lex
                    .absolute_translation_pairs(e, f)
                    .map_err(input_error)?
                    .len();
                pairs.insert(
                    format!("{e}-{f}"),
                    PairStats {
                        absolute_translation_pairs: count,
                    },
                );
            }
        }
    }
    let report = StatsReport {
        synsets: lex.len(),
        languages,
        pairs,
    };
    if pretty {
        println!("synsets: {}", report.synsets);
        for (code, stats) in &report.languages {
            println!(
                "{code}: {} words ({} monosemous, {} polysemous), {} absolute synonym pairs over {} words",
                stats.words,
                stats.monosemous,
                stats.polysemous,
                stats.absolute_synonym_pairs,
                stats.words_with_absolute_synonym
            );
        }
        for (key, stats) in &report.pairs {
            println!(
                "{key}: {} absolute translation pairs",
                stats.absolute_translation_pairs
            );
        }
    } else {
        print_json(&report);
    }
    Ok(ExitStatus::Clean)
}

#[derive(Serialize)]
struct SynthSummary {
    synsets: usize,
    alignments: usize,
    injected_errors: usize,
}

fn cmd_synth(
    config: &Path,
    out_lexicon: &Path,
    out_alignments: &Path,
    out_truth: &Path,
) -> Result<ExitStatus, CliError> {
    let config = GenConfig::from_json(open(config)?).map_err(input_error)?;
    let lex = generate_lexicon(&config).map_err(input_error)?;
    let records = generate_bitext(&lex, &config).map_err(input_error)?;
    let (corrupted, truth) = inject_errors(&records, &lex, &config);

    let mut writer = create(out_lexicon)?;
    write_lexicon_file(&mut writer, lex.synsets()).map_err(input_error)?;
    writer.flush().map_err(input_error)?;
    let mut writer = create(out_alignments)?;
    write_alignment_file(&mut writer, &corrupted).map_err(input_error)?;
    writer.flush().map_err(input_error)?;
    let mut writer = create(out_truth)?;
    write_truth_file(&mut writer, &truth.entries).map_err(input_error)?;
    writer.flush().map_err(input_error)?;

    print_json(&SynthSummary {
        synsets: lex.len(),
        alignments: corrupted.len(),
        injected_errors: truth.len(),
    });
    Ok(ExitStatus::Clean)
}

#[derive(Serialize)]
struct ScoreReport {
    detection: crate::synth::DetectionScore,
    #[serde(skip_serializing_if = "Option::is_none")]
    correction: Option<crate::synth::CorrectionScore>,
}

fn cmd_score(
    exceptions: &Path,
    suggestions: Option<&Path>,
    truth: &Path,
) -> Result<ExitStatus, CliError> {
    let exceptions = parse_exceptions_file(open(exceptions)?, Strictness::Strict)
        .map_err(input_error)?
        .records;
    let truth_entries = parse_truth_file(open(truth)?, Strictness::Strict)
        .map_err(input_error)?
        .records;
    let truth = TruthLog {
        entries: truth_entries,
    };
    let supports: Vec<Vec<crate::verify::TokenRef>> =
        exceptions.iter().map(|e| e.support.clone()).collect();
    let detection = score_detection(&supports, &truth);

    let correction = match suggestions {
        Some(path) => {
            let lines = parse_suggestions_file(open(path)?, Strictness::Strict)
                .map_err(input_error)?
                .records;
            let mut pairs = Vec::with_capacity(lines.len());
            for line in lines {
                let to = crate::model::SynsetId::new(&line.to).map_err(input_error)?;
                pairs.push((line.token(), to));
            }
            Some(score_correction(&pairs, &truth))
        }
        None => None,
    };
    print_json(&ScoreReport {
        detection,
        correction,
    });
    Ok(ExitStatus::Clean)
}
