//! The `refdetect` command line: `detect`, `evaluate` and `calibrate`.
//!
//! Exit codes: 0 on success, 2 on input errors (unreadable repositories or
//! directories, malformed config, oracle or manifest, uncovered calibration
//! types). Source files that fail to parse are reported on stderr and left
//! out of the analysis without changing the exit code.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::calibration::{
    calibrate_all, evaluate_corpus, load_corpus, load_manifest, load_oracle, parse_grid,
    precision_recall, CalibrationError, CalibrationOptions, Counts, CorpusError, EvalReport,
    MatchMode, OracleError,
};
use crate::engine::{Relationship, RelationshipType};
use crate::pipeline::AnalyzedPair;
use crate::repo_io::{list_commits, load_commit_pair, load_directory_pair, RepoError};
use crate::source_model::ParseError;
use crate::thresholds::{ConfigError, ThresholdConfig};

/// Environment variable naming a threshold file used when `--config` is
/// absent.
pub const CONFIG_ENV: &str = "REFDETECT_CONFIG";

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "refdetect", version, about = "Detect refactorings between two revisions of a Java source tree")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the refactorings between two revisions.
    Detect(DetectArgs),
    /// Compare detected refactorings with an oracle.
    Evaluate(EvaluateArgs),
    /// Choose per-type thresholds that maximize F1 on an oracle corpus.
    Calibrate(CalibrateArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Git repository to read commits from.
    #[arg(long, requires = "revision")]
    repo: Option<PathBuf>,
    /// Commit to compare with its parent.
    #[arg(long, group = "revision")]
    commit: Option<String>,
    /// Revision range (`A..B`); every non-merge commit in it is analyzed.
    #[arg(long, group = "revision")]
    range: Option<String>,
    /// Directory holding the before revision.
    #[arg(long, requires = "after", conflicts_with = "repo")]
    before: Option<PathBuf>,
    /// Directory holding the after revision.
    #[arg(long, requires = "before", conflicts_with = "repo")]
    after: Option<PathBuf>,
    /// Threshold file; defaults to $REFDETECT_CONFIG, then the packaged thresholds.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads for range mode.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct DetectArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Include per-pair wall-clock milliseconds in each record.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Oracle CSV (`type,before,after`).
    #[arg(long, required_unless_present = "corpus")]
    oracle: Option<PathBuf>,
    /// Corpus manifest; evaluates every pair against its own oracle.
    #[arg(long, conflicts_with_all = ["oracle", "repo", "before"])]
    corpus: Option<PathBuf>,
    /// Compare method descriptors without their parameter lists.
    #[arg(long)]
    lenient_methods: bool,
}

#[derive(Debug, Args)]
struct CalibrateArgs {
    /// Corpus manifest listing revision pairs and their oracles.
    #[arg(long)]
    corpus: PathBuf,
    /// Threshold grid as start:stop:step.
    #[arg(long, default_value = "0.1:0.9:0.1")]
    grid: String,
    /// Where to write the calibrated threshold file.
    #[arg(long)]
    out: PathBuf,
    /// Starting thresholds; defaults to $REFDETECT_CONFIG, then the packaged thresholds.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    lenient_methods: bool,
    /// Keep the starting threshold of types the oracle never mentions.
    #[arg(long)]
    allow_uncovered: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Repo(#[from] RepoError),
    #[error("{path}: {source}")]
    Config {
        path: String,
        #[source]
        source: ConfigError,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Calibration(#[from] CalibrationError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0} revision pair(s) could not be analyzed")]
    PartialFailure(usize),
}

/// Runs the command line with explicit output streams and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let mut out = String::new();
    let mut diag = String::new();
    let result = match cli.command {
        Command::Detect(a) => cmd_detect(&a, &mut out, &mut diag),
        Command::Evaluate(a) => cmd_evaluate(&a, &mut out, &mut diag),
        Command::Calibrate(a) => cmd_calibrate(&a, &mut out, &mut diag),
    };
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    let code = match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            EXIT_INPUT
        }
    };
    let _ = stderr.write_all(diag.as_bytes());
    code
}

fn resolve_config(path: Option<&Path>) -> Result<ThresholdConfig, CliError> {
    let env_path = std::env::var_os(CONFIG_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
    match path.map(Path::to_path_buf).or(env_path) {
        Some(p) => ThresholdConfig::load(&p).map_err(|source| CliError::Config {
            path: p.display().to_string(),
            source,
        }),
        None => Ok(ThresholdConfig::packaged()),
    }
}

enum Input {
    Directories(PathBuf, PathBuf),
    Commit(PathBuf, String),
    Range(PathBuf, String),
}

impl InputArgs {
    fn input(&self) -> Result<Input, CliError> {
        match (&self.before, &self.after, &self.repo, &self.commit, &self.range) {
            (Some(b), Some(a), None, None, None) => Ok(Input::Directories(b.clone(), a.clone())),
            (None, None, Some(r), Some(c), None) => Ok(Input::Commit(r.clone(), c.clone())),
            (None, None, Some(r), None, Some(g)) => Ok(Input::Range(r.clone(), g.clone())),
            _ => Err(CliError::Usage(
                "give either --before and --after, or --repo with --commit or --range".into(),
            )),
        }
    }
}

struct PairResult {
    label: String,
    refactorings: Vec<Relationship>,
    parse_errors: Vec<ParseError>,
    elapsed: Duration,
}

fn analyze(pair: crate::repo_io::RevisionPair, config: &ThresholdConfig, started: Instant) -> PairResult {
    let analyzed = AnalyzedPair::new(&pair);
    let refactorings = analyzed.refactorings(config);
    PairResult {
        label: analyzed.label,
        refactorings,
        parse_errors: analyzed.errors,
        elapsed: started.elapsed(),
    }
}

/// Analyzes the requested revision pairs. Pairs that fail to load are
/// reported on `diag` and counted; the rest are returned in input order.
fn run_input(args: &InputArgs, config: &ThresholdConfig, diag: &mut String) -> Result<(Vec<PairResult>, usize), CliError> {
    let results = match args.input()? {
        Input::Directories(b, a) => {
            let t = Instant::now();
            vec![analyze(load_directory_pair(&b, &a)?, config, t)]
        }
        Input::Commit(repo, commit) => {
            let t = Instant::now();
            vec![analyze(load_commit_pair(&repo, &commit)?, config, t)]
        }
        Input::Range(repo, range) => {
            let commits = list_commits(&repo, &range)?;
            let one = |c: &String| -> Result<PairResult, RepoError> {
                let t = Instant::now();
                Ok(analyze(load_commit_pair(&repo, c)?, config, t))
            };
            let outcomes: Vec<Result<PairResult, RepoError>> = if args.jobs > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(args.jobs as usize)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                pool.install(|| commits.par_iter().map(one).collect())
            } else {
                commits.iter().map(one).collect()
            };
            let mut ok = Vec::new();
            let mut failed = 0;
            for (c, r) in commits.iter().zip(outcomes) {
                match r {
                    Ok(p) => ok.push(p),
                    Err(e) => {
                        failed += 1;
                        let _ = writeln!(diag, "error: {c}: {e}");
                    }
                }
            }
            return Ok((report_parse_errors(ok, diag), failed));
        }
    };
    Ok((report_parse_errors(results, diag), 0))
}

fn report_parse_errors(results: Vec<PairResult>, diag: &mut String) -> Vec<PairResult> {
    for r in &results {
        for e in &r.parse_errors {
            let _ = writeln!(diag, "warning: {}: skipped {e}", r.label);
        }
    }
    results
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct DetectionRecord<'a> {
    label: &'a str,
    #[serde(rename = "type")]
    kind: RelationshipType,
    before: String,
    after: String,
    similarity: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_millis: Option<u64>,
}

fn round3(x: f64) -> f64 {
    (x * 1000.0).round() / 1000.0
}

fn records(results: &[PairResult], timing: bool) -> Vec<DetectionRecord<'_>> {
    results
        .iter()
        .flat_map(|p| {
            let ms = timing.then_some(p.elapsed.as_millis() as u64);
            p.refactorings.iter().map(move |r| DetectionRecord {
                label: &p.label,
                kind: r.kind,
                before: r.before.descriptor(),
                after: r.after.descriptor(),
                similarity: round3(r.similarity),
                elapsed_millis: ms,
            })
        })
        .collect()
}

fn write_csv(records: &[DetectionRecord<'_>], timing: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["type", "before", "after", "similarity", "label"];
    if timing {
        header.push("elapsed_ms");
    }
    w.write_record(&header).expect("in-memory write");
    for r in records {
        let mut row = vec![
            r.kind.to_string(),
            r.before.clone(),
            r.after.clone(),
            format!("{:.3}", r.similarity),
            r.label.to_string(),
        ];
        if let Some(ms) = r.elapsed_millis {
            row.push(ms.to_string());
        }
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn cmd_detect(args: &DetectArgs, out: &mut String, diag: &mut String) -> Result<(), CliError> {
    let config = resolve_config(args.input.config.as_deref())?;
    let (results, failed) = run_input(&args.input, &config, diag)?;
    let recs = records(&results, args.timing);
    match args.format {
        Format::Csv => out.push_str(&write_csv(&recs, args.timing)),
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&recs).expect("records serialize"));
            out.push('\n');
        }
    }
    if failed > 0 {
        return Err(CliError::PartialFailure(failed));
    }
    Ok(())
}

fn mode(lenient: bool) -> MatchMode {
    if lenient {
        MatchMode::LenientMethods
    } else {
        MatchMode::Strict
    }
}

fn cmd_evaluate(args: &EvaluateArgs, out: &mut String, diag: &mut String) -> Result<(), CliError> {
    let config = resolve_config(args.input.config.as_deref())?;
    let supported: BTreeSet<RelationshipType> = RelationshipType::REFACTORINGS.into_iter().collect();
    let mode = mode(args.lenient_methods);
    let report = if let Some(manifest) = &args.corpus {
        let loaded = load_corpus(&load_manifest(manifest)?);
        if let Some(e) = loaded.failures.into_iter().next() {
            return Err(e.into());
        }
        evaluate_corpus(&loaded.pairs, &config, &supported, mode)
    } else {
        let oracle_path = args.oracle.as_ref().expect("clap requires --oracle");
        let oracle = load_oracle(oracle_path)?;
        let (results, failed) = run_input(&args.input, &config, diag)?;
        if failed > 0 {
            return Err(CliError::PartialFailure(failed));
        }
        let found: Vec<Relationship> = results.into_iter().flat_map(|r| r.refactorings).collect();
        precision_recall(&found, &oracle, &supported, mode)
    };
    out.push_str(&format_report(&report));
    Ok(())
}

fn ratio(x: Option<f64>) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| format!("{v:.3}"))
}

fn counts_row(name: &str, c: &Counts) -> String {
    format!(
        "{:<20} {:>5} {:>5} {:>5} {:>9} {:>9}\n",
        name,
        c.tp,
        c.fp,
        c.fn_,
        ratio(c.precision()),
        ratio(c.recall())
    )
}

/// Per-type rows for every type with any count, then the overall row.
pub(crate) fn format_report(report: &EvalReport) -> String {
    let mut s = format!(
        "{:<20} {:>5} {:>5} {:>5} {:>9} {:>9}\n",
        "type", "TP", "FP", "FN", "precision", "recall"
    );
    for (kind, c) in &report.per_type {
        if !c.is_zero() {
            s.push_str(&counts_row(kind.name(), c));
        }
    }
    s.push_str(&counts_row("overall", &report.overall));
    s
}

fn cmd_calibrate(args: &CalibrateArgs, out: &mut String, diag: &mut String) -> Result<(), CliError> {
    let start = resolve_config(args.config.as_deref())?;
    let grid = parse_grid(&args.grid)?;
    let loaded = load_corpus(&load_manifest(&args.corpus)?);
    for e in &loaded.failures {
        let _ = writeln!(diag, "warning: skipped pair {e}");
    }
    for p in &loaded.pairs {
        for e in &p.pair.errors {
            let _ = writeln!(diag, "warning: {}: skipped {e}", p.pair.label);
        }
    }
    let options = CalibrationOptions {
        mode: mode(args.lenient_methods),
        allow_uncovered: args.allow_uncovered,
    };
    let calibration = calibrate_all(&loaded.pairs, &grid, &start, options)?;
    std::fs::write(&args.out, calibration.config.to_file_string()).map_err(|source| CliError::Write {
        path: args.out.display().to_string(),
        source,
    })?;

    let _ = writeln!(
        out,
        "{:<20} {:>4} {:>6} {:>5} {:>5} {:>5} {:>9} {:>9}",
        "type", "#", "τ", "TP", "FP", "FN", "precision", "recall"
    );
    for t in &calibration.types {
        match t.chosen {
            Some(i) => {
                let p = &t.sweep[i];
                let _ = writeln!(
                    out,
                    "{:<20} {:>4} {:>6.3} {:>5} {:>5} {:>5} {:>9} {:>9}",
                    t.kind.name(),
                    t.instances,
                    p.tau,
                    p.counts.tp,
                    p.counts.fp,
                    p.counts.fn_,
                    ratio(p.counts.precision()),
                    ratio(p.counts.recall())
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{:<20} {:>4} {:>6.3} {:>5} {:>5} {:>5} {:>9} {:>9}",
                    t.kind.name(),
                    t.instances,
                    calibration.config.get(t.kind),
                    "-",
                    "-",
                    "-",
                    "n/a",
                    "n/a"
                );
            }
        }
    }
    Ok(())
}
