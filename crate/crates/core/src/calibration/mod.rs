//! Evaluation against an oracle and per-type threshold calibration.
//!
//! Thresholds are calibrated one type at a time in detection order. Each
//! type's τ is swept over a grid with every other τ held fixed, and the value
//! with the best F1 (lowest τ on ties) is kept before moving to the next
//! type, so later types are tuned against the already-calibrated earlier ones.

mod corpus;
mod metrics;
mod oracle;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use corpus::{
    load_corpus, load_manifest, parse_manifest, CorpusEntry, CorpusError, CorpusPair, LoadedCorpus,
    PairSource,
};
pub use metrics::{f1, precision_recall, Counts, EvalReport, MatchMode};
pub use oracle::{
    canonical_descriptor, load_oracle, oracle_to_csv, parse_oracle, OracleEntry, OracleError,
};

use crate::engine::RelationshipType;
use crate::thresholds::ThresholdConfig;

#[derive(Debug, Error, PartialEq)]
pub enum CalibrationError {
    #[error("the oracle has no {0} entry; cannot calibrate its threshold")]
    UncoveredType(RelationshipType),
    #[error("invalid grid `{0}`: expected start:stop:step with 0 < start <= stop <= 1 and step > 0")]
    BadGrid(String),
}

/// Parses `start:stop:step`, inclusive of `stop`. Values are rounded to three
/// decimals so accumulated float error never adds or drops a point.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, CalibrationError> {
    let bad = || CalibrationError::BadGrid(text.to_string());
    let parts: Vec<f64> = text
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if !(start > 0.0 && start <= stop && stop <= 1.0 && step > 0.0) {
        return Err(bad());
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=n)
        .map(|i| ((start + i as f64 * step) * 1000.0).round() / 1000.0)
        .collect())
}

/// 0.1 to 0.9 in steps of 0.1.
pub fn default_grid() -> Vec<f64> {
    parse_grid("0.1:0.9:0.1").expect("valid grid")
}

/// Detection over every pair with one configuration, metrics summed over
/// pairs.
pub fn evaluate_corpus(
    corpus: &[CorpusPair],
    config: &ThresholdConfig,
    supported: &BTreeSet<RelationshipType>,
    mode: MatchMode,
) -> EvalReport {
    let reports: Vec<EvalReport> = corpus
        .par_iter()
        .map(|p| precision_recall(&p.pair.refactorings(config), &p.oracle, supported, mode))
        .collect();
    let mut total = EvalReport::default();
    for k in supported {
        total.per_type.insert(*k, Counts::default());
    }
    for r in &reports {
        total.merge(r);
    }
    total
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub tau: f64,
    pub counts: Counts,
}

impl SweepPoint {
    pub fn f1(&self) -> f64 {
        self.counts.f1()
    }
}

/// Metrics of `kind` alone for each grid value, all other thresholds taken
/// from `fixed`.
pub fn sweep_thresholds(
    corpus: &[CorpusPair],
    kind: RelationshipType,
    grid: &[f64],
    fixed: &ThresholdConfig,
    mode: MatchMode,
) -> Vec<SweepPoint> {
    let only: BTreeSet<RelationshipType> = [kind].into_iter().collect();
    grid.iter()
        .map(|&tau| {
            let config = fixed.clone().with(kind, tau);
            let report = evaluate_corpus(corpus, &config, &only, mode);
            SweepPoint {
                tau,
                counts: report.counts(kind),
            }
        })
        .collect()
}

/// Index of the best F1; the earliest (lowest τ on an ascending grid) wins
/// ties.
pub fn best_point(points: &[SweepPoint]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, p) in points.iter().enumerate() {
        match best {
            Some(b) if points[b].f1() >= p.f1() => {}
            _ => best = Some(i),
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TypeCalibration {
    pub kind: RelationshipType,
    /// Oracle entries of this type across the corpus.
    pub instances: usize,
    pub sweep: Vec<SweepPoint>,
    /// Index into `sweep`; `None` when the type was skipped as uncovered.
    pub chosen: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Calibration {
    pub config: ThresholdConfig,
    pub types: Vec<TypeCalibration>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CalibrationOptions {
    pub mode: MatchMode,
    /// Keep the starting τ for types without oracle entries instead of
    /// failing.
    pub allow_uncovered: bool,
}

/// Calibrates every refactoring type in detection order, starting from
/// `start`.
pub fn calibrate_all(
    corpus: &[CorpusPair],
    grid: &[f64],
    start: &ThresholdConfig,
    options: CalibrationOptions,
) -> Result<Calibration, CalibrationError> {
    let mut config = start.clone();
    let mut types = Vec::new();
    for kind in RelationshipType::REFACTORINGS {
        let instances: usize = corpus
            .iter()
            .map(|p| p.oracle.iter().filter(|e| e.kind == kind).count())
            .sum();
        if instances == 0 {
            if !options.allow_uncovered {
                return Err(CalibrationError::UncoveredType(kind));
            }
            types.push(TypeCalibration {
                kind,
                instances,
                sweep: Vec::new(),
                chosen: None,
            });
            continue;
        }
        let sweep = sweep_thresholds(corpus, kind, grid, &config, options.mode);
        let chosen = best_point(&sweep);
        if let Some(i) = chosen {
            config.set(kind, sweep[i].tau);
        }
        types.push(TypeCalibration {
            kind,
            instances,
            sweep,
            chosen,
        });
    }
    Ok(Calibration { config, types })
}
