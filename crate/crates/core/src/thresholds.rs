//! Per-relationship-type similarity thresholds.
//!
//! File format: one `Type=τ` per line, `#` comments, τ written with three
//! decimals. Types missing from a file keep their packaged default.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::engine::RelationshipType;

const PACKAGED: &str = include_str!("../config/default-thresholds.conf");

/// Threshold used for every type before any calibration.
pub const UNCALIBRATED_TAU: f64 = 0.5;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("cannot read threshold config {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdConfig {
    taus: BTreeMap<RelationshipType, f64>,
}

impl ThresholdConfig {
    /// The same τ for every refactoring type.
    pub fn uniform(tau: f64) -> Self {
        ThresholdConfig {
            taus: RelationshipType::REFACTORINGS
                .into_iter()
                .map(|t| (t, tau))
                .collect(),
        }
    }

    /// The calibrated values shipped with the crate.
    pub fn packaged() -> Self {
        Self::uniform(UNCALIBRATED_TAU)
            .overlay(PACKAGED)
            .expect("packaged threshold file is valid")
    }

    /// τ for a type; `Same*` types have no threshold and report 0.
    pub fn get(&self, kind: RelationshipType) -> f64 {
        self.taus.get(&kind).copied().unwrap_or(0.0)
    }

    pub fn set(&mut self, kind: RelationshipType, tau: f64) {
        assert!(kind.is_refactoring(), "{kind} has no threshold");
        self.taus.insert(kind, tau);
    }

    pub fn with(mut self, kind: RelationshipType, tau: f64) -> Self {
        self.set(kind, tau);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (RelationshipType, f64)> + '_ {
        self.taus.iter().map(|(&k, &v)| (k, v))
    }

    /// Parses a config file on top of the packaged defaults.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        Self::packaged().overlay(text)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    fn overlay(mut self, text: &str) -> Result<Self, ConfigError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |reason: String| ConfigError::Syntax { line: n + 1, reason };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected `Type=value`, got `{line}`")))?;
            let kind: RelationshipType = key.trim().parse().map_err(|e| syntax(format!("{e}")))?;
            if !kind.is_refactoring() {
                return Err(syntax(format!("{kind} does not take a threshold")));
            }
            let tau: f64 = value
                .trim()
                .parse()
                .map_err(|_| syntax(format!("invalid number `{}`", value.trim())))?;
            if !(tau > 0.0 && tau <= 1.0) {
                return Err(syntax(format!("threshold {tau} outside (0, 1]")));
            }
            self.taus.insert(kind, tau);
        }
        Ok(self)
    }

    /// Serializes in detection order with three decimals.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for (kind, tau) in self.iter() {
            let _ = writeln!(out, "{}={:.3}", kind.name(), tau);
        }
        out
    }
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        Self::packaged()
    }
}
