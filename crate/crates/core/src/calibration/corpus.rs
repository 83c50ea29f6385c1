//! Oracle corpora described by a TOML manifest:
//!
//! ```toml
//! [[pair]]
//! label = "rename-method-1"
//! before = "rename-method-1/before"
//! after = "rename-method-1/after"
//! oracle = "rename-method-1/oracle.csv"
//!
//! [[pair]]
//! repo = "../some-repo"
//! commit = "4f2a9c1"
//! oracle = "some-repo-4f2a9c1.csv"
//! ```
//!
//! Relative paths are resolved against the manifest's directory.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use super::oracle::{load_oracle, OracleEntry, OracleError};
use crate::pipeline::AnalyzedPair;
use crate::repo_io::{load_commit_pair, load_directory_pair, RepoError, RevisionPair};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus manifest {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid corpus manifest {path}: {reason}")]
    Manifest { path: String, reason: String },
    #[error("{label}: {source}")]
    Oracle {
        label: String,
        #[source]
        source: OracleError,
    },
    #[error("{label}: {source}")]
    Repo {
        label: String,
        #[source]
        source: RepoError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairSource {
    Directories { before: PathBuf, after: PathBuf },
    Commit { repo: PathBuf, commit: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: String,
    pub source: PairSource,
    pub oracle: PathBuf,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestFile {
    #[serde(default)]
    pair: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    label: Option<String>,
    before: Option<PathBuf>,
    after: Option<PathBuf>,
    repo: Option<PathBuf>,
    commit: Option<String>,
    oracle: PathBuf,
}

pub fn parse_manifest(text: &str, base: &Path, path_label: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let bad = |reason: String| CorpusError::Manifest {
        path: path_label.to_string(),
        reason,
    };
    let file: ManifestFile = toml::from_str(text).map_err(|e| bad(e.to_string()))?;
    let mut entries = Vec::with_capacity(file.pair.len());
    for (i, raw) in file.pair.into_iter().enumerate() {
        let source = match (raw.before, raw.after, raw.repo, raw.commit) {
            (Some(b), Some(a), None, None) => PairSource::Directories {
                before: base.join(b),
                after: base.join(a),
            },
            (None, None, Some(repo), Some(commit)) => PairSource::Commit {
                repo: base.join(repo),
                commit,
            },
            _ => {
                return Err(bad(format!(
                    "pair {} needs either `before`+`after` or `repo`+`commit`",
                    i + 1
                )))
            }
        };
        let label = raw.label.unwrap_or_else(|| match &source {
            PairSource::Directories { before, after } => {
                format!("{}..{}", before.display(), after.display())
            }
            PairSource::Commit { commit, .. } => commit.clone(),
        });
        entries.push(CorpusEntry {
            label,
            source,
            oracle: base.join(raw.oracle),
        });
    }
    Ok(entries)
}

pub fn load_manifest(path: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_manifest(&text, base, &path.display().to_string())
}

/// One analyzed revision pair with its expected refactorings.
#[derive(Debug, Clone)]
pub struct CorpusPair {
    pub pair: AnalyzedPair,
    pub oracle: Vec<OracleEntry>,
}

impl CorpusPair {
    pub fn new(pair: &RevisionPair, oracle: Vec<OracleEntry>) -> Self {
        CorpusPair {
            pair: AnalyzedPair::new(pair),
            oracle,
        }
    }
}

/// Pairs that loaded, in manifest order, plus the errors of those that did
/// not. A failing pair never aborts the others.
#[derive(Debug, Default)]
pub struct LoadedCorpus {
    pub pairs: Vec<CorpusPair>,
    pub failures: Vec<CorpusError>,
}

pub fn load_corpus(entries: &[CorpusEntry]) -> LoadedCorpus {
    let results: Vec<Result<CorpusPair, CorpusError>> = entries.par_iter().map(load_entry).collect();
    let mut loaded = LoadedCorpus::default();
    for r in results {
        match r {
            Ok(p) => loaded.pairs.push(p),
            Err(e) => loaded.failures.push(e),
        }
    }
    loaded
}

fn load_entry(e: &CorpusEntry) -> Result<CorpusPair, CorpusError> {
    let oracle = load_oracle(&e.oracle).map_err(|source| CorpusError::Oracle {
        label: e.label.clone(),
        source,
    })?;
    let loaded = match &e.source {
        PairSource::Directories { before, after } => load_directory_pair(before, after),
        PairSource::Commit { repo, commit } => load_commit_pair(repo, commit),
    };
    let mut revision = loaded.map_err(|source| CorpusError::Repo {
        label: e.label.clone(),
        source,
    })?;
    revision.label = e.label.clone();
    Ok(CorpusPair::new(&revision, oracle))
}
