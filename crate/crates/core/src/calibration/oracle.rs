//! Oracle files: CSV with header `type,before,after`, one relationship per
//! row. Extra columns are ignored, so detector CSV output is itself a valid
//! oracle.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::engine::{Relationship, RelationshipType};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OracleEntry {
    pub kind: RelationshipType,
    pub before: String,
    pub after: String,
}

impl OracleEntry {
    pub fn new(kind: RelationshipType, before: impl Into<String>, after: impl Into<String>) -> Self {
        OracleEntry {
            kind,
            before: before.into(),
            after: after.into(),
        }
    }
}

impl From<&Relationship> for OracleEntry {
    fn from(r: &Relationship) -> Self {
        OracleEntry::new(r.kind, r.before.descriptor(), r.after.descriptor())
    }
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("malformed oracle, line {line}: {reason}")]
    MalformedOracle { line: u64, reason: String },
    #[error("cannot read oracle {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn malformed(line: u64, reason: impl Into<String>) -> OracleError {
    OracleError::MalformedOracle {
        line,
        reason: reason.into(),
    }
}

pub fn parse_oracle(text: &str) -> Result<Vec<OracleEntry>, OracleError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| malformed(1, e.to_string()))?
        .clone();
    let names: Vec<String> = headers.iter().take(3).map(str::to_lowercase).collect();
    if names != ["type", "before", "after"] {
        return Err(malformed(1, "header must start with `type,before,after`"));
    }
    let mut entries = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            malformed(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() < 3 {
            return Err(malformed(line, format!("expected 3 fields, found {}", record.len())));
        }
        let kind: RelationshipType = record[0]
            .parse()
            .map_err(|e| malformed(line, format!("{e}")))?;
        if !kind.is_refactoring() {
            return Err(malformed(line, format!("{kind} is not a refactoring type")));
        }
        if record[1].is_empty() || record[2].is_empty() {
            return Err(malformed(line, "empty descriptor"));
        }
        entries.push(OracleEntry::new(kind, &record[1], &record[2]));
    }
    Ok(entries)
}

pub fn load_oracle(path: &Path) -> Result<Vec<OracleEntry>, OracleError> {
    let text = std::fs::read_to_string(path).map_err(|source| OracleError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_oracle(&text)
}

pub fn oracle_to_csv(entries: &[OracleEntry]) -> String {
    let mut out = String::from("type,before,after\n");
    for e in entries {
        let _ = writeln!(out, "{},{},{}", e.kind, quote(&e.before), quote(&e.after));
    }
    out
}

fn quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Canonical form used for comparison: whitespace removed, parameter types
/// reduced to simple names without generic arguments, varargs written as
/// `[]`. With `lenient_methods`, the parameter list is dropped entirely.
pub fn canonical_descriptor(descriptor: &str, lenient_methods: bool) -> String {
    let compact: String = descriptor.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(open) = compact.find('(') else {
        return compact;
    };
    let head = &compact[..open];
    if lenient_methods {
        return head.to_string();
    }
    let inner = compact[open + 1..].trim_end_matches(')');
    let params: Vec<String> = split_params(inner)
        .into_iter()
        .filter(|p| !p.is_empty())
        .map(|p| canonical_param(&p))
        .collect();
    format!("{head}({})", params.join(","))
}

fn split_params(inner: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '<' => depth += 1,
            '>' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut().unwrap().push(c);
    }
    out
}

fn canonical_param(param: &str) -> String {
    let mut base = String::new();
    let mut depth = 0i32;
    for c in param.chars() {
        match c {
            '<' => depth += 1,
            '>' => depth -= 1,
            _ if depth == 0 => base.push(c),
            _ => {}
        }
    }
    let varargs = base.ends_with("...");
    let base = base.trim_end_matches("...");
    let mut simple = base.rsplit('.').next().unwrap_or(base).to_string();
    if varargs {
        simple.push_str("[]");
    }
    simple
}
