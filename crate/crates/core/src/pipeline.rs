use crate::engine::{self, Relationship};
use crate::repo_io::RevisionPair;
use crate::similarity::WeightIndex;
use crate::source_model::{parse_source_set, CodeModel, ParseError};
use crate::thresholds::ThresholdConfig;

/// Both models of a revision pair plus their shared weight index. Parsing
/// and weighting do not depend on thresholds, so one analysis serves any
/// number of detection runs.
#[derive(Debug, Clone)]
pub struct AnalyzedPair {
    pub label: String,
    pub before: CodeModel,
    pub after: CodeModel,
    pub index: Option<WeightIndex>,
    pub errors: Vec<ParseError>,
}

impl AnalyzedPair {
    pub fn new(pair: &RevisionPair) -> Self {
        let before = parse_source_set(&pair.before_files, &format!("{}^", pair.label));
        let after = parse_source_set(&pair.after_files, &pair.label);
        let index = engine::corpus_index(&before.model, &after.model);
        let mut errors = before.errors;
        errors.extend(after.errors);
        AnalyzedPair {
            label: pair.label.clone(),
            before: before.model,
            after: after.model,
            index,
            errors,
        }
    }

    /// All relationships, `Same*` included.
    pub fn relationships(&self, config: &ThresholdConfig) -> Vec<Relationship> {
        match &self.index {
            Some(index) => engine::detect_with_index(&self.before, &self.after, index, config),
            None => Vec::new(),
        }
    }

    /// Reported refactorings only.
    pub fn refactorings(&self, config: &ThresholdConfig) -> Vec<Relationship> {
        engine::refactorings(&self.relationships(config))
    }
}
