use std::collections::{BTreeMap, BTreeSet};
use std::ops::AddAssign;

use serde::Serialize;

use super::oracle::{canonical_descriptor, OracleEntry};
use crate::engine::{Relationship, RelationshipType};

/// How descriptors are compared against the oracle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MatchMode {
    #[default]
    Strict,
    /// Method descriptors compare without their parameter lists.
    LenientMethods,
}

impl MatchMode {
    fn lenient(self) -> bool {
        self == MatchMode::LenientMethods
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
}

impl Counts {
    /// `None` when nothing was reported.
    pub fn precision(&self) -> Option<f64> {
        let d = self.tp + self.fp;
        (d > 0).then(|| self.tp as f64 / d as f64)
    }

    /// `None` when the oracle is empty.
    pub fn recall(&self) -> Option<f64> {
        let d = self.tp + self.fn_;
        (d > 0).then(|| self.tp as f64 / d as f64)
    }

    /// Harmonic mean of precision and recall, undefined parts counted as 0.
    pub fn f1(&self) -> f64 {
        f1(self.precision().unwrap_or(0.0), self.recall().unwrap_or(0.0))
    }

    pub fn is_zero(&self) -> bool {
        self.tp + self.fp + self.fn_ == 0
    }
}

impl AddAssign for Counts {
    fn add_assign(&mut self, o: Counts) {
        self.tp += o.tp;
        self.fp += o.fp;
        self.fn_ += o.fn_;
    }
}

pub fn f1(precision: f64, recall: f64) -> f64 {
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct EvalReport {
    pub per_type: BTreeMap<RelationshipType, Counts>,
    pub overall: Counts,
}

impl EvalReport {
    pub fn counts(&self, kind: RelationshipType) -> Counts {
        self.per_type.get(&kind).copied().unwrap_or_default()
    }

    pub fn merge(&mut self, other: &EvalReport) {
        for (k, c) in &other.per_type {
            *self.per_type.entry(*k).or_default() += *c;
        }
        self.overall += other.overall;
    }
}

type Key = (RelationshipType, String, String);

/// Compares reported refactorings against an oracle. Only relationships whose
/// type is in `supported` take part, on both sides.
pub fn precision_recall(
    found: &[Relationship],
    oracle: &[OracleEntry],
    supported: &BTreeSet<RelationshipType>,
    mode: MatchMode,
) -> EvalReport {
    let lenient = mode.lenient();
    let key = |kind, before: &str, after: &str| -> Key {
        (
            kind,
            canonical_descriptor(before, lenient),
            canonical_descriptor(after, lenient),
        )
    };
    let found: BTreeSet<Key> = found
        .iter()
        .filter(|r| r.is_refactoring() && supported.contains(&r.kind))
        .map(|r| key(r.kind, &r.before.descriptor(), &r.after.descriptor()))
        .collect();
    let expected: BTreeSet<Key> = oracle
        .iter()
        .filter(|e| supported.contains(&e.kind))
        .map(|e| key(e.kind, &e.before, &e.after))
        .collect();

    let mut report = EvalReport::default();
    for k in supported {
        report.per_type.insert(*k, Counts::default());
    }
    for k in &found {
        let c = report.per_type.entry(k.0).or_default();
        if expected.contains(k) {
            c.tp += 1;
        } else {
            c.fp += 1;
        }
    }
    for k in expected.difference(&found) {
        report.per_type.entry(k.0).or_default().fn_ += 1;
    }
    for c in report.per_type.values() {
        report.overall += *c;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source_model::EntityId;
    use RelationshipType::*;

    fn rel(kind: RelationshipType, b: EntityId, a: EntityId) -> Relationship {
        Relationship {
            kind,
            before: b,
            after: a,
            similarity: 0.9,
        }
    }

    fn all() -> BTreeSet<RelationshipType> {
        RelationshipType::REFACTORINGS.into_iter().collect()
    }

    #[test]
    fn f1_of_reference_point() {
        assert!((f1(0.857, 0.941) - 0.897).abs() < 0.001);
        assert_eq!(f1(0.0, 0.0), 0.0);
        assert_eq!(f1(1.0, 1.0), 1.0);
    }

    #[test]
    fn counts_tp_fp_fn() {
        let found = vec![
            rel(
                RenameMethod,
                EntityId::method("a.B", "f", &["List<String>".into()]),
                EntityId::method("a.B", "g", &["List<String>".into()]),
            ),
            rel(MoveType, EntityId::type_id("a.X"), EntityId::type_id("b.X")),
            rel(SameType, EntityId::type_id("a.B"), EntityId::type_id("a.B")),
        ];
        let oracle = vec![
            OracleEntry::new(RenameMethod, "a.B#f(java.util.List<String>)", "a.B#g(List)"),
            OracleEntry::new(ExtractMethod, "a.B#h()", "a.B#k()"),
        ];
        let r = precision_recall(&found, &oracle, &all(), MatchMode::Strict);
        assert_eq!(r.overall, Counts { tp: 1, fp: 1, fn_: 1 });
        assert_eq!(r.counts(MoveType).fp, 1);
        assert_eq!(r.counts(ExtractMethod).fn_, 1);
        assert_eq!(r.overall.precision(), Some(0.5));
    }

    #[test]
    fn lenient_ignores_parameters() {
        let found = vec![rel(
            MoveMethod,
            EntityId::method("a.B", "f", &["int".into()]),
            EntityId::method("a.C", "f", &["int".into()]),
        )];
        let oracle = vec![OracleEntry::new(MoveMethod, "a.B#f(long)", "a.C#f(long)")];
        let strict = precision_recall(&found, &oracle, &all(), MatchMode::Strict);
        assert_eq!(strict.overall.tp, 0);
        let lenient = precision_recall(&found, &oracle, &all(), MatchMode::LenientMethods);
        assert_eq!(lenient.overall.tp, 1);
    }

    #[test]
    fn unsupported_types_are_ignored() {
        let found = vec![rel(MoveType, EntityId::type_id("a.X"), EntityId::type_id("b.X"))];
        let oracle = vec![OracleEntry::new(RenameType, "a.Y", "a.Z")];
        let only: BTreeSet<_> = [ExtractMethod].into_iter().collect();
        let r = precision_recall(&found, &oracle, &only, MatchMode::Strict);
        assert!(r.overall.is_zero());
        assert_eq!(r.overall.precision(), None);
        assert_eq!(r.overall.recall(), None);
    }
}
