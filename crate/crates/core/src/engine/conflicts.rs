use std::cmp::Ordering;
use std::collections::HashSet;

use serde::Serialize;

use super::{Relationship, RelationshipType};
use crate::source_model::EntityId;

/// A potential matching relationship `(before, after, similarity)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateTriple {
    pub before: EntityId,
    pub after: EntityId,
    pub score: f64,
}

impl CandidateTriple {
    pub fn new(before: EntityId, after: EntityId, score: f64) -> Self {
        CandidateTriple {
            before,
            after,
            score,
        }
    }
}

/// Highest score first; ties by before id, then after id.
pub(crate) fn candidate_order(a: &CandidateTriple, b: &CandidateTriple) -> Ordering {
    b.score
        .total_cmp(&a.score)
        .then_with(|| a.before.cmp(&b.before))
        .then_with(|| a.after.cmp(&b.after))
}

/// Greedily keeps the best-scoring candidates such that no entity is used
/// twice.
pub fn resolve_conflicts(
    kind: RelationshipType,
    candidates: Vec<CandidateTriple>,
) -> Vec<Relationship> {
    resolve_conflicts_with(kind, candidates, |_| false, |_| false)
}

/// Like [`resolve_conflicts`], also skipping endpoints that `taken_before`
/// or `taken_after` report as already matched by an earlier type.
pub fn resolve_conflicts_with(
    kind: RelationshipType,
    mut candidates: Vec<CandidateTriple>,
    taken_before: impl Fn(&EntityId) -> bool,
    taken_after: impl Fn(&EntityId) -> bool,
) -> Vec<Relationship> {
    candidates.sort_by(candidate_order);
    let mut used_before: HashSet<EntityId> = HashSet::new();
    let mut used_after: HashSet<EntityId> = HashSet::new();
    let mut accepted = Vec::new();
    for c in candidates {
        if used_before.contains(&c.before)
            || used_after.contains(&c.after)
            || taken_before(&c.before)
            || taken_after(&c.after)
        {
            continue;
        }
        used_before.insert(c.before.clone());
        used_after.insert(c.after.clone());
        accepted.push(Relationship {
            kind,
            before: c.before,
            after: c.after,
            similarity: c.score,
        });
    }
    accepted
}
