//! Relationship analysis between the entities of two revisions.
//!
//! Builds a bipartite graph between the before and after models. Matching
//! relationships are found one type at a time in [`RelationshipType::ALL`]
//! order; each type's candidates are resolved greedily by similarity so an
//! entity ends up in at most one matching relationship. Non-matching
//! relationships (extract/inline) are computed afterwards from the matches.

mod conflicts;
mod kinds;

use std::collections::HashMap;

use serde::Serialize;

pub use conflicts::{resolve_conflicts, resolve_conflicts_with, CandidateTriple};
pub use kinds::{RelationshipType, UnknownRelationshipType};

use crate::similarity::{sim_u_weighted, sim_weighted, WeightIndex, WeightedTokens};
use crate::source_model::{CodeEntity, CodeModel, EntityId, EntityIdx, EntityKind};
use crate::thresholds::ThresholdConfig;

use RelationshipType::*;

/// A typed edge between a before entity and an after entity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Relationship {
    #[serde(rename = "type")]
    pub kind: RelationshipType,
    pub before: EntityId,
    pub after: EntityId,
    pub similarity: f64,
}

impl Relationship {
    pub fn is_refactoring(&self) -> bool {
        self.kind.is_refactoring()
    }
}

/// Builds a weight index over both revisions (`E_b ∪ E_a`). Returns `None`
/// when both models are empty.
pub fn corpus_index(before: &CodeModel, after: &CodeModel) -> Option<WeightIndex> {
    WeightIndex::build(
        before
            .entities()
            .iter()
            .chain(after.entities())
            .map(|e| &e.tokens),
    )
    .ok()
}

/// Full relationship set `R`, including `Same*` relationships, sorted by
/// type order, then before id, then after id.
pub fn detect(before: &CodeModel, after: &CodeModel, config: &ThresholdConfig) -> Vec<Relationship> {
    match corpus_index(before, after) {
        Some(index) => detect_with_index(before, after, &index, config),
        None => Vec::new(),
    }
}

pub fn detect_with_index(
    before: &CodeModel,
    after: &CodeModel,
    index: &WeightIndex,
    config: &ThresholdConfig,
) -> Vec<Relationship> {
    let mut graph = RelationshipGraph::new(before, after, index);
    graph.match_all(config);
    let extra = graph.find_non_matching(config);
    let mut all = graph.into_relationships();
    all.extend(extra);
    sort_relationships(&mut all);
    all
}

/// Only the reported refactorings.
pub fn refactorings(relationships: &[Relationship]) -> Vec<Relationship> {
    relationships
        .iter()
        .filter(|r| r.is_refactoring())
        .cloned()
        .collect()
}

pub fn sort_relationships(rels: &mut [Relationship]) {
    rels.sort_by(|a, b| {
        a.kind
            .cmp(&b.kind)
            .then_with(|| a.before.cmp(&b.before))
            .then_with(|| a.after.cmp(&b.after))
    });
}

/// Mutable state of one detection run.
pub struct RelationshipGraph<'m> {
    before: &'m CodeModel,
    after: &'m CodeModel,
    weights_before: Vec<WeightedTokens>,
    weights_after: Vec<WeightedTokens>,
    forward: HashMap<EntityIdx, EntityIdx>,
    backward: HashMap<EntityIdx, EntityIdx>,
    relationships: Vec<Relationship>,
}

impl<'m> RelationshipGraph<'m> {
    pub fn new(before: &'m CodeModel, after: &'m CodeModel, index: &WeightIndex) -> Self {
        RelationshipGraph {
            before,
            after,
            weights_before: before.entities().iter().map(|e| index.weigh(&e.tokens)).collect(),
            weights_after: after.entities().iter().map(|e| index.weigh(&e.tokens)).collect(),
            forward: HashMap::new(),
            backward: HashMap::new(),
            relationships: Vec::new(),
        }
    }

    pub fn relationships(&self) -> &[Relationship] {
        &self.relationships
    }

    pub fn into_relationships(self) -> Vec<Relationship> {
        self.relationships
    }

    /// The after entity matched to `before`, if any.
    pub fn matched_after(&self, before: &EntityId) -> Option<&EntityId> {
        let b = self.before.index_of(before)?;
        self.forward.get(&b).map(|&a| &self.after.entity(a).id)
    }

    pub fn matched_before(&self, after: &EntityId) -> Option<&EntityId> {
        let a = self.after.index_of(after)?;
        self.backward.get(&a).map(|&b| &self.before.entity(b).id)
    }

    /// Runs every matching type in order. Type-level relationships are
    /// resolved one nesting depth at a time so that members of nested types
    /// see their container's match.
    pub fn match_all(&mut self, config: &ThresholdConfig) {
        let depths: Vec<usize> = (0..self.before.len()).map(|i| type_depth(self.before, i)).collect();
        let max_depth = depths.iter().copied().max().unwrap_or(0);
        let type_kinds = [SameType, MoveType, RenameType, MoveAndRenameType];
        for depth in 0..=max_depth {
            for kind in type_kinds {
                let cands = self.candidates(kind, config.get(kind), |b| depths[b] == depth);
                self.accept(kind, cands);
            }
        }
        for kind in RelationshipType::ALL {
            if kind.is_matching() && kind.entity_kind() != EntityKind::Type {
                let cands = self.candidates(kind, config.get(kind), |_| true);
                self.accept(kind, cands);
            }
        }
    }

    /// Every unmatched pair satisfying `kind`'s conditions with similarity
    /// strictly greater than `tau` (`Same*` kinds ignore `tau`).
    pub fn find_matching_candidates(&self, kind: RelationshipType, tau: f64) -> Vec<CandidateTriple> {
        assert!(kind.is_matching(), "{kind} is not a matching relationship");
        self.candidates(kind, tau, |_| true)
            .into_iter()
            .map(|(b, a, s)| {
                CandidateTriple::new(self.before.entity(b).id.clone(), self.after.entity(a).id.clone(), s)
            })
            .collect()
    }

    /// Resolves conflicts among `candidates` against the current matches and
    /// records the accepted relationships. Returns how many were added.
    pub fn add_matching(&mut self, kind: RelationshipType, candidates: Vec<CandidateTriple>) -> usize {
        let accepted = resolve_conflicts_with(
            kind,
            candidates,
            |b| self.before.index_of(b).is_some_and(|i| self.forward.contains_key(&i)),
            |a| self.after.index_of(a).is_some_and(|i| self.backward.contains_key(&i)),
        );
        let n = accepted.len();
        for rel in accepted {
            let (Some(b), Some(a)) = (self.before.index_of(&rel.before), self.after.index_of(&rel.after))
            else {
                continue;
            };
            self.forward.insert(b, a);
            self.backward.insert(a, b);
            self.relationships.push(rel);
        }
        n
    }

    fn accept(&mut self, kind: RelationshipType, cands: Vec<(EntityIdx, EntityIdx, f64)>) {
        let triples = cands
            .into_iter()
            .map(|(b, a, s)| {
                CandidateTriple::new(self.before.entity(b).id.clone(), self.after.entity(a).id.clone(), s)
            })
            .collect();
        self.add_matching(kind, triples);
    }

    fn candidates(
        &self,
        kind: RelationshipType,
        tau: f64,
        filter: impl Fn(EntityIdx) -> bool,
    ) -> Vec<(EntityIdx, EntityIdx, f64)> {
        let ek = kind.entity_kind();
        let mut out = Vec::new();
        for (bi, b) in self.before.of_kind(ek) {
            if self.forward.contains_key(&bi) || !filter(bi) {
                continue;
            }
            for (ai, a) in self.after.of_kind(ek) {
                if self.backward.contains_key(&ai) || !self.conditions_hold(kind, bi, b, ai, a) {
                    continue;
                }
                if kind.is_same() {
                    out.push((bi, ai, 1.0));
                    continue;
                }
                let score = sim_weighted(&self.weights_before[bi], &self.weights_after[ai]).value();
                if score > tau {
                    out.push((bi, ai, score));
                }
            }
        }
        out
    }

    fn containers_matched(&self, bi: EntityIdx, ai: EntityIdx) -> bool {
        match (self.before.container_of(bi), self.after.container_of(ai)) {
            (Some(cb), Some(ca)) => self.forward.get(&cb) == Some(&ca),
            _ => false,
        }
    }

    /// Same package for top-level types, matched containers for nested ones.
    fn same_location(&self, bi: EntityIdx, b: &CodeEntity, ai: EntityIdx, a: &CodeEntity) -> bool {
        match (&b.container, &a.container) {
            (None, None) => b.package == a.package,
            (Some(_), Some(_)) => self.containers_matched(bi, ai),
            _ => false,
        }
    }

    /// Container of `a` is a supertype of the counterpart of `b`'s container.
    fn moved_up(&self, bi: EntityIdx, ai: EntityIdx) -> bool {
        let (Some(cb), Some(ca)) = (self.before.container_of(bi), self.after.container_of(ai)) else {
            return false;
        };
        self.forward
            .get(&cb)
            .is_some_and(|&cb_after| self.after.is_subtype_of(cb_after, ca))
    }

    /// Container of `a` is a subtype of the counterpart of `b`'s container.
    fn moved_down(&self, bi: EntityIdx, ai: EntityIdx) -> bool {
        let (Some(cb), Some(ca)) = (self.before.container_of(bi), self.after.container_of(ai)) else {
            return false;
        };
        self.forward
            .get(&cb)
            .is_some_and(|&cb_after| self.after.is_subtype_of(ca, cb_after))
    }

    fn conditions_hold(
        &self,
        kind: RelationshipType,
        bi: EntityIdx,
        b: &CodeEntity,
        ai: EntityIdx,
        a: &CodeEntity,
    ) -> bool {
        let same_name = b.name == a.name;
        match kind {
            SameType => b.id.qualified_name == a.id.qualified_name || (same_name && self.same_location(bi, b, ai, a)),
            MoveType => same_name && !self.same_location(bi, b, ai, a),
            RenameType => !same_name && self.same_location(bi, b, ai, a),
            MoveAndRenameType => !same_name && !self.same_location(bi, b, ai, a),
            SameMethod => self.containers_matched(bi, ai) && b.member_key() == a.member_key(),
            SameField => self.containers_matched(bi, ai) && same_name,
            _ => {
                if b.is_constructor || a.is_constructor {
                    return false;
                }
                let same_key = match kind.entity_kind() {
                    EntityKind::Method => b.id.signature == a.id.signature,
                    _ => same_name,
                };
                match kind {
                    PullUpMethod | PullUpField => same_key && self.moved_up(bi, ai),
                    PushDownMethod | PushDownField => same_key && self.moved_down(bi, ai),
                    MoveMethod | MoveField => {
                        same_key
                            && !self.containers_matched(bi, ai)
                            && !self.moved_up(bi, ai)
                            && !self.moved_down(bi, ai)
                    }
                    RenameMethod => !same_name && self.containers_matched(bi, ai),
                    _ => false,
                }
            }
        }
    }

    /// Extract Supertype, Extract Method and Inline Method relationships.
    /// These may share endpoints, so no conflict resolution applies.
    pub fn find_non_matching(&self, config: &ThresholdConfig) -> Vec<Relationship> {
        let mut out = Vec::new();
        self.extract_supertype(config.get(ExtractSupertype), &mut out);
        self.extract_method(config.get(ExtractMethod), &mut out);
        self.inline_method(config.get(InlineMethod), &mut out);
        sort_relationships(&mut out);
        out
    }

    fn push(&self, out: &mut Vec<Relationship>, kind: RelationshipType, b: EntityIdx, a: EntityIdx, s: f64) {
        out.push(Relationship {
            kind,
            before: self.before.entity(b).id.clone(),
            after: self.after.entity(a).id.clone(),
            similarity: s,
        });
    }

    // t2 added, t1 kept, t1's new version extends/implements t2, and t2's
    // body is contained in t1's old body.
    fn extract_supertype(&self, tau: f64, out: &mut Vec<Relationship>) {
        for (t2, super_after) in self.after.of_kind(EntityKind::Type) {
            if self.backward.contains_key(&t2) {
                continue;
            }
            for (t1, _) in self.before.of_kind(EntityKind::Type) {
                let Some(&t1_after) = self.forward.get(&t1) else {
                    continue;
                };
                if !self.after.entity(t1_after).supertypes.contains(&super_after.name) {
                    continue;
                }
                if let Ok(s) = sim_u_weighted(&self.weights_after[t2], &self.weights_before[t1]) {
                    if s.value() > tau {
                        self.push(out, ExtractSupertype, t1, t2, s.value());
                    }
                }
            }
        }
    }

    // m2 added, m1 kept as y, y calls m2, and m2 is contained in old m1.
    fn extract_method(&self, tau: f64, out: &mut Vec<Relationship>) {
        for (m2, extracted) in self.after.of_kind(EntityKind::Method) {
            if self.backward.contains_key(&m2) || extracted.is_constructor || !extracted.has_body {
                continue;
            }
            for (m1, _) in self.before.of_kind(EntityKind::Method) {
                let Some(&y) = self.forward.get(&m1) else {
                    continue;
                };
                if !calls(self.after.entity(y), extracted) {
                    continue;
                }
                if let Ok(s) = sim_u_weighted(&self.weights_after[m2], &self.weights_before[m1]) {
                    if s.value() > tau {
                        self.push(out, ExtractMethod, m1, m2, s.value());
                    }
                }
            }
        }
    }

    // m1 removed, m2 kept from x, x called m1, and m1 is contained in new m2.
    fn inline_method(&self, tau: f64, out: &mut Vec<Relationship>) {
        for (m1, inlined) in self.before.of_kind(EntityKind::Method) {
            if self.forward.contains_key(&m1) || inlined.is_constructor || !inlined.has_body {
                continue;
            }
            for (m2, _) in self.after.of_kind(EntityKind::Method) {
                let Some(&x) = self.backward.get(&m2) else {
                    continue;
                };
                if !calls(self.before.entity(x), inlined) {
                    continue;
                }
                if let Ok(s) = sim_u_weighted(&self.weights_before[m1], &self.weights_after[m2]) {
                    if s.value() > tau {
                        self.push(out, InlineMethod, m1, m2, s.value());
                    }
                }
            }
        }
    }
}

fn calls(caller: &CodeEntity, callee: &CodeEntity) -> bool {
    caller
        .calls
        .iter()
        .any(|c| c.name == callee.name && c.arg_count == callee.params.len())
}

fn type_depth(model: &CodeModel, idx: EntityIdx) -> usize {
    let mut depth = 0;
    let mut cur = model.container_of(idx);
    while let Some(c) = cur {
        depth += 1;
        cur = model.container_of(c);
    }
    depth
}
