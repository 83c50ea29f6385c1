use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::multiset::TokenMultiset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EntityKind {
    Type,
    Method,
    Field,
}

/// Identity of a code entity within one revision.
///
/// `qualified_name` is the dot-separated container path (`pkg.Outer.Inner`
/// for types, `pkg.Type.name` for members). `signature` is `name(P1,P2)` for
/// methods and the simple name otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EntityId {
    pub kind: EntityKind,
    pub qualified_name: String,
    pub signature: String,
}

impl EntityId {
    pub fn type_id(qualified_name: impl Into<String>) -> Self {
        let qualified_name = qualified_name.into();
        let signature = last_segment(&qualified_name).to_string();
        EntityId {
            kind: EntityKind::Type,
            qualified_name,
            signature,
        }
    }

    pub fn method(container: &str, name: &str, params: &[String]) -> Self {
        EntityId {
            kind: EntityKind::Method,
            qualified_name: join(container, name),
            signature: format!("{}({})", name, params.join(",")),
        }
    }

    pub fn field(container: &str, name: &str) -> Self {
        EntityId {
            kind: EntityKind::Field,
            qualified_name: join(container, name),
            signature: name.to_string(),
        }
    }

    /// Last segment of the qualified name.
    pub fn simple_name(&self) -> &str {
        last_segment(&self.qualified_name)
    }

    /// Qualified name of the enclosing scope: the package for top-level
    /// types, the type for members and nested types.
    pub fn parent_name(&self) -> &str {
        self.qualified_name
            .rsplit_once('.')
            .map(|(p, _)| p)
            .unwrap_or("")
    }

    /// Canonical descriptor: `pkg.Type`, `pkg.Type#field`, `pkg.Type#m(P1,P2)`.
    pub fn descriptor(&self) -> String {
        match self.kind {
            EntityKind::Type => self.qualified_name.clone(),
            EntityKind::Method | EntityKind::Field => {
                format!("{}#{}", self.parent_name(), self.signature)
            }
        }
    }
}

impl fmt::Display for EntityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.descriptor())
    }
}

fn join(container: &str, name: &str) -> String {
    if container.is_empty() {
        name.to_string()
    } else {
        format!("{container}.{name}")
    }
}

fn last_segment(qualified: &str) -> &str {
    qualified.rsplit('.').next().unwrap_or(qualified)
}

/// A syntactic call site: callee simple name plus argument count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CallDescriptor {
    pub name: String,
    pub arg_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TypeFlavor {
    Class,
    Interface,
}

/// How an identifier inside a statement may refer to a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum FieldRef {
    /// `f`, not shadowed by a parameter or local.
    Bare(String),
    /// `this.f`
    This(String),
    /// `expr.f` with an unresolved receiver.
    Qualified(String),
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Statement {
    pub tokens: TokenMultiset,
    pub refs: Vec<FieldRef>,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct MethodBody {
    pub statements: Vec<Statement>,
}

/// A type, method or field declared in one revision.
#[derive(Debug, Clone, Serialize)]
pub struct CodeEntity {
    pub id: EntityId,
    /// Enclosing type, absent for top-level types.
    pub container: Option<EntityId>,
    pub tokens: TokenMultiset,
    pub calls: BTreeSet<CallDescriptor>,
    pub field_accesses: BTreeSet<String>,
    /// Simple names from `extends`/`implements` (types only).
    pub supertypes: BTreeSet<String>,
    pub source_file: String,
    pub package: String,
    /// Simple name.
    pub name: String,
    /// Parameter type simple names (methods only).
    pub params: Vec<String>,
    pub is_constructor: bool,
    /// `false` for abstract and interface methods.
    pub has_body: bool,
    pub flavor: Option<TypeFlavor>,
    pub line: u32,
    #[serde(skip)]
    pub(crate) body: Option<MethodBody>,
}

impl CodeEntity {
    pub fn kind(&self) -> EntityKind {
        self.id.kind
    }

    /// Key under which members of matched containers are considered the
    /// same entity. Constructors ignore the (class-dependent) name.
    pub fn member_key(&self) -> String {
        if self.is_constructor {
            format!("<init>({})", self.params.join(","))
        } else {
            self.id.signature.clone()
        }
    }
}

/// Index of an entity inside its [`CodeModel`].
pub type EntityIdx = usize;

/// All entities parsed from one revision.
#[derive(Debug, Clone, Default)]
pub struct CodeModel {
    pub revision_label: String,
    entities: Vec<CodeEntity>,
    by_id: HashMap<EntityId, EntityIdx>,
    types_by_name: BTreeMap<String, Vec<EntityIdx>>,
    members: Vec<Vec<EntityIdx>>,
}

impl CodeModel {
    /// Builds a model; entities are ordered by id. Later duplicates of an id
    /// are returned instead of inserted.
    pub(crate) fn new(revision_label: &str, entities: Vec<CodeEntity>) -> (Self, Vec<CodeEntity>) {
        let mut sorted = entities;
        sorted.sort_by(|a, b| a.id.cmp(&b.id));
        let mut kept: Vec<CodeEntity> = Vec::with_capacity(sorted.len());
        let mut dups = Vec::new();
        for e in sorted {
            if kept.last().is_some_and(|k| k.id == e.id) {
                dups.push(e);
            } else {
                kept.push(e);
            }
        }
        let by_id: HashMap<_, _> = kept
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();
        let mut types_by_name: BTreeMap<String, Vec<EntityIdx>> = BTreeMap::new();
        let mut members = vec![Vec::new(); kept.len()];
        for (i, e) in kept.iter().enumerate() {
            if e.kind() == EntityKind::Type {
                types_by_name.entry(e.name.clone()).or_default().push(i);
            }
            if let Some(c) = e.container.as_ref().and_then(|c| by_id.get(c)) {
                members[*c].push(i);
            }
        }
        let model = CodeModel {
            revision_label: revision_label.to_string(),
            entities: kept,
            by_id,
            types_by_name,
            members,
        };
        (model, dups)
    }

    pub fn empty(revision_label: &str) -> Self {
        Self::new(revision_label, Vec::new()).0
    }

    pub fn entities(&self) -> &[CodeEntity] {
        &self.entities
    }

    pub(crate) fn entities_mut(&mut self) -> &mut [CodeEntity] {
        &mut self.entities
    }

    pub fn len(&self) -> usize {
        self.entities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entities.is_empty()
    }

    pub fn entity(&self, idx: EntityIdx) -> &CodeEntity {
        &self.entities[idx]
    }

    pub fn index_of(&self, id: &EntityId) -> Option<EntityIdx> {
        self.by_id.get(id).copied()
    }

    pub fn get(&self, id: &EntityId) -> Option<&CodeEntity> {
        self.index_of(id).map(|i| &self.entities[i])
    }

    pub fn of_kind(&self, kind: EntityKind) -> impl Iterator<Item = (EntityIdx, &CodeEntity)> + '_ {
        self.entities
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.kind() == kind)
    }

    pub fn types(&self) -> impl Iterator<Item = &CodeEntity> + '_ {
        self.of_kind(EntityKind::Type).map(|(_, e)| e)
    }

    pub fn methods(&self) -> impl Iterator<Item = &CodeEntity> + '_ {
        self.of_kind(EntityKind::Method).map(|(_, e)| e)
    }

    pub fn fields(&self) -> impl Iterator<Item = &CodeEntity> + '_ {
        self.of_kind(EntityKind::Field).map(|(_, e)| e)
    }

    /// Direct members (methods, fields, nested types) of a type.
    pub fn members_of(&self, type_idx: EntityIdx) -> &[EntityIdx] {
        &self.members[type_idx]
    }

    pub fn container_of(&self, idx: EntityIdx) -> Option<EntityIdx> {
        self.entities[idx]
            .container
            .as_ref()
            .and_then(|c| self.index_of(c))
    }

    /// Types with the given simple name.
    pub fn types_named(&self, simple_name: &str) -> &[EntityIdx] {
        self.types_by_name
            .get(simple_name)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Simple names of all supertypes of `type_idx`, following declared
    /// supertypes transitively through types present in this model.
    pub fn supertype_closure(&self, type_idx: EntityIdx) -> BTreeSet<String> {
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<EntityIdx> = VecDeque::from([type_idx]);
        let mut visited = BTreeSet::from([type_idx]);
        while let Some(t) = queue.pop_front() {
            for name in &self.entities[t].supertypes {
                if seen.insert(name.clone()) {
                    for &s in self.types_named(name) {
                        if visited.insert(s) {
                            queue.push_back(s);
                        }
                    }
                }
            }
        }
        seen
    }

    /// `true` if `sub` declares (transitively) a supertype named like `sup`.
    pub fn is_subtype_of(&self, sub: EntityIdx, sup: EntityIdx) -> bool {
        sub != sup && self.supertype_closure(sub).contains(&self.entities[sup].name)
    }
}
