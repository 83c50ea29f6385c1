use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::source_model::EntityKind;

/// Relationship types, declared in detection order: type-level matching,
/// method matching, field matching, then the non-matching types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationshipType {
    SameType,
    MoveType,
    RenameType,
    MoveAndRenameType,
    SameMethod,
    PullUpMethod,
    PushDownMethod,
    MoveMethod,
    RenameMethod,
    SameField,
    PullUpField,
    PushDownField,
    MoveField,
    ExtractSupertype,
    ExtractMethod,
    InlineMethod,
}

use RelationshipType::*;

impl RelationshipType {
    /// Every type in detection order.
    pub const ALL: [RelationshipType; 16] = [
        SameType,
        MoveType,
        RenameType,
        MoveAndRenameType,
        SameMethod,
        PullUpMethod,
        PushDownMethod,
        MoveMethod,
        RenameMethod,
        SameField,
        PullUpField,
        PushDownField,
        MoveField,
        ExtractSupertype,
        ExtractMethod,
        InlineMethod,
    ];

    /// The refactoring types (everything except `Same*`), in detection and
    /// calibration order.
    pub const REFACTORINGS: [RelationshipType; 13] = [
        MoveType,
        RenameType,
        MoveAndRenameType,
        PullUpMethod,
        PushDownMethod,
        MoveMethod,
        RenameMethod,
        PullUpField,
        PushDownField,
        MoveField,
        ExtractSupertype,
        ExtractMethod,
        InlineMethod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SameType => "SameType",
            MoveType => "MoveType",
            RenameType => "RenameType",
            MoveAndRenameType => "MoveAndRenameType",
            SameMethod => "SameMethod",
            PullUpMethod => "PullUpMethod",
            PushDownMethod => "PushDownMethod",
            MoveMethod => "MoveMethod",
            RenameMethod => "RenameMethod",
            SameField => "SameField",
            PullUpField => "PullUpField",
            PushDownField => "PushDownField",
            MoveField => "MoveField",
            ExtractSupertype => "ExtractSupertype",
            ExtractMethod => "ExtractMethod",
            InlineMethod => "InlineMethod",
        }
    }

    /// Matching relationships pair an entity with its counterpart; each
    /// entity takes part in at most one of them.
    pub fn is_matching(self) -> bool {
        !matches!(self, ExtractSupertype | ExtractMethod | InlineMethod)
    }

    pub fn is_same(self) -> bool {
        matches!(self, SameType | SameMethod | SameField)
    }

    /// Reported as a refactoring and gated by a threshold.
    pub fn is_refactoring(self) -> bool {
        !self.is_same()
    }

    /// Kind of entity on both ends.
    pub fn entity_kind(self) -> EntityKind {
        match self {
            SameType | MoveType | RenameType | MoveAndRenameType | ExtractSupertype => {
                EntityKind::Type
            }
            SameMethod | PullUpMethod | PushDownMethod | MoveMethod | RenameMethod
            | ExtractMethod | InlineMethod => EntityKind::Method,
            SameField | PullUpField | PushDownField | MoveField => EntityKind::Field,
        }
    }
}

impl fmt::Display for RelationshipType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown relationship type `{0}`")]
pub struct UnknownRelationshipType(pub String);

impl FromStr for RelationshipType {
    type Err = UnknownRelationshipType;

    /// Accepts the canonical name, case-insensitively, with optional
    /// spaces, underscores or dashes (`Move Method`, `MOVE_METHOD`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, ' ' | '_' | '-'))
            .flat_map(char::to_lowercase)
            .collect();
        RelationshipType::ALL
            .into_iter()
            .find(|t| t.name().to_lowercase() == key)
            .ok_or_else(|| UnknownRelationshipType(s.trim().to_string()))
    }
}

impl Serialize for RelationshipType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}
