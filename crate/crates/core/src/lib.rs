//! Refactoring detection between two revisions of a Java source tree.
//!
//! Each revision is reduced to a model of types, methods and fields, every
//! entity carrying a multiset of source tokens. Entities of the two revisions
//! are compared with a TF-IDF weighted Jaccard similarity and linked by typed
//! relationships (same, move, rename, pull up, push down, extract, inline,
//! extract supertype) whenever the similarity exceeds a per-type threshold.
//!
//! ```no_run
//! use std::path::Path;
//! use refdetect::{load_directory_pair, AnalyzedPair, ThresholdConfig};
//!
//! let pair = load_directory_pair(Path::new("v1"), Path::new("v2"))?;
//! let analyzed = AnalyzedPair::new(&pair);
//! for r in analyzed.refactorings(&ThresholdConfig::packaged()) {
//!     println!("{} {} -> {} ({:.3})", r.kind, r.before.descriptor(), r.after.descriptor(), r.similarity);
//! }
//! # Ok::<(), refdetect::RepoError>(())
//! ```

pub mod calibration;
pub mod cli;
pub mod engine;
pub mod pipeline;
pub mod repo_io;
pub mod similarity;
pub mod source_model;
pub mod thresholds;

pub use engine::{detect, Relationship, RelationshipType};
pub use pipeline::AnalyzedPair;
pub use repo_io::{list_commits, load_commit_pair, load_directory_pair, RepoError, RevisionPair};
pub use similarity::{sim, sim_u, SimilarityScore, WeightIndex};
pub use source_model::{parse_source_set, CodeModel, SourceFile, TokenMultiset};
pub use thresholds::ThresholdConfig;
