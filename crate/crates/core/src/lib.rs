//! Matching covered graph theory on small multigraphs: perfect matching
//! catalogs, tight cut decomposition, brick numbers, and the classification
//! of brick edges into removable doubletons, b-invariant and
//! quasi-b-invariant edges.
//!
//! Everything is exact and exhaustive, sized for graphs of a few dozen
//! vertices at most.

pub mod edgeclass;
pub mod error;
pub mod families;
pub mod graph;
pub mod matching;
pub mod tightcut;

pub use edgeclass::{
    ChainDecomposition, ChainPiece, Doubleton, EdgeClassification, EdgeLabel, EquivalenceClasses,
    SharedVertexViolation,
};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{invariant_key, is_isomorphic, Bipartition, EdgeRef, MultiGraph, Shore};
pub use matching::{DmWitness, PmCatalog};
pub use tightcut::{CutPolicy, CutTree, Decomposition, Piece, PieceKind};
