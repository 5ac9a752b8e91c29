//! Structural theory for proper interval and proper circular-arc graphs:
//! canonical clique covers, type classification, explicit colourings and
//! the decision procedures built on them.

pub mod cases;
pub mod cover;
pub mod decide;
pub mod recognize;
pub mod types;

use thiserror::Error;

use crate::aux::EdgeColouring;
use crate::graph::GraphError;
use crate::orderings::OrderingError;

pub use cover::{canonical_cover, check_canonical, chromatic_number, clique_cover_number, overlapping_boundary, CanonicalCliqueCover};
pub use decide::{
    cc2_colouring, complement_bipartition, is_perfect, pca_decide, pig_decide, pseudo_cutvertices,
    universal_vertices, Piece, WeakBlock, WeakBlockDecomposition,
};
pub use recognize::{structural_recognize, ROUND_SEARCH_LIMIT, ComponentReport, StructuralReport};
pub use types::{classify_type, type1_pair_colourings, type_colouring, typed_paths, NotTypedReason, Parity, PigClass, TypedPath};

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("instance with {n} vertices exceeds the limit of {limit}")]
    ScaleExceeded { n: usize, limit: usize },
    /// A structural construction contradicted its own guarantee.
    #[error("internal theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Colourable(EdgeColouring),
    NotColourable(String),
}

impl Decision {
    pub fn is_colourable(&self) -> bool {
        matches!(self, Decision::Colourable(_))
    }
}
