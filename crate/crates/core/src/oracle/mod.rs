//! Brute-force ground truth, seeded generators and the cross-checking
//! harness.

pub mod brute;
pub mod corpus;
pub mod generate;
pub mod harness;
pub mod templates;

use thiserror::Error;

use crate::graph::GraphError;

pub use brute::{brute_force_colourings, brute_force_round, brute_force_straight, BruteForce};
pub use generate::{generate, named, GeneratorSpec, Generated, Witness};
pub use harness::{check_graph, equivalence_harness, HarnessReport, InstanceVerdict};
pub use templates::{pca_blocks, type_template, TypeTemplate};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{size} {what} exceeds the brute-force limit of {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
