//! Locally complete 2-edge-colourings: recognition through the auxiliary
//! graph, kaleidoscope certificates for non-colourable graphs, and the
//! structural theory of proper interval and proper circular-arc graphs.

pub mod aux;
pub mod cycles;
pub mod graph;
pub mod kaleidoscope;
pub mod oracle;
pub mod orderings;
pub mod patterns;
pub mod structure;

pub use aux::{
    build_aux, count_colourings, is_locally_complete, recognize, verify_locally_complete, AuxGraph, EdgeColouring,
    RecognitionResult,
};
pub use graph::{complement, parse_graph, twin_reduce, Graph, GraphError};
pub use kaleidoscope::{extract_kaleidoscope, verify_kaleidoscope, Kaleidoscope};
pub use orderings::{find_round, find_straight, RoundOrdering, StraightOrdering};
pub use structure::{structural_recognize, Decision, StructuralReport, StructureError};
