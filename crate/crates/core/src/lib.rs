//! Learning spaces with planar structure.
//!
//! Validates set families against the learning-space axioms, recognizes the
//! st-planar ones, draws them on an integer grid with upright-quadrilateral
//! faces, and converts between drawings and quadrant arrangements.

pub mod arrangement;
pub mod cli;
pub mod drawing;
pub mod error;
pub mod family;
pub mod io;
pub mod recognize;

pub use arrangement::{
    count_regions, region_family, region_graph, Permutation, QuadrantArrangement,
};
pub use drawing::{
    assign_coordinates, compact, drawing_to_arrangement, validate_upright_quad, GridDrawing,
};
pub use error::{Error, Result};
pub use family::{build_graph, validate_family, LearningGraph, SetFamily, StateSet, Universe};
pub use recognize::{recognize, BoundaryOrders};
