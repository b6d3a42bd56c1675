//! Deterministic construction of the shipped group and table data.

pub mod corpus;
pub mod golay;
pub mod hsgraph;
pub mod leech;
pub mod linear;
pub mod mathieu;
pub mod write;
