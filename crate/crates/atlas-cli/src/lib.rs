//! Command-line front end, curated group data, case manifests and report
//! generation for base-size verification campaigns.

pub mod cli;
pub mod datagen;
pub mod manifest;
pub mod report;
