//! Reports, scans and verification sweeps over the family
//! `conj(xy)(x^p + y^q) + z^r`, with JSON, CSV and Graphviz output.
//!
//! The mathematics lives in [`realsing_core`]; this crate formats it.

pub mod census;
pub mod dot;
pub mod grid;
pub mod record;
pub mod report;
pub mod scan;
pub mod verify;

pub use grid::{Grid, Span};
pub use record::AnalysisRecord;
