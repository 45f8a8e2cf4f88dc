//! Eccentricity matrices of graphs, their spectra, and closed-form spectra
//! of join-type graph operations.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod metrics;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::Graph;
