//! Toolkit for extremal questions about squared cycles: constructions,
//! exact coloring, containment detection, spectral computation, structural
//! audits, and extremal search.

pub mod coloring;
pub mod detector;
pub mod error;
pub mod graph;
pub mod prooflab;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
