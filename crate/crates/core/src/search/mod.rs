//! Extremal search: exact isomorph-free enumeration for tiny orders,
//! hill-climbing for moderate orders, and theorem consistency reports.

pub mod canon;
pub mod consistency;
pub mod enumerate;
pub mod hillclimb;

pub use canon::{canonical_copy, canonical_form, CanonicalForm, SmallGraph};
pub use consistency::{theorem_consistency, ConsistencyRow, Freeness, VsGn};
pub use enumerate::{exhaustive_extremal, Objective, SearchReport};
pub use hillclimb::hillclimb_extremal;
