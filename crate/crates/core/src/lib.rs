//! Construction and machine verification of a planar graph with no cycles of
//! length four or five that admits no proper 3-coloring.
//!
//! The pipeline: reconstruct a 15-vertex terminal gadget by template search
//! ([`search`]), paste three copies into a second gadget and four copies of
//! that into the final graph ([`gadget`]), then check every claimed property
//! with certified procedures ([`structure`], [`coloring`]) and report the
//! results ([`report`], [`verify`]).

pub mod canon;
pub mod coloring;
pub mod formats;
pub mod gadget;
pub mod graph;
pub mod report;
pub mod search;
pub mod structure;
pub mod verify;

pub use canon::{canonical_form, canonical_form_colored, CanonicalForm};
pub use graph::{Graph, GraphError, Vertex};
