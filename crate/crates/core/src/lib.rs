//! Complete minors with small prevertices in graphs that have no stable set
//! of size three.

pub mod generators;
pub mod graph;
pub mod labeling;
pub mod matching;
pub mod strategies;
pub mod structure;
pub mod witness;
