//! Havel-Hakimi residues and the strong Havel-Hakimi graph class.
//!
//! * [`degseq`]: the Havel-Hakimi reduction, residues, Erdős–Gallai.
//! * [`graph`], [`catalog`], [`canon`]: small immutable graphs, named
//!   graphs, canonical forms and isomorphism.
//! * [`recognition`]: the Havel-Hakimi vertex property, two recognizers
//!   for the strong class, the matrogenic configuration and threshold tests.
//! * [`independence`]: exact independence numbers and the Maxine heuristic.
//! * [`verify`]: exhaustive theorem checks over all small graphs.
//! * [`graph6`], [`analysis`]: interchange format and per-graph reports.
//!
//! The `parallel` feature (on by default) spreads sweeps over rayon's
//! thread pool; without it everything runs on the calling thread.

pub mod analysis;
pub mod canon;
pub mod catalog;
pub mod degseq;
pub mod graph;
pub mod graph6;
pub mod independence;
mod par;
pub mod recognition;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use catalog::{CatalogId, FORBIDDEN_S};
pub use degseq::{hh_reduce, hh_step, residue, DegreeSequence, ReductionTrace};
pub use graph::{Graph, GraphError};
pub use graph6::{emit_graph6, parse_graph6};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
