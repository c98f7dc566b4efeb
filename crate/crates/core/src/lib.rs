//! Rainbow-free edge colourings of complete graphs with a prescribed number
//! of edges in each colour.
//!
//! The crate is organised around five pieces:
//!
//! * [`graph`], [`sequence`] and [`colouring`] hold the shared domain types:
//!   the forbidden graph `H`, colour distribution sequences and dense
//!   colourings of `K_n`.
//! * [`verifier`] searches colourings for rainbow triangles, cycles, trees
//!   and arbitrary rainbow subgraphs, recovers Gallai partitions and replays
//!   construction certificates.
//! * [`constructor`] builds colourings for a given sequence out of standard
//!   colouring steps (which never produce a rainbow cycle) or by peeling
//!   vertices whose edges see at most two colours (which defeats every
//!   target of minimum degree three).
//! * [`bounds`] produces self-checking arithmetic certificates showing that
//!   some sequences cannot be realized at all.
//! * [`oracle`] decides realizability by brute force for tiny `n` and is
//!   the ground truth the rest of the crate is tested against.

pub mod bounds;
pub mod colouring;
pub mod constructor;
mod dsu;
pub mod error;
mod format;
pub mod graph;
pub mod oracle;
pub mod sequence;
pub mod verifier;

pub use colouring::Colouring;
pub use error::FormatError;
pub use graph::TargetGraph;
pub use sequence::{pairs, DistributionSequence, SequenceProfile};
