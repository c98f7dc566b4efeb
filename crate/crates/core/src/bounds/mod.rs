//! Certificates that some sequences cannot be realized without a rainbow
//! copy of a given graph.
//!
//! Each check evaluates one inequality in exact integer or rational
//! arithmetic. Logarithms are enclosed in rational intervals and the
//! unfavourable end is used, so a certificate never depends on floating
//! point rounding. Certificates store their parameters and re-derive the
//! inequality on [`InfeasibilityCertificate::reverify`].

mod certificate;
mod clash;
mod log;
mod peel;
mod tree;
mod triangle;

pub use certificate::{CertificateKind, CertifiedSequence, InfeasibilityCertificate, ReverifyError};
pub use clash::{clash_bound_check, clash_margin, general_lower_sequence, sample_rainbow_km};
pub use log::{ln_bounds, LnBounds};
pub use peel::{peel_splitting_process, PeelError, PeelRecord, PeelTrace, TraceViolation};
pub use tree::{tree_forced_check, tree_forced_check_balanced, tree_margin, tree_threshold};
pub use triangle::{
    first_certified_k, triangle_hard_sequence, triangle_infeasibility_check, triangle_margin, TriangleHardSequence,
};

/// A parameter left the range where a bound is defined.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("{quantity}: {detail}")]
pub struct RangeError {
    /// The failing quantity, e.g. `a`.
    pub quantity: &'static str,
    pub detail: String,
}

impl RangeError {
    pub(crate) fn new(quantity: &'static str, detail: String) -> Self {
        Self { quantity, detail }
    }
}
