//! Searches for rainbow substructures and checks of construction artifacts.
//!
//! All searches are deterministic: when several witnesses exist, the one
//! returned is the lexicographically least under vertex order.

mod certificate;
mod cycle;
mod partition;
mod subgraph;
mod tree;
mod triangle;

use std::fmt;

pub use certificate::{
    verify_certificate, verify_peel_certificate, CertificateFailure, CertificateReport, PeelFailure, StructuralMismatch,
};
pub use cycle::find_rainbow_cycle;
pub use partition::{find_gallai_partition, GallaiPartition, PartitionError, PartitionFailure};
pub use subgraph::{find_rainbow_subgraph, is_rainbow_embedding};
pub use tree::{find_rainbow_tree, TreeError, TreeSearch};
pub use triangle::{find_rainbow_triangle, find_rainbow_triangle_naive};

/// Images of the target's vertices `1..=m` in `K_n`, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub images: Vec<usize>,
}

impl Embedding {
    pub fn new(images: Vec<usize>) -> Self {
        Self { images }
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1]
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.images.len() {
            3 => "TRIANGLE",
            _ => "EMBEDDING",
        };
        write!(f, "{label}")?;
        for v in &self.images {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted without finding a witness.
    Absent,
    /// The node budget ran out first.
    Inconclusive,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, SearchOutcome::Absent)
    }
}
