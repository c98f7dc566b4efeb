pub mod certify;
pub mod construct;
pub mod oracle;
pub mod sweep;
pub mod verify;

use std::path::Path;

use gallai::verifier::{find_rainbow_subgraph, find_rainbow_tree, find_rainbow_triangle, Embedding, SearchOutcome};
use gallai::{Colouring, TargetGraph};

use crate::input::write_file;
use crate::outcome::Failure;

/// Writes to `path`, or to stdout when there is none.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

/// The cheapest exhaustive rainbow search that applies to `h`.
pub fn rainbow_search(col: &Colouring, h: &TargetGraph, budget: u64) -> SearchOutcome<Embedding> {
    if *h == TargetGraph::complete(3) {
        return match find_rainbow_triangle(col) {
            Some(t) => SearchOutcome::Found(t),
            None => SearchOutcome::Absent,
        };
    }
    match find_rainbow_tree(col, h, budget) {
        Ok(search) => search.outcome,
        Err(_) => find_rainbow_subgraph(col, h, budget),
    }
}
