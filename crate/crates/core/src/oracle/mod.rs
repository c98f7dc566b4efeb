//! Brute-force realizability for tiny `n`, the ground truth the
//! constructors and bounds are checked against.

mod search;
mod standard;
mod table;

pub use search::{is_realizable, is_realizable_with, OracleOptions, Realizability};
pub use standard::is_realizable_standard;
pub use table::{exact_g, parse_table, sequence_count, ExactGOptions, ExactGReport, LevelSummary, TableRow, Verdict};
