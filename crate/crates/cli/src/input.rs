//! Reading targets, sequences and artifacts named on the command line.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use gallai::{DistributionSequence, TargetGraph};

use crate::outcome::{usage, Failure};

pub fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

pub fn parse_file<T: FromStr>(path: &Path) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    read_file(path)?
        .parse()
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// `builtin:K3`, `builtin:C4`, `builtin:P3`, `builtin:S3`, `builtin:petersen`,
/// or a graph file.
pub fn target(spec: &str) -> Result<TargetGraph, Failure> {
    match spec.strip_prefix("builtin:") {
        Some("petersen") => Ok(TargetGraph::petersen()),
        Some(name) => TargetGraph::builtin(name).ok_or_else(|| usage(format!("unknown builtin graph {name:?}"))),
        None => parse_file(Path::new(spec)),
    }
}

/// `balanced` (needs `k`), an inline list such as `"4 3 3"`, or a sequence
/// file whose `n` must agree with `n`.
pub fn sequence(spec: &str, n: usize, k: Option<usize>) -> Result<DistributionSequence, Failure> {
    let seq = if spec == "balanced" {
        let k = k.ok_or_else(|| usage("--seq balanced needs --k"))?;
        if k == 0 {
            return Err(usage("--k must be at least 1"));
        }
        DistributionSequence::balanced(n, k)
    } else if let Some(counts) = inline_counts(spec) {
        DistributionSequence::new(n, counts).map_err(usage)?
    } else {
        let seq: DistributionSequence = parse_file(Path::new(spec))?;
        if seq.n() != n {
            return Err(usage(format!("{spec} is for n = {}, not {n}", seq.n())));
        }
        seq
    };
    seq.require_n_good().map_err(usage)?;
    Ok(seq)
}

fn inline_counts(spec: &str) -> Option<Vec<u64>> {
    let counts: Result<Vec<u64>, _> = spec
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    counts.ok().filter(|c| !c.is_empty())
}
