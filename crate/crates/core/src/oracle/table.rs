use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::error::FormatError;
use crate::graph::TargetGraph;
use crate::sequence::{pairs, DistributionSequence};

use super::search::{realize_counted, OracleOptions, Realizability};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Realizable,
    Unrealizable,
    Inconclusive,
    /// Not searched because the total budget ran out.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Realizable => "REALIZABLE",
            Verdict::Unrealizable => "UNREALIZABLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

impl std::str::FromStr for Verdict {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "REALIZABLE" => Ok(Verdict::Realizable),
            "UNREALIZABLE" => Ok(Verdict::Unrealizable),
            "INCONCLUSIVE" => Ok(Verdict::Inconclusive),
            "SKIPPED" => Ok(Verdict::Skipped),
            other => Err(FormatError::Invalid(format!("unknown verdict {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub counts: Vec<u64>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSummary {
    pub n: usize,
    pub sequences: usize,
    pub realizable: usize,
    pub unrealizable: usize,
    /// Inconclusive or skipped.
    pub undecided: usize,
}

impl LevelSummary {
    /// `None` when some sequence is undecided and none is known to fail.
    pub fn all_realizable(&self) -> Option<bool> {
        if self.unrealizable > 0 {
            Some(false)
        } else if self.undecided > 0 {
            None
        } else {
            Some(true)
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExactGReport {
    pub k: usize,
    pub n_max: usize,
    /// Every n-good sequence for `n = 1..=levels`, grouped by `n`.
    pub rows: Vec<TableRow>,
    pub levels: Vec<LevelSummary>,
    /// Some sequence was not decided, or some `n <= n_max` not enumerated.
    pub partial: bool,
    /// Least `N` such that every sequence is realizable for all
    /// `n` in `[N, n_max]`.
    pub least_all_realizable: Option<usize>,
}

#[derive(Clone, Copy, Debug)]
pub struct ExactGOptions {
    pub oracle: OracleOptions,
    /// Search nodes shared by all sequences.
    pub total_nodes: u64,
    /// Ordered sequences enumerated before stopping.
    pub max_sequences: u64,
    pub jobs: usize,
}

impl Default for ExactGOptions {
    fn default() -> Self {
        Self {
            oracle: OracleOptions {
                node_budget: 5_000_000,
                symmetry: true,
            },
            total_nodes: 500_000_000,
            max_sequences: 50_000,
            jobs: 1,
        }
    }
}

/// Number of ordered `k`-part compositions of `C(n, 2)`, or `None` past
/// `u64`.
pub fn sequence_count(n: usize, k: usize) -> Option<u64> {
    // C(C(n,2) + k - 1, k - 1)
    let top = pairs(n as u64) + k as u64 - 1;
    let mut acc: u128 = 1;
    for i in 0..(k as u64 - 1) {
        acc = acc * (top - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Every `k`-sequence summing to `total`, in lexicographically decreasing
/// order.
fn compositions(total: u64, k: usize) -> Vec<Vec<u64>> {
    fn rec(left: u64, slots: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=left).rev() {
            prefix.push(first);
            rec(left - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Decides every n-good `k`-sequence for `n = 1..=n_max`. Sequences that
/// are permutations of each other share one search.
pub fn exact_g(h: &TargetGraph, k: usize, n_max: usize, options: &ExactGOptions) -> ExactGReport {
    assert!(k >= 1, "need at least one colour");
    let mut rows = Vec::new();
    let mut levels = Vec::new();
    let mut partial = false;
    let mut enumerated = 0u64;
    let spent = AtomicU64::new(0);
    for n in 1..=n_max {
        let within = sequence_count(n, k).is_some_and(|c| enumerated + c <= options.max_sequences);
        if !within {
            partial = true;
            break;
        }
        let all = compositions(pairs(n as u64), k);
        enumerated += all.len() as u64;
        let mut distinct: Vec<Vec<u64>> = all
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        distinct.sort_unstable();
        distinct.dedup();
        let verdicts = decide_all(h, n, &distinct, options, &spent);
        let lookup: HashMap<&[u64], Verdict> = distinct.iter().map(Vec::as_slice).zip(verdicts).collect();
        let mut level = LevelSummary {
            n,
            sequences: all.len(),
            realizable: 0,
            unrealizable: 0,
            undecided: 0,
        };
        for counts in all {
            let mut key = counts.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            let verdict = lookup[key.as_slice()];
            match verdict {
                Verdict::Realizable => level.realizable += 1,
                Verdict::Unrealizable => level.unrealizable += 1,
                Verdict::Inconclusive | Verdict::Skipped => level.undecided += 1,
            }
            rows.push(TableRow { n, counts, verdict });
        }
        partial |= level.undecided > 0;
        levels.push(level);
    }
    let mut least_all_realizable = None;
    if levels.len() == n_max {
        for level in levels.iter().rev() {
            if level.all_realizable() != Some(true) {
                break;
            }
            least_all_realizable = Some(level.n);
        }
    }
    ExactGReport {
        k,
        n_max,
        rows,
        levels,
        partial,
        least_all_realizable,
    }
}

fn decide_all(
    h: &TargetGraph,
    n: usize,
    distinct: &[Vec<u64>],
    options: &ExactGOptions,
    spent: &AtomicU64,
) -> Vec<Verdict> {
    let results = Mutex::new(vec![Verdict::Skipped; distinct.len()]);
    let next = AtomicUsize::new(0);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(counts) = distinct.get(i) else { break };
        let used = spent.load(Ordering::Relaxed);
        if used >= options.total_nodes {
            continue;
        }
        let budget = options.oracle.node_budget.min(options.total_nodes - used);
        let oracle = OracleOptions {
            node_budget: budget,
            ..options.oracle
        };
        let seq = DistributionSequence::good(n, counts.clone()).expect("compositions of C(n,2) are n-good");
        let (outcome, nodes) = realize_counted(&seq, h, &oracle);
        let verdict = match outcome {
            Realizability::Realizable(_) => Verdict::Realizable,
            Realizability::Unrealizable => Verdict::Unrealizable,
            Realizability::Inconclusive => Verdict::Inconclusive,
        };
        spent.fetch_add(nodes, Ordering::Relaxed);
        results.lock().expect("no worker panics while holding the lock")[i] = verdict;
    };
    let jobs = options.jobs.max(1);
    if jobs == 1 {
        work();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(work);
            }
        });
    }
    results.into_inner().expect("workers finished")
}

impl ExactGReport {
    pub fn verdict(&self, counts: &[u64]) -> Option<Verdict> {
        self.rows.iter().find(|r| r.counts == counts).map(|r| r.verdict)
    }

    /// The realizability table: one `e1 .. ek VERDICT` line per sequence,
    /// with `#` comment lines for each `n` and the summary.
    pub fn table(&self) -> String {
        let mut out = String::new();
        if self.partial {
            out.push_str("# PARTIAL\n");
        }
        out.push_str(&format!("# k {} n_max {}\n", self.k, self.n_max));
        for level in &self.levels {
            let status = match level.all_realizable() {
                Some(true) => "all realizable",
                Some(false) => "some unrealizable",
                None => "undecided",
            };
            out.push_str(&format!("# n {}: {} sequences, {status}\n", level.n, level.sequences));
            for row in self.rows.iter().filter(|r| r.n == level.n) {
                let counts: Vec<String> = row.counts.iter().map(u64::to_string).collect();
                out.push_str(&format!("{} {}\n", counts.join(" "), row.verdict));
            }
        }
        out.push_str(&format!("# {}\n", self.summary()));
        out
    }

    pub fn summary(&self) -> String {
        match self.least_all_realizable {
            Some(low) => format!("all sequences realizable for n in [{low}, {}]", self.n_max),
            None if self.partial => "undecided: the table is partial".to_string(),
            None => format!("some sequence at n = {} is unrealizable", self.n_max),
        }
    }
}

/// Reads a realizability table back as `(counts, verdict)` pairs.
pub fn parse_table(text: &str) -> Result<Vec<(Vec<u64>, Verdict)>, FormatError> {
    crate::format::content_lines(text)
        .map(|(line_no, line)| {
            let (counts, verdict) = line.rsplit_once(char::is_whitespace).ok_or(FormatError::FieldCount {
                line: line_no,
                expected: 2,
                found: 1,
            })?;
            Ok((crate::format::parse_fields(counts, line_no)?, verdict.parse()?))
        })
        .collect()
}
