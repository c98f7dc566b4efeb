//! Colour distribution sequences.

use std::fmt;

use crate::error::FormatError;

/// `C(n, 2)`.
pub const fn pairs(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// A candidate colour distribution `(e_1, ..., e_k)` for `K_n`.
///
/// The sum is not forced to equal `C(n, 2)`; use [`is_n_good`](Self::is_n_good)
/// or [`require_n_good`](Self::require_n_good) where that matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistributionSequence {
    n: usize,
    counts: Vec<u64>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("a sequence needs n >= 1 and at least one colour")]
    Degenerate,
    #[error("sequence sums to {sum} but K_{n} has {pairs} edges")]
    NotGood { n: usize, sum: u64, pairs: u64 },
}

impl DistributionSequence {
    pub fn new(n: usize, counts: Vec<u64>) -> Result<Self, SequenceError> {
        if n == 0 || counts.is_empty() {
            return Err(SequenceError::Degenerate);
        }
        Ok(Self { n, counts })
    }

    /// Like [`new`](Self::new) but also rejects sequences that are not n-good.
    pub fn good(n: usize, counts: Vec<u64>) -> Result<Self, SequenceError> {
        let seq = Self::new(n, counts)?;
        seq.require_n_good()?;
        Ok(seq)
    }

    /// `k - r` entries equal to `q` followed by `r` entries equal to `q + 1`,
    /// where `C(n, 2) = qk + r`.
    pub fn balanced(n: usize, k: usize) -> Self {
        assert!(n >= 1 && k >= 1, "balanced sequence needs n, k >= 1");
        let total = pairs(n as u64);
        let (q, r) = (total / k as u64, total % k as u64);
        let counts = (0..k as u64)
            .map(|i| if i < k as u64 - r { q } else { q + 1 })
            .collect();
        Self { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Count for the 1-based colour `i`.
    pub fn count(&self, colour: usize) -> u64 {
        self.counts[colour - 1]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn pairs(&self) -> u64 {
        pairs(self.n as u64)
    }

    pub fn is_n_good(&self) -> bool {
        self.total() == self.pairs()
    }

    pub fn require_n_good(&self) -> Result<(), SequenceError> {
        if self.is_n_good() {
            Ok(())
        } else {
            Err(SequenceError::NotGood {
                n: self.n,
                sum: self.total(),
                pairs: self.pairs(),
            })
        }
    }

    pub fn max_entry(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    pub fn profile(&self) -> SequenceProfile {
        let max_entry = self.max_entry();
        SequenceProfile {
            n: self.n as u64,
            k: self.k() as u64,
            total: self.total(),
            max_entry,
            min_entry: self.counts.iter().copied().min().unwrap_or(0),
            max_multiplicity: self.counts.iter().filter(|&&e| e == max_entry).count() as u64,
        }
    }

    /// Entries sorted in non-increasing order.
    pub fn sorted_desc(&self) -> Vec<u64> {
        let mut v = self.counts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Summary statistics of a sequence, enough for the bounds that only look
/// at `n`, `k` and the extreme entries. Lets balanced sequences with far
/// more colours than fit in memory be reasoned about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceProfile {
    pub n: u64,
    pub k: u64,
    pub total: u64,
    pub max_entry: u64,
    pub min_entry: u64,
    pub max_multiplicity: u64,
}

impl SequenceProfile {
    pub fn balanced(n: u64, k: u64) -> Self {
        assert!(k >= 1);
        let total = pairs(n);
        let (q, r) = (total / k, total % k);
        let (max_entry, max_multiplicity) = if r == 0 { (q, k) } else { (q + 1, r) };
        Self {
            n,
            k,
            total,
            max_entry,
            min_entry: q,
            max_multiplicity,
        }
    }

    pub fn is_n_good(&self) -> bool {
        self.total == pairs(self.n)
    }
}

impl fmt::Display for DistributionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.k())?;
        let row: Vec<String> = self.counts.iter().map(u64::to_string).collect();
        writeln!(f, "{}", row.join(" "))
    }
}

impl std::str::FromStr for DistributionSequence {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = crate::format::content_lines(s);
        let (line_no, header) = lines.next().ok_or(FormatError::Empty)?;
        let (n, k) = crate::format::parse_pair(header, line_no)?;
        let mut counts = Vec::with_capacity(k);
        for (line_no, line) in lines {
            counts.extend(crate::format::parse_fields::<u64>(line, line_no)?);
        }
        if counts.len() != k {
            return Err(FormatError::Invalid(format!(
                "header announces {k} colours but {} counts follow",
                counts.len()
            )));
        }
        DistributionSequence::new(n, counts).map_err(|e| FormatError::Invalid(e.to_string()))
    }
}
