use std::collections::BTreeMap;
use std::fmt;

use crate::colouring::Colouring;
use crate::error::FormatError;
use crate::sequence::{pairs, DistributionSequence};

/// A contiguous interval `lo..=hi` of vertices, still uncoloured inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub lo: usize,
    pub hi: usize,
}

impl Block {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo >= 1 && lo <= hi);
        Self { lo, hi }
    }

    pub fn size(&self) -> usize {
        self.hi - self.lo + 1
    }
}

/// One standard colouring step: the top `t` vertices of `lo..=hi` are split
/// off and the `t * (size - t)` edges across are given `colour`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub lo: usize,
    pub hi: usize,
    pub t: usize,
    pub colour: u32,
}

impl Step {
    pub fn block(&self) -> Block {
        Block::new(self.lo, self.hi)
    }

    pub fn cost(&self) -> u64 {
        let size = (self.hi - self.lo + 1) as u64;
        self.t as u64 * (size - self.t as u64)
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum StepError {
    #[error("block {lo}..={hi} is not active")]
    UnknownBlock { lo: usize, hi: usize },
    #[error("block of size {size} cannot be split (needs size >= 2)")]
    BadSize { size: usize },
    #[error("step size t = {t} violates 1 <= t <= floor({size}/2) = {max}")]
    TooLargeT { t: usize, size: usize, max: usize },
    #[error("colour {colour} outside 1..={k}")]
    BadColour { colour: u32, k: usize },
    #[error("colour {colour} has budget {budget} < t(m-t) = {cost}")]
    BudgetExceeded { colour: u32, budget: u64, cost: u64 },
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum StateError {
    #[error("blocks and budgets disagree: sum C(size,2) = {blocks} but budgets sum to {budgets}")]
    Conservation { blocks: u64, budgets: u64 },
    #[error("blocks overlap or leave 1..={0}")]
    Overlap(usize),
    #[error(transparent)]
    Sequence(#[from] crate::sequence::SequenceError),
}

/// The live state of the standard colouring process: uncoloured blocks and
/// what is left of each colour's budget.
///
/// Conservation holds at all times: the total of `C(size, 2)` over blocks
/// equals the total remaining budget.
#[derive(Clone, Debug)]
pub struct SplitState {
    n: usize,
    budgets: Vec<u64>,
    // lo -> hi for blocks of size at least two
    blocks: BTreeMap<usize, usize>,
    block_pairs: u64,
    budget_total: u64,
    log: Vec<Step>,
}

impl SplitState {
    /// `S_0 = {K_n}` with the sequence as budgets.
    pub fn new(seq: &DistributionSequence) -> Result<Self, StateError> {
        seq.require_n_good()?;
        Self::from_parts(seq.n(), &[Block::new(1, seq.n())], seq.counts().to_vec())
    }

    /// An arbitrary intermediate state over vertices `1..=n`.
    pub fn from_parts(n: usize, blocks: &[Block], budgets: Vec<u64>) -> Result<Self, StateError> {
        let mut map = BTreeMap::new();
        let mut sorted = blocks.to_vec();
        sorted.sort();
        let mut prev_hi = 0;
        for b in &sorted {
            if b.lo <= prev_hi || b.hi > n {
                return Err(StateError::Overlap(n));
            }
            prev_hi = b.hi;
            if b.size() >= 2 {
                map.insert(b.lo, b.hi);
            }
        }
        let block_pairs: u64 = sorted.iter().map(|b| pairs(b.size() as u64)).sum();
        let budget_total: u64 = budgets.iter().sum();
        if block_pairs != budget_total {
            return Err(StateError::Conservation {
                blocks: block_pairs,
                budgets: budget_total,
            });
        }
        Ok(Self {
            n,
            budgets,
            blocks: map,
            block_pairs,
            budget_total,
            log: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.budgets.len()
    }

    pub fn budgets(&self) -> &[u64] {
        &self.budgets
    }

    pub fn budget(&self, colour: u32) -> u64 {
        self.budgets[colour as usize - 1]
    }

    /// Active blocks (size >= 2) in vertex order.
    pub fn blocks(&self) -> impl Iterator<Item = Block> + '_ {
        self.blocks.iter().map(|(&lo, &hi)| Block { lo, hi })
    }

    pub fn is_active(&self, block: Block) -> bool {
        self.blocks.get(&block.lo) == Some(&block.hi)
    }

    pub fn is_complete(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.log
    }

    /// `sum C(size, 2)` over active blocks, recomputed from scratch.
    pub fn block_pairs(&self) -> u64 {
        self.blocks().map(|b| pairs(b.size() as u64)).sum()
    }

    pub fn budget_total(&self) -> u64 {
        self.budgets.iter().sum()
    }

    pub fn largest_block(&self) -> Option<Block> {
        self.blocks()
            .max_by(|a, b| a.size().cmp(&b.size()).then(b.lo.cmp(&a.lo)))
    }

    /// Colour with the largest budget among those allowed and holding at
    /// least `need`; ties go to the smallest colour.
    pub fn best_colour(&self, need: u64, allowed: impl Fn(u32) -> bool) -> Option<u32> {
        let mut best: Option<(u64, u32)> = None;
        for (i, &b) in self.budgets.iter().enumerate() {
            let c = i as u32 + 1;
            if b >= need && allowed(c) && best.is_none_or(|(bb, _)| b > bb) {
                best = Some((b, c));
            }
        }
        best.map(|(_, c)| c)
    }

    /// Splits the top `t` vertices off `block` and colours the crossing
    /// edges with `colour`. Returns `(rest, split_off)`.
    pub fn standard_step(&mut self, block: Block, t: usize, colour: u32) -> Result<(Block, Block), StepError> {
        if !self.is_active(block) {
            return if block.size() < 2 && block.hi <= self.n {
                Err(StepError::BadSize { size: block.size() })
            } else {
                Err(StepError::UnknownBlock {
                    lo: block.lo,
                    hi: block.hi,
                })
            };
        }
        let size = block.size();
        if t == 0 || t > size / 2 {
            return Err(StepError::TooLargeT { t, size, max: size / 2 });
        }
        if colour == 0 || colour as usize > self.k() {
            return Err(StepError::BadColour { colour, k: self.k() });
        }
        let cost = (t * (size - t)) as u64;
        let budget = self.budgets[colour as usize - 1];
        if budget < cost {
            return Err(StepError::BudgetExceeded { colour, budget, cost });
        }
        self.budgets[colour as usize - 1] -= cost;
        self.budget_total -= cost;
        let rest = Block::new(block.lo, block.hi - t);
        let top = Block::new(block.hi - t + 1, block.hi);
        self.blocks.remove(&block.lo);
        for b in [rest, top] {
            if b.size() >= 2 {
                self.blocks.insert(b.lo, b.hi);
            }
        }
        self.block_pairs = self.block_pairs - pairs(size as u64) + pairs(rest.size() as u64) + pairs(t as u64);
        debug_assert_eq!(self.block_pairs, self.budget_total);
        self.log.push(Step {
            lo: block.lo,
            hi: block.hi,
            t,
            colour,
        });
        Ok((rest, top))
    }

    /// A standard step of size one.
    pub fn simple_step(&mut self, block: Block, colour: u32) -> Result<Block, StepError> {
        self.standard_step(block, 1, colour).map(|(rest, _)| rest)
    }

    /// Spare budget for `block`: total budget minus `C(size, 2)`, which by
    /// conservation is the `C(size, 2)` total of all other blocks.
    pub fn cushion(&self, block: Block) -> u64 {
        let own = pairs(block.size() as u64);
        let by_budget = self.budget_total() - own;
        let by_blocks: u64 = self
            .blocks()
            .filter(|&b| b != block)
            .map(|b| pairs(b.size() as u64))
            .sum();
        assert_eq!(by_budget, by_blocks, "conservation broken");
        by_budget
    }

    pub fn certificate(&self, k: usize) -> SplitCertificate {
        SplitCertificate {
            n: self.n,
            k,
            steps: self.log.clone(),
            metadata: Vec::new(),
        }
    }

    pub fn into_certificate(self) -> SplitCertificate {
        let k = self.k();
        SplitCertificate {
            n: self.n,
            k,
            steps: self.log,
            metadata: Vec::new(),
        }
    }
}

/// A replayable log of standard colouring steps starting from `{K_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate {
    pub n: usize,
    pub k: usize,
    pub steps: Vec<Step>,
    /// Free-form `key value` notes written as `#` lines.
    pub metadata: Vec<String>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RealizeError {
    #[error("step {index}: {reason}")]
    BadStep { index: usize, reason: String },
    #[error("{0} edges left uncoloured")]
    Incomplete(u64),
}

impl SplitCertificate {
    /// Paints the colouring described by the steps.
    pub fn realize(&self) -> Result<Colouring, RealizeError> {
        let n = self.n;
        let mut col = Colouring::monochromatic(n, self.k.max(1), 1);
        let mut painted = vec![false; n * n.saturating_sub(1) / 2];
        let mut active: BTreeMap<usize, usize> = BTreeMap::new();
        if n >= 2 {
            active.insert(1, n);
        }
        for (index, s) in self.steps.iter().enumerate() {
            let bad = |reason: String| RealizeError::BadStep { index, reason };
            if active.get(&s.lo) != Some(&s.hi) {
                return Err(bad(format!("block {}..={} is not active", s.lo, s.hi)));
            }
            let size = s.hi - s.lo + 1;
            if s.t == 0 || s.t > size / 2 {
                return Err(bad(format!("t = {} out of range for size {size}", s.t)));
            }
            if s.colour == 0 || s.colour as usize > self.k {
                return Err(bad(format!("colour {} out of range", s.colour)));
            }
            let split = s.hi - s.t + 1;
            for u in s.lo..split {
                for v in split..=s.hi {
                    col.set(u, v, s.colour);
                    painted[crate::colouring::edge_index(n, u - 1, v - 1)] = true;
                }
            }
            active.remove(&s.lo);
            if split - s.lo >= 2 {
                active.insert(s.lo, split - 1);
            }
            if s.t >= 2 {
                active.insert(split, s.hi);
            }
        }
        let left = painted.iter().filter(|p| !**p).count() as u64;
        if left > 0 {
            return Err(RealizeError::Incomplete(left));
        }
        Ok(col)
    }

    /// Edges coloured per colour, indexed by `colour - 1`.
    pub fn consumed(&self) -> Vec<u64> {
        let mut used = vec![0u64; self.k];
        for s in &self.steps {
            used[s.colour as usize - 1] += s.cost();
        }
        used
    }

    pub fn metadata_value(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find_map(|m| {
            let (k, v) = m.split_once(' ')?;
            (k == key).then_some(v.trim())
        })
    }
}

impl fmt::Display for SplitCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.k)?;
        for s in &self.steps {
            writeln!(f, "{} {} {} {}", s.lo, s.hi, s.t, s.colour)?;
        }
        for m in &self.metadata {
            writeln!(f, "# {m}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SplitCertificate {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = crate::format::content_lines(s);
        let (line_no, header) = lines.next().ok_or(FormatError::Empty)?;
        let (n, k) = crate::format::parse_pair(header, line_no)?;
        let mut steps = Vec::new();
        for (line_no, line) in lines {
            let f = crate::format::parse_fields::<usize>(line, line_no)?;
            let [lo, hi, t, colour] = f[..] else {
                return Err(FormatError::FieldCount {
                    line: line_no,
                    expected: 4,
                    found: f.len(),
                });
            };
            if lo == 0 || lo > hi {
                return Err(FormatError::Invalid(format!("line {line_no}: bad block {lo}..={hi}")));
            }
            steps.push(Step {
                lo,
                hi,
                t,
                colour: colour as u32,
            });
        }
        let metadata = crate::format::comment_lines(s).map(str::to_string).collect();
        Ok(SplitCertificate { n, k, steps, metadata })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(blocks: &[(usize, usize)], budgets: Vec<u64>) -> SplitState {
        let n = blocks.iter().map(|b| b.1).max().unwrap();
        let blocks: Vec<Block> = blocks.iter().map(|&(lo, hi)| Block::new(lo, hi)).collect();
        SplitState::from_parts(n, &blocks, budgets).unwrap()
    }

    #[test]
    fn standard_step_arithmetic() {
        // K6 with budgets (9, 6): t = 2 colours 8 edges
        let mut s = state(&[(1, 6)], vec![9, 6]);
        let (rest, top) = s.standard_step(Block::new(1, 6), 2, 1).unwrap();
        assert_eq!((rest, top), (Block::new(1, 4), Block::new(5, 6)));
        assert_eq!(s.budget(1), 1);
        assert_eq!(s.block_pairs(), s.budget_total());
    }

    #[test]
    fn step_errors() {
        let mut s = state(&[(1, 5)], vec![10]);
        assert_eq!(
            s.standard_step(Block::new(1, 5), 3, 1),
            Err(StepError::TooLargeT { t: 3, size: 5, max: 2 })
        );
        assert!(matches!(
            s.standard_step(Block::new(1, 4), 1, 1),
            Err(StepError::UnknownBlock { .. })
        ));
        assert!(matches!(
            s.standard_step(Block::new(1, 5), 1, 2),
            Err(StepError::BadColour { .. })
        ));
        let mut s = state(&[(1, 5), (6, 6)], vec![3, 7]);
        assert_eq!(
            s.simple_step(Block::new(1, 5), 1),
            Err(StepError::BudgetExceeded {
                colour: 1,
                budget: 3,
                cost: 4
            })
        );
        assert_eq!(s.simple_step(Block::new(6, 6), 1), Err(StepError::BadSize { size: 1 }));
    }

    #[test]
    fn simple_step_on_pair() {
        let mut s = state(&[(1, 2)], vec![1]);
        s.simple_step(Block::new(1, 2), 1).unwrap();
        assert!(s.is_complete());
    }

    #[test]
    fn cushion_examples() {
        let s = state(&[(1, 5), (6, 8), (9, 10)], vec![7, 7]);
        assert_eq!(s.cushion(Block::new(1, 5)), 4);
        let s = state(&[(1, 7)], vec![21]);
        assert_eq!(s.cushion(Block::new(1, 7)), 0);
        let s = state(&[(1, 4), (5, 8)], vec![12]);
        assert_eq!(s.cushion(Block::new(1, 4)), 6);
        assert_eq!(s.cushion(Block::new(5, 8)), 6);
    }

    #[test]
    fn conservation_after_steps() {
        let mut s = state(&[(1, 5), (6, 8), (9, 10)], vec![6, 4, 4]);
        s.standard_step(Block::new(1, 5), 2, 1).unwrap();
        assert_eq!(s.block_pairs(), s.budget_total());
        s.simple_step(Block::new(6, 8), 3).unwrap();
        assert_eq!(s.block_pairs(), s.budget_total());
    }

    #[test]
    fn from_parts_checks() {
        let b = [Block::new(1, 3), Block::new(3, 4)];
        assert_eq!(
            SplitState::from_parts(4, &b, vec![4]).unwrap_err(),
            StateError::Overlap(4)
        );
        let b = [Block::new(1, 3)];
        assert!(matches!(
            SplitState::from_parts(3, &b, vec![4]),
            Err(StateError::Conservation { .. })
        ));
    }

    #[test]
    fn realize_and_parse() {
        let seq = DistributionSequence::good(4, vec![4, 2]).unwrap();
        let mut s = SplitState::new(&seq).unwrap();
        let (a, b) = s.standard_step(Block::new(1, 4), 2, 1).unwrap();
        s.simple_step(a, 2).unwrap();
        s.simple_step(b, 2).unwrap();
        let mut cert = s.into_certificate();
        cert.metadata.push("strategy test".into());
        let col = cert.realize().unwrap();
        assert_eq!(col.colour_counts(), vec![4, 2]);
        let text = cert.to_string();
        let back: SplitCertificate = text.parse().unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.metadata_value("strategy"), Some("test"));

        let partial = SplitCertificate {
            steps: cert.steps[..1].to_vec(),
            ..cert.clone()
        };
        assert_eq!(partial.realize(), Err(RealizeError::Incomplete(2)));
    }
}
