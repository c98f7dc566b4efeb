//! Depth-first search over standard colouring steps.
//!
//! Whether a standard colouring exists does not depend on the order in
//! which blocks are split: steps on different blocks touch disjoint edges
//! and every step only lowers one budget. So the search always splits the
//! largest block, and a state is determined up to colour renaming by its
//! multiset of block sizes and multiset of budgets.

use std::collections::HashSet;

use crate::sequence::DistributionSequence;

use super::state::{Block, SplitCertificate, SplitState, Step};

/// Default node limit for [`construct_greedy`].
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

/// Failed states are remembered only for small `n`, where keys are short.
const MEMO_MAX_N: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Certificate(SplitCertificate),
    /// The search space was exhausted: no standard colouring exists.
    Infeasible,
    /// The node limit was hit first.
    GiveUp {
        nodes: u64,
    },
}

impl GreedyOutcome {
    pub fn certificate(self) -> Option<SplitCertificate> {
        match self {
            GreedyOutcome::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for a standard colouring realizing `seq`.
///
/// At each node the largest block is split; simple steps are tried first,
/// then larger step sizes. A first pass orders colours best fit first
/// (smallest budget that pays for the step), which spends colours one at a
/// time and rarely strands the last block. If it runs out of half the
/// nodes, a second pass tries colours in decreasing budget order. Colours
/// with equal remaining budget are interchangeable, so only the first of
/// them is tried.
pub fn construct_greedy(seq: &DistributionSequence, node_budget: u64) -> GreedyOutcome {
    if seq.require_n_good().is_err() {
        return GreedyOutcome::Infeasible;
    }
    let n = seq.n();
    let mut search = Search {
        blocks: if n >= 2 { vec![Block::new(1, n)] } else { Vec::new() },
        budgets: seq.counts().to_vec(),
        log: Vec::new(),
        undo: Vec::new(),
        failed: HashSet::new(),
        memo: n <= MEMO_MAX_N,
        best_fit: true,
        nodes: 0,
        node_budget: node_budget.div_ceil(2),
    };
    let mut found = search.run();
    if found.is_none() {
        // failed states stay valid: they were exhausted under either order
        while !search.log.is_empty() {
            search.revert();
        }
        search.best_fit = false;
        search.node_budget = node_budget;
        found = search.run();
    }
    match found {
        Some(true) => {
            let mut state = SplitState::new(seq).expect("n-good");
            for s in &search.log {
                state
                    .standard_step(s.block(), s.t, s.colour)
                    .expect("search only takes legal steps");
            }
            GreedyOutcome::Certificate(state.into_certificate())
        }
        Some(false) => GreedyOutcome::Infeasible,
        None => GreedyOutcome::GiveUp { nodes: search.nodes },
    }
}

struct Frame {
    choices: Vec<(usize, u32)>,
    block_index: usize,
    next: usize,
    applied: bool,
}

struct Undo {
    index: usize,
    block: Block,
    pushed: usize,
}

struct Search {
    blocks: Vec<Block>,
    budgets: Vec<u64>,
    log: Vec<Step>,
    undo: Vec<Undo>,
    failed: HashSet<(Vec<usize>, Vec<u64>)>,
    memo: bool,
    best_fit: bool,
    nodes: u64,
    node_budget: u64,
}

impl Search {
    /// `Some(true)` on success, `Some(false)` when exhausted, `None` when
    /// the node budget ran out.
    fn run(&mut self) -> Option<bool> {
        if self.blocks.is_empty() {
            return Some(true);
        }
        let mut stack = match self.open() {
            Some(f) => vec![f],
            None => return Some(false),
        };
        while let Some(frame) = stack.last_mut() {
            if frame.applied {
                frame.applied = false;
                self.revert();
            }
            let frame = stack.last_mut().unwrap();
            if frame.next == frame.choices.len() {
                stack.pop();
                self.remember();
                continue;
            }
            let (t, colour) = frame.choices[frame.next];
            frame.next += 1;
            frame.applied = true;
            let index = frame.block_index;
            self.apply(index, t, colour);
            self.nodes += 1;
            if self.blocks.is_empty() {
                return Some(true);
            }
            if self.nodes >= self.node_budget {
                return None;
            }
            if let Some(f) = self.open() {
                stack.push(f);
            }
        }
        Some(false)
    }

    fn key(&self) -> (Vec<usize>, Vec<u64>) {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Block::size).collect();
        sizes.sort_unstable();
        let mut budgets = self.budgets.clone();
        budgets.sort_unstable();
        (sizes, budgets)
    }

    fn remember(&mut self) {
        if self.memo {
            let key = self.key();
            self.failed.insert(key);
        }
    }

    /// Choices for the current state, or `None` if it is known to fail.
    fn open(&mut self) -> Option<Frame> {
        if self.memo && self.failed.contains(&self.key()) {
            return None;
        }
        let (block_index, block) = self
            .blocks
            .iter()
            .copied()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.size().cmp(&b.size()).then(b.lo.cmp(&a.lo)))?;
        let m = block.size();
        let mut order: Vec<u32> = (1..=self.budgets.len() as u32).collect();
        if self.best_fit {
            order.sort_by(|&a, &b| self.budget(a).cmp(&self.budget(b)).then(a.cmp(&b)));
        } else {
            order.sort_by(|&a, &b| self.budget(b).cmp(&self.budget(a)).then(a.cmp(&b)));
        }
        let mut choices = Vec::new();
        for t in 1..=m / 2 {
            let cost = (t * (m - t)) as u64;
            let mut last_budget = None;
            for &c in &order {
                let b = self.budget(c);
                if b < cost {
                    continue;
                }
                if last_budget == Some(b) {
                    continue;
                }
                last_budget = Some(b);
                choices.push((t, c));
            }
        }
        if choices.is_empty() {
            self.remember();
            return None;
        }
        Some(Frame {
            choices,
            block_index,
            next: 0,
            applied: false,
        })
    }

    fn budget(&self, colour: u32) -> u64 {
        self.budgets[colour as usize - 1]
    }

    fn apply(&mut self, index: usize, t: usize, colour: u32) {
        let block = self.blocks.swap_remove(index);
        let m = block.size();
        self.budgets[colour as usize - 1] -= (t * (m - t)) as u64;
        let rest = Block::new(block.lo, block.hi - t);
        let top = Block::new(block.hi - t + 1, block.hi);
        let mut pushed = 0;
        for b in [rest, top] {
            if b.size() >= 2 {
                self.blocks.push(b);
                pushed += 1;
            }
        }
        self.log.push(Step {
            lo: block.lo,
            hi: block.hi,
            t,
            colour,
        });
        self.undo.push(Undo { index, block, pushed });
    }

    fn revert(&mut self) {
        let step = self.log.pop().unwrap();
        let undo = self.undo.pop().unwrap();
        self.budgets[step.colour as usize - 1] += step.cost();
        for _ in 0..undo.pushed {
            self.blocks.pop();
        }
        // undo swap_remove
        if undo.index == self.blocks.len() {
            self.blocks.push(undo.block);
        } else {
            let moved = std::mem::replace(&mut self.blocks[undo.index], undo.block);
            self.blocks.push(moved);
        }
    }
}
