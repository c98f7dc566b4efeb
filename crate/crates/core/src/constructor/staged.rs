//! The three-stage standard colouring: a reservoir of small blocks, a
//! cushion of medium blocks, then draining everything with simple steps.

use std::fmt;

use crate::sequence::DistributionSequence;

use super::constants::{StageConstants, StageParameters};
use super::moves::MoveError;
use super::state::{Block, SplitCertificate, SplitState};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Reservoir,
    Cushion,
    Drain,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Reservoir => "stage 1",
            Stage::Cushion => "stage 2",
            Stage::Drain => "stage 3",
        })
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
#[error("{stage}: {inequality}")]
pub struct StagedInfeasible {
    pub stage: Stage,
    /// The inequality that failed, with its values.
    pub inequality: String,
}

impl StagedInfeasible {
    fn new(stage: Stage, inequality: impl Into<String>) -> Self {
        Self {
            stage,
            inequality: inequality.into(),
        }
    }

    fn from_move(stage: Stage, e: MoveError) -> Self {
        Self::new(stage, e.to_string())
    }
}

/// Builds a standard colouring of `K_n` in three stages.
///
/// 1. `k` steps of size `r` split off the reservoir of small blocks.
/// 2. If the large colours hold at least a tenth of all edges, a fixed
///    number of size-`c` steps paid by them builds the cushion. Otherwise
///    the small and large colours are spent on simple steps, and each
///    middle colour in turn takes the largest step it can afford until the
///    main block falls below the stopping size.
/// 3. The main block is reduced to below `2k` and drained, then every
///    cushion block, then the reservoir.
///
/// The arithmetic only guarantees success for very large `k`. At desk
/// scale `r` and `c` are clamped and any failing precondition is reported
/// with its stage.
pub fn construct_staged(
    seq: &DistributionSequence,
    constants: &StageConstants,
) -> Result<SplitCertificate, StagedInfeasible> {
    let n = seq.n();
    let k = seq.k();
    seq.require_n_good()
        .map_err(|e| StagedInfeasible::new(Stage::Reservoir, e.to_string()))?;
    if n < 2 * k {
        return Err(StagedInfeasible::new(Stage::Drain, format!("n = {n} < 2k = {}", 2 * k)));
    }
    let params = constants.parameters(n, k);
    let mut state = SplitState::new(seq).expect("n-good checked above");
    let mut notes = params.metadata(constants);
    let all: Vec<u32> = (1..=k as u32).collect();

    // stage 1
    let (mut main, reservoir) = state
        .batch_steps(Block::new(1, n), params.r, k, &all)
        .map_err(|e| StagedInfeasible::from_move(Stage::Reservoir, e))?;
    notes.push(format!("reservoir_blocks {}", reservoir.len()));
    notes.push(format!("stage1_end {}", state.steps().len()));

    // stage 2
    let (case, cushion) = cushion_stage(&mut state, &params, &mut main)?;
    notes.push(format!("case {case}"));
    notes.push(format!("cushion_blocks {}", cushion.len()));
    notes.push(format!("stage2_end {}", state.steps().len()));

    // stage 3
    let drain = |e| StagedInfeasible::from_move(Stage::Drain, e);
    if main.size() >= 2 {
        let rest = state.reduce_large(main).map_err(drain)?;
        state.drain_with_cushion(rest).map_err(drain)?;
    }
    for block in cushion {
        if block.size() < 2 {
            continue;
        }
        let rest = if block.size() >= 2 * k {
            state.reduce_large(block).map_err(drain)?
        } else {
            block
        };
        state.drain_with_cushion(rest).map_err(drain)?;
    }
    // only reservoir blocks are left; the largest always admits a simple step
    while let Some(block) = state.largest_block() {
        let need = (block.size() - 1) as u64;
        let colour = state.best_colour(need, |_| true).ok_or_else(|| {
            StagedInfeasible::new(
                Stage::Drain,
                format!(
                    "no colour has budget >= {need} for a reservoir block of size {}",
                    block.size()
                ),
            )
        })?;
        state.simple_step(block, colour).map_err(|e| drain(e.into()))?;
    }

    let mut cert = state.into_certificate();
    cert.metadata = notes;
    Ok(cert)
}

fn cushion_stage(
    state: &mut SplitState,
    params: &StageParameters,
    main: &mut Block,
) -> Result<(u8, Vec<Block>), StagedInfeasible> {
    let k = params.k;
    let total = crate::sequence::pairs(params.n as u64) as f64;
    let large: Vec<u32> = (1..=k as u32)
        .filter(|&c| state.budget(c) as f64 >= params.large_threshold)
        .collect();
    let large_total: u64 = large.iter().map(|&c| state.budget(c)).sum();

    if large_total as f64 >= 0.1 * total {
        let (rest, blocks) = state
            .batch_steps(*main, params.c, params.case1_count, &large)
            .map_err(|e| StagedInfeasible::from_move(Stage::Cushion, e))?;
        *main = rest;
        return Ok((1, blocks));
    }

    let small: Vec<u32> = (1..=k as u32)
        .filter(|&c| state.budget(c) as f64 <= params.small_threshold)
        .collect();
    let mut spenders: Vec<u32> = large.iter().chain(&small).copied().collect();
    spenders.sort_by_key(|&c| (state.budget(c), c));
    for colour in spenders {
        while main.size() >= 2 && state.budget(colour) >= (main.size() - 1) as u64 {
            *main = state.simple_step(*main, colour).expect("budget checked");
        }
    }

    let mut blocks = Vec::new();
    let middle = (1..=k as u32).filter(|c| !large.contains(c) && !small.contains(c));
    for colour in middle {
        let x = main.size();
        if (x as f64) < params.stop_threshold {
            break;
        }
        let budget = state.budget(colour);
        let t = largest_affordable(x, budget);
        if t == 0 {
            continue;
        }
        let (rest, top) = state.standard_step(*main, t, colour).expect("size and budget checked");
        *main = rest;
        blocks.push(top);
    }
    Ok((2, blocks))
}

/// Largest `t <= (x - 1) / 2` with `t (x - t) <= budget`, or 0.
fn largest_affordable(x: usize, budget: u64) -> usize {
    let mut best = 0;
    for t in 1..=(x.saturating_sub(1)) / 2 {
        if (t * (x - t)) as u64 <= budget {
            best = t;
        } else {
            break;
        }
    }
    best
}
