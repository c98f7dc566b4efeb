//! Compound moves built from standard steps, each with the arithmetic
//! precondition that guarantees it can be carried out.

use super::state::{Block, SplitState, StepError};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("cushion {cushion} < min((k^2-k)/2, k*m) = {needed} for a block of size {size}")]
    CushionTooSmall { cushion: u64, needed: u64, size: usize },
    #[error("batch of {count} steps of size {t} needs n' > t*count and allowed budget {allowed} > t*n'*(count+|allowed|) = {needed} (n' = {size})")]
    BatchInfeasible {
        size: usize,
        t: usize,
        count: usize,
        allowed: u64,
        needed: u128,
    },
    #[error("no colour can pay for a simple step on a block of size {size}: {context}")]
    Stuck { size: usize, context: &'static str },
    #[error(transparent)]
    Step(#[from] StepError),
}

impl SplitState {
    /// Simple steps on `block` until its size drops below `2k`. While the
    /// block has at least `2k` vertices, conservation forces some colour to
    /// hold at least `C(m, 2) / k >= m - 1`.
    pub fn reduce_large(&mut self, mut block: Block) -> Result<Block, MoveError> {
        let k = self.k();
        while block.size() >= 2 * k && block.size() >= 2 {
            let need = (block.size() - 1) as u64;
            let colour = self.best_colour(need, |_| true).ok_or(MoveError::Stuck {
                size: block.size(),
                context: "a block of size >= 2k always has a colour with budget >= size - 1",
            })?;
            block = self.simple_step(block, colour)?;
        }
        Ok(block)
    }

    /// The cushion a block of size `m` needs before it can be fully coloured
    /// by simple steps: `min((k^2 - k) / 2, k m)`.
    pub fn drain_requirement(&self, size: usize) -> u64 {
        let k = self.k() as u64;
        ((k * k - k) / 2).min(k * size as u64)
    }

    /// Colours `block` completely with `size - 1` simple steps, provided its
    /// cushion meets [`drain_requirement`](Self::drain_requirement).
    pub fn drain_with_cushion(&mut self, mut block: Block) -> Result<(), MoveError> {
        if block.size() < 2 {
            return Ok(());
        }
        let cushion = self.cushion(block);
        let needed = self.drain_requirement(block.size());
        if cushion < needed {
            return Err(MoveError::CushionTooSmall {
                cushion,
                needed,
                size: block.size(),
            });
        }
        while block.size() >= 2 {
            let colour = self
                .best_colour((block.size() - 1) as u64, |_| true)
                .ok_or(MoveError::Stuck {
                    size: block.size(),
                    context: "a sufficient cushion always leaves a colour with budget >= size - 1",
                })?;
            block = self.simple_step(block, colour)?;
        }
        Ok(())
    }

    /// `count` consecutive steps of size `t` on `block`, each paid by a
    /// colour in `allowed`. Feasible whenever `n' > t * count` and the
    /// allowed colours hold more than `t * n' * (count + |allowed|)`, since
    /// colour `i` can pay for at least `floor(e_i / (t n'))` such steps.
    ///
    /// Returns the remaining block and the blocks split off, in order. When
    /// the last step would split a block of size below `2t`, the split is
    /// made with the complementary size so that a block of exactly `t`
    /// vertices still comes off.
    pub fn batch_steps(
        &mut self,
        block: Block,
        t: usize,
        count: usize,
        allowed: &[u32],
    ) -> Result<(Block, Vec<Block>), MoveError> {
        if count == 0 {
            return Ok((block, Vec::new()));
        }
        let size = block.size();
        let allowed_total: u64 = allowed.iter().map(|&c| self.budget(c)).sum();
        let needed = t as u128 * size as u128 * (count + allowed.len()) as u128;
        if t == 0 || size <= t * count || (allowed_total as u128) <= needed {
            return Err(MoveError::BatchInfeasible {
                size,
                t,
                count,
                allowed: allowed_total,
                needed,
            });
        }
        let mut current = block;
        let mut pieces = Vec::with_capacity(count);
        for _ in 0..count {
            let m = current.size();
            let step = if 2 * t <= m { t } else { m - t };
            let cost = (step * (m - step)) as u64;
            let colour = self
                .best_colour(cost, |c| allowed.contains(&c))
                .ok_or(MoveError::Stuck {
                    size: m,
                    context: "batch capacity argument",
                })?;
            let (rest, top) = self.standard_step(current, step, colour)?;
            if step == t {
                pieces.push(top);
                current = rest;
            } else {
                pieces.push(rest);
                current = top;
            }
        }
        Ok((current, pieces))
    }
}
