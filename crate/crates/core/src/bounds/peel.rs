//! The splitting process behind the triangle bound: repeatedly take a
//! Gallai partition of the current block and peel off its smallest part.

use crate::colouring::Colouring;
use crate::verifier::{find_gallai_partition, find_rainbow_triangle, Embedding, PartitionFailure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelRecord {
    /// Block size before the peel, `x_{i-1}`.
    pub x_before: usize,
    /// Size of the peeled part, `t_i`.
    pub t: usize,
    /// Vertices peeled, in the original labels.
    pub part: Vec<usize>,
    pub base_colours: Vec<u32>,
    /// `t_i (x_{i-1} - t_i)` edges between the part and the rest, all in
    /// base colours.
    pub base_edges: u64,
    /// Edges of the base colours inside the block before the peel.
    pub base_frequency: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelTrace {
    pub n: usize,
    pub stop: usize,
    pub steps: Vec<PeelRecord>,
    pub final_size: usize,
    /// `sum t_i (x_{i-1} - t_i)`.
    pub base_edge_total: u64,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PeelError {
    #[error("not a Gallai colouring: {0}")]
    NotGallai(Embedding),
    #[error("no Gallai partition found for a block of size {size}")]
    HeuristicFailure { size: usize },
    #[error("stop must be at least 1")]
    BadStop,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TraceViolation {
    #[error("step {index}: x = {x_before} - {t} != {x_after}")]
    Sizes {
        index: usize,
        x_before: usize,
        t: usize,
        x_after: usize,
    },
    #[error("step {index}: peeled part of size {t} exceeds half of {x_before}")]
    NotSmallest { index: usize, t: usize, x_before: usize },
    #[error("step {index}: t = {t} > 2F/x with base frequency F = {frequency}, x = {x_before}")]
    FrequencyBound {
        index: usize,
        t: usize,
        frequency: u64,
        x_before: usize,
    },
}

/// Runs the splitting process down to a block of at most `stop` vertices.
pub fn peel_splitting_process(col: &Colouring, stop: usize) -> Result<PeelTrace, PeelError> {
    if stop < 1 {
        return Err(PeelError::BadStop);
    }
    if let Some(t) = find_rainbow_triangle(col) {
        return Err(PeelError::NotGallai(t));
    }
    let mut current: Vec<usize> = (1..=col.n()).collect();
    let mut steps = Vec::new();
    let mut base_edge_total = 0;
    while current.len() > stop {
        let x = current.len();
        let block = col.restrict(&current);
        let partition = match find_gallai_partition(&block) {
            Ok(p) => p,
            Err(PartitionFailure::NotGallai(t)) => {
                let mapped = Embedding::new(t.images.iter().map(|&v| current[v - 1]).collect());
                return Err(PeelError::NotGallai(mapped));
            }
            Err(PartitionFailure::NotFound) => return Err(PeelError::HeuristicFailure { size: x }),
        };
        let smallest = &partition.parts[partition.smallest_part()];
        let t = smallest.len();
        let counts = block.colour_counts();
        let base_frequency = partition.base_colours.iter().map(|&c| counts[c as usize - 1]).sum();
        let part: Vec<usize> = smallest.iter().map(|&v| current[v - 1]).collect();
        let base_edges = (t * (x - t)) as u64;
        base_edge_total += base_edges;
        current.retain(|v| !part.contains(v));
        steps.push(PeelRecord {
            x_before: x,
            t,
            part,
            base_colours: partition.base_colours.clone(),
            base_edges,
            base_frequency,
        });
    }
    Ok(PeelTrace {
        n: col.n(),
        stop,
        steps,
        final_size: current.len(),
        base_edge_total,
    })
}

impl PeelTrace {
    /// Block sizes `x_0, x_1, ...`.
    pub fn sizes(&self) -> Vec<usize> {
        let mut xs = vec![self.n];
        xs.extend(self.steps.iter().map(|s| s.x_before - s.t));
        xs
    }

    /// Checks `x_i = x_{i-1} - t_i`, `t_i <= x_{i-1} / 2`, and
    /// `t_i <= 2F / x_{i-1}` where `F` is the base colours' frequency: the
    /// `t (x - t) >= t x / 2` crossing edges are all base coloured.
    pub fn check(&self) -> Result<(), TraceViolation> {
        let mut x = self.n;
        for (index, s) in self.steps.iter().enumerate() {
            if s.x_before != x || s.t == 0 || s.t > x {
                return Err(TraceViolation::Sizes {
                    index,
                    x_before: s.x_before,
                    t: s.t,
                    x_after: x,
                });
            }
            if 2 * s.t > s.x_before {
                return Err(TraceViolation::NotSmallest {
                    index,
                    t: s.t,
                    x_before: s.x_before,
                });
            }
            if (s.t * s.x_before) as u64 > 2 * s.base_frequency {
                return Err(TraceViolation::FrequencyBound {
                    index,
                    t: s.t,
                    frequency: s.base_frequency,
                    x_before: s.x_before,
                });
            }
            x -= s.t;
        }
        if x != self.final_size {
            return Err(TraceViolation::Sizes {
                index: self.steps.len(),
                x_before: x,
                t: 0,
                x_after: self.final_size,
            });
        }
        Ok(())
    }

    /// Steps where the base colours hold at most `2(a+1)` edges, checked
    /// against `t_{i+1} <= 4(a+1) / x_i`. Returns how many steps qualified.
    pub fn check_hard_sequence_bound(&self, a: u64) -> Result<usize, TraceViolation> {
        let cap = 2 * (a + 1);
        let mut checked = 0;
        for (index, s) in self.steps.iter().enumerate() {
            if s.base_frequency > cap {
                continue;
            }
            checked += 1;
            if (s.t * s.x_before) as u64 > 2 * cap {
                return Err(TraceViolation::FrequencyBound {
                    index,
                    t: s.t,
                    frequency: s.base_frequency,
                    x_before: s.x_before,
                });
            }
        }
        Ok(checked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::construct_greedy;
    use crate::sequence::{pairs, DistributionSequence};

    #[test]
    fn monochromatic() {
        let trace = peel_splitting_process(&Colouring::monochromatic(5, 1, 1), 1).unwrap();
        assert_eq!(trace.final_size, 1);
        assert!(trace.steps.iter().all(|s| s.base_colours == vec![1] && s.t == 1));
        assert_eq!(trace.base_edge_total, pairs(5));
        trace.check().unwrap();
        assert_eq!(trace.sizes(), vec![5, 4, 3, 2, 1]);
    }

    #[test]
    fn rainbow_triangle() {
        let tri = Colouring::from_edge_colours(3, 3, vec![1, 2, 3]).unwrap();
        assert!(matches!(peel_splitting_process(&tri, 1), Err(PeelError::NotGallai(_))));
    }

    #[test]
    fn standard_colourings_peel_completely() {
        for (n, e) in [(6, vec![7, 8]), (8, vec![10, 9, 9]), (10, vec![20, 15, 10])] {
            let seq = DistributionSequence::good(n, e).unwrap();
            let col = construct_greedy(&seq, 100_000)
                .certificate()
                .unwrap()
                .realize()
                .unwrap();
            let trace = peel_splitting_process(&col, 1).unwrap();
            trace.check().unwrap();
            let simple = trace.steps.iter().all(|s| s.t == 1);
            if simple {
                assert_eq!(trace.base_edge_total, pairs(n as u64) - pairs(trace.final_size as u64));
            }
        }
    }

    #[test]
    fn stop_threshold() {
        let trace = peel_splitting_process(&Colouring::monochromatic(6, 2, 2), 3).unwrap();
        assert_eq!(trace.final_size, 3);
        assert_eq!(trace.steps.len(), 3);
        assert_eq!(
            peel_splitting_process(&Colouring::monochromatic(3, 1, 1), 0),
            Err(PeelError::BadStop)
        );
    }
}
