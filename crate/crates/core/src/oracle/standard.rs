use std::collections::HashMap;

use crate::sequence::DistributionSequence;

/// Whether some sequence of standard steps colours `K_n` with exactly the
/// given distribution.
///
/// A state is the multiset of blocks still to colour and the multiset of
/// unspent budgets; each step splits any block of size `m` into `t` and
/// `m - t` and charges `t (m - t)` to one budget. Every block and every
/// budget is tried, so the answer does not lean on the order in which the
/// constructors split blocks.
pub fn is_realizable_standard(seq: &DistributionSequence) -> bool {
    if !seq.is_n_good() {
        return false;
    }
    let blocks = if seq.n() >= 2 { vec![seq.n() as u64] } else { Vec::new() };
    let budgets = canonical(seq.counts().to_vec());
    let mut memo = HashMap::new();
    solve(blocks, budgets, &mut memo)
}

/// Sorted descending with zeros removed.
fn canonical(mut v: Vec<u64>) -> Vec<u64> {
    v.retain(|&x| x > 0);
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn solve(blocks: Vec<u64>, budgets: Vec<u64>, memo: &mut HashMap<(Vec<u64>, Vec<u64>), bool>) -> bool {
    if blocks.is_empty() {
        return budgets.is_empty();
    }
    let key = (blocks, budgets);
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let (blocks, budgets) = &key;
    let mut answer = false;
    'search: for (i, &m) in blocks.iter().enumerate() {
        if i > 0 && blocks[i - 1] == m {
            continue;
        }
        for t in 1..=m / 2 {
            let cost = t * (m - t);
            for (j, &b) in budgets.iter().enumerate() {
                if b < cost || (j > 0 && budgets[j - 1] == b) {
                    continue;
                }
                let mut next_blocks = blocks.clone();
                next_blocks.remove(i);
                next_blocks.extend([t, m - t].into_iter().filter(|&s| s >= 2));
                let mut next_budgets = budgets.clone();
                next_budgets[j] -= cost;
                if solve(canonical(next_blocks), canonical(next_budgets), memo) {
                    answer = true;
                    break 'search;
                }
            }
        }
    }
    memo.insert(key, answer);
    answer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::{construct_greedy, GreedyOutcome};

    fn seq(n: usize, e: &[u64]) -> DistributionSequence {
        DistributionSequence::good(n, e.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(!is_realizable_standard(&seq(3, &[1, 1, 1])));
        assert!(is_realizable_standard(&seq(4, &[3, 3])));
        // 4 = 3 + 1 costs 3, 2 + 2 costs 4: neither fits a budget of 2
        assert!(!is_realizable_standard(&seq(4, &[2, 2, 2])));
        assert!(matches!(
            construct_greedy(&seq(4, &[2, 2, 2]), 10_000),
            GreedyOutcome::Infeasible
        ));
        for n in 1..12 {
            assert!(is_realizable_standard(&seq(n, &[(n * n.saturating_sub(1) / 2) as u64])));
        }
    }

    #[test]
    fn zero_budgets_are_ignored() {
        assert_eq!(
            is_realizable_standard(&seq(5, &[6, 0, 4])),
            is_realizable_standard(&seq(5, &[4, 6])),
        );
    }
}
