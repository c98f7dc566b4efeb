//! Rare colours force rainbow trees: if every colour is used at most
//! `C(n, 2) / D(m)` times with `D(m) = (6m)^(6m)`, every colouring of `K_n`
//! contains a rainbow copy of every tree on `m` vertices.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

use crate::sequence::{pairs, DistributionSequence, SequenceProfile};

use super::certificate::{CertificateKind, CertifiedSequence, InfeasibilityCertificate};

/// `(6m)^(6m)`.
pub fn tree_threshold(m: u32) -> BigUint {
    assert!(m >= 2, "tree threshold needs m >= 2");
    BigUint::from(6 * m).pow(6 * m)
}

/// `C(n, 2) / D(m) - max e_i`.
pub fn tree_margin(profile: &SequenceProfile, m: u64) -> BigRational {
    let d = BigInt::from(tree_threshold(m as u32));
    BigRational::new(BigInt::from(pairs(profile.n)), d) - BigRational::from_integer(BigInt::from(profile.max_entry))
}

fn check(profile: &SequenceProfile, m: usize, sequence: CertifiedSequence) -> Option<InfeasibilityCertificate> {
    assert!(m >= 2, "tree check needs m >= 2");
    if !profile.is_n_good() {
        return None;
    }
    let margin = tree_margin(profile, m as u64);
    (!margin.is_negative()).then_some(InfeasibilityCertificate {
        kind: CertificateKind::TreeForced,
        k: profile.k,
        n: profile.n,
        m: Some(m as u64),
        a: None,
        b: None,
        c: None,
        margin,
        log_error: None,
        sequence,
    })
}

/// A certificate when `max e_i <= C(n, 2) / D(m)`.
pub fn tree_forced_check(seq: &DistributionSequence, m: usize) -> Option<InfeasibilityCertificate> {
    check(&seq.profile(), m, CertifiedSequence::Explicit(seq.counts().to_vec()))
}

/// [`tree_forced_check`] for `balanced_sequence(n, k)` without building it,
/// so that `k` may exceed memory.
pub fn tree_forced_check_balanced(n: u64, k: u64, m: usize) -> Option<InfeasibilityCertificate> {
    check(&SequenceProfile::balanced(n, k), m, CertifiedSequence::Balanced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn repeated(base: u32, exp: u32) -> BigUint {
        (0..exp).fold(BigUint::from(1u32), |acc, _| acc * base)
    }

    #[test]
    fn thresholds() {
        assert_eq!(tree_threshold(2), BigUint::from(8_916_100_448_256u64));
        assert_eq!(tree_threshold(2), repeated(12, 12));
        assert_eq!(tree_threshold(3), repeated(18, 18));
        for m in 2..8 {
            assert!(tree_threshold(m + 1) > tree_threshold(m));
        }
    }

    #[test]
    fn not_forced_when_a_colour_is_common() {
        let seq = DistributionSequence::good(6, vec![7, 8]).unwrap();
        assert!(tree_forced_check(&seq, 2).is_none());
    }

    #[test]
    fn balanced_with_many_colours() {
        // k = 2 D(2) colours on n vertices with C(n,2) >= k:
        // e_i <= 1 + C(n,2)/k <= 2 C(n,2)/k = C(n,2)/D(2)
        let d = 8_916_100_448_256u64;
        let k = 2 * d;
        let n = 6_000_000u64;
        assert!(pairs(n) >= k);
        let cert = tree_forced_check_balanced(n, k, 2).unwrap();
        cert.reverify().unwrap();
        assert!(tree_forced_check_balanced(1000, 10, 2).is_none());
    }
}
