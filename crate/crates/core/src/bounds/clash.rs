//! Too few monochromatic edge pairs force a rainbow `K_m`.
//!
//! A random `m`-subset contains a given pair of same-coloured edges with
//! probability at most `m(m-1)(m-2) / (n(n-1)(n-2))`. When the expected
//! number of such pairs is below one, some `m`-subset is rainbow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;

use crate::colouring::Colouring;
use crate::graph::TargetGraph;
use crate::sequence::{pairs, DistributionSequence};
use crate::verifier::Embedding;

use super::certificate::{CertificateKind, CertifiedSequence, InfeasibilityCertificate};
use super::RangeError;

/// `n(n-1)(n-2) / (m(m-1)(m-2)) - sum C(e_i, 2)`, exactly.
pub fn clash_margin(seq: &DistributionSequence, m: u64) -> BigRational {
    let n = BigInt::from(seq.n());
    let m = BigInt::from(m);
    let rhs = BigRational::new(&n * (&n - 1) * (&n - 2), &m * (&m - 1) * (&m - 2));
    let clashes: BigInt = seq
        .counts()
        .iter()
        .map(|&e| BigInt::from(e) * (BigInt::from(e) - 1) / 2)
        .sum();
    rhs - BigRational::from_integer(clashes)
}

/// A certificate that every colouring with `seq` contains a rainbow `K_m`,
/// when `sum C(e_i, 2) < n(n-1)(n-2) / (m(m-1)(m-2))`.
pub fn clash_bound_check(seq: &DistributionSequence, m: usize) -> Option<InfeasibilityCertificate> {
    assert!(m >= 3, "the clash bound needs m >= 3");
    if !seq.is_n_good() || seq.n() < m {
        return None;
    }
    let margin = clash_margin(seq, m as u64);
    margin.is_positive().then(|| InfeasibilityCertificate {
        kind: CertificateKind::RainbowKmForced,
        k: seq.k() as u64,
        n: seq.n() as u64,
        m: Some(m as u64),
        a: None,
        b: None,
        c: None,
        margin,
        log_error: None,
        sequence: CertifiedSequence::Explicit(seq.counts().to_vec()),
    })
}

/// Samples uniform `m`-subsets and returns the first that spans a rainbow
/// `K_m`, as its sorted vertices. `None` after `trials` misses proves
/// nothing.
pub fn sample_rainbow_km<R: Rng>(col: &Colouring, m: usize, trials: u64, rng: &mut R) -> Option<Embedding> {
    let n = col.n();
    assert!(m <= n, "cannot sample {m} of {n} vertices");
    let mut seen = vec![0u64; col.k() + 1];
    for trial in 1..=trials {
        let mut set: Vec<usize> = rand::seq::index::sample(rng, n, m).into_iter().map(|v| v + 1).collect();
        set.sort_unstable();
        let rainbow = set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..].iter().all(|&v| {
                let c = col.colour(u, v) as usize;
                let fresh = seen[c] != trial;
                seen[c] = trial;
                fresh
            })
        });
        if rainbow {
            return Some(Embedding::new(set));
        }
    }
    None
}

/// The balanced sequence on `n = floor(k / m^3)` vertices with its clash
/// certificate, where `m = |V(H)|`: a rainbow `K_m`, hence a rainbow `H`, is
/// forced, so `g(H, k) > n`.
pub fn general_lower_sequence(
    h: &TargetGraph,
    k: usize,
) -> Result<(DistributionSequence, usize, InfeasibilityCertificate), RangeError> {
    let m = h.vertex_count();
    if m < 3 {
        return Err(RangeError::new("m", format!("needs at least 3 vertices, H has {m}")));
    }
    let n = k / (m * m * m);
    if n < 1 || pairs(n as u64) < k as u64 {
        return Err(RangeError::new(
            "C(n,2) >= k",
            format!("n = floor(k/m^3) = {n} gives C(n,2) = {} < k = {k}", pairs(n as u64)),
        ));
    }
    let seq = DistributionSequence::balanced(n, k);
    let mut cert = clash_bound_check(&seq, m).ok_or_else(|| {
        RangeError::new(
            "clash bound",
            format!("sum C(e_i,2) >= n(n-1)(n-2)/(m(m-1)(m-2)) at n = {n}"),
        )
    })?;
    cert.sequence = CertifiedSequence::Balanced;
    Ok((seq, m, cert))
}
