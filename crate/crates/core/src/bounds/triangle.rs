//! A sequence with no Gallai colouring.
//!
//! Half the colours get a small budget `b = floor(k/2)` and the other half
//! share the remaining edges almost evenly (`a` or `a + 1` each). Peeling a
//! Gallai colouring part by part, only the large colours can serve as base
//! colours, and they run out: the base-coloured edges number at least
//! `n^2/2 - 2b^2/3 - 4(a+1) ln(n/b)` while the large colours hold at most
//! `n^2/2 - b^2`. A positive `b^2/3 - 4(a+1) ln(n/b)` is a contradiction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::constructor::{log_k, StageConstants};
use crate::sequence::{pairs, DistributionSequence};

use super::certificate::{CertificateKind, CertifiedSequence, InfeasibilityCertificate};
use super::log::{ln_bounds, to_f64};
use super::RangeError;

/// Denominator the triangle margin is rounded down to.
const MARGIN_DENOMINATOR: u64 = 1_000_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleHardSequence {
    pub k: u64,
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    /// `c` entries `a + 1`, then `a` up to colour `ceil(k/2)`, then `b`.
    pub sequence: DistributionSequence,
}

impl TriangleHardSequence {
    /// The hard sequence on `n = floor(alpha k^1.5 / sqrt(ln k))` vertices.
    pub fn new(k: u64, constants: &StageConstants) -> Result<Self, RangeError> {
        let kf = k as f64;
        let n = (constants.alpha * kf.powf(1.5) / log_k(k as usize).sqrt()).floor() as u64;
        Self::with_n(k, n)
    }

    /// The hard sequence for an explicit `n`.
    pub fn with_n(k: u64, n: u64) -> Result<Self, RangeError> {
        if k < 2 || n < 2 {
            return Err(RangeError::new(
                "k, n",
                format!("need k >= 2 and n >= 2, got k = {k}, n = {n}"),
            ));
        }
        let b = k / 2;
        let big = k.div_ceil(2);
        let total = pairs(n);
        let small_total = b * b;
        if total < small_total {
            return Err(RangeError::new(
                "a",
                format!("a < 0: C({n},2) = {total} < b*floor(k/2) = {b}*{b} = {small_total}"),
            ));
        }
        let a = (total - small_total) / big;
        let c = total - small_total - a * big;
        let counts = (0..k)
            .map(|i| {
                if i < c {
                    a + 1
                } else if i < big {
                    a
                } else {
                    b
                }
            })
            .collect();
        let sequence = DistributionSequence::good(n as usize, counts).expect("c is the residue, so the sum is C(n,2)");
        Ok(Self {
            k,
            n,
            a,
            b,
            c,
            sequence,
        })
    }

    /// The first side condition that fails, if any:
    /// `b^2 >= k^2/5`, `4(a+1) <= 5a`, `5a <= 5 C(n,2)/ceil(k/2)` and
    /// `n/b <= k` (so `ln(n/b) <= ln k`).
    pub fn failed_side_condition(&self) -> Option<&'static str> {
        let (k, n, a, b) = (self.k as u128, self.n as u128, self.a as u128, self.b as u128);
        if 5 * b * b < k * k {
            return Some("b^2 >= k^2/5");
        }
        if 4 * (a + 1) > 5 * a {
            return Some("4(a+1) <= 5a");
        }
        if a * (k.div_ceil(2)) > pairs(self.n) as u128 {
            return Some("5a <= 5C(n,2)/ceil(k/2)");
        }
        if n > k * b {
            return Some("ln(n/b) <= ln k");
        }
        None
    }
}

/// `triangle_hard_sequence(k)` with the default constants' `alpha`.
pub fn triangle_hard_sequence(k: u64, constants: &StageConstants) -> Result<TriangleHardSequence, RangeError> {
    TriangleHardSequence::new(k, constants)
}

/// A lower bound on `b^2/3 - 4(a+1) ln(n/b)` rounded down to a multiple of
/// `10^-12`, and the width of the logarithm enclosure used.
pub fn triangle_margin(hard: &TriangleHardSequence) -> (BigRational, f64) {
    let ratio = BigRational::new(BigInt::from(hard.n), BigInt::from(hard.b));
    let ln = ln_bounds(&ratio);
    let b = BigInt::from(hard.b);
    let first = BigRational::new(&b * &b, BigInt::from(3));
    let coeff = BigRational::from_integer(BigInt::from(4) * (BigInt::from(hard.a) + 1));
    // the coefficient is positive, so the upper log bound gives the worst case
    let worst = if ln.upper.is_negative() {
        &coeff * &ln.lower
    } else {
        &coeff * &ln.upper
    };
    let exact_lower = first - worst;
    let den = BigInt::from(MARGIN_DENOMINATOR);
    let scaled = (exact_lower * BigRational::from_integer(den.clone()))
        .floor()
        .to_integer();
    (BigRational::new(scaled, den), to_f64(&ln.width()))
}

/// A certificate that no Gallai colouring realizes the hard sequence for
/// `k`, when the margin is positive and the side conditions hold.
pub fn triangle_infeasibility_check(
    k: u64,
    constants: &StageConstants,
) -> Result<Option<InfeasibilityCertificate>, RangeError> {
    let hard = TriangleHardSequence::new(k, constants)?;
    if hard.b == 0 || hard.failed_side_condition().is_some() {
        return Ok(None);
    }
    let (margin, log_error) = triangle_margin(&hard);
    if !margin.is_positive() {
        return Ok(None);
    }
    Ok(Some(InfeasibilityCertificate {
        kind: CertificateKind::TriangleHardSequence,
        k,
        n: hard.n,
        m: Some(3),
        a: Some(hard.a),
        b: Some(hard.b),
        c: Some(hard.c),
        margin,
        log_error: Some(log_error),
        sequence: CertifiedSequence::TriangleHard,
    }))
}

/// The least `k` in `range` for which [`triangle_infeasibility_check`]
/// yields a certificate.
pub fn first_certified_k(range: std::ops::Range<u64>, constants: &StageConstants) -> Option<u64> {
    range
        .into_iter()
        .find(|&k| matches!(triangle_infeasibility_check(k, constants), Ok(Some(_))))
}
