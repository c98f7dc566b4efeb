//! Rigorous enclosures of natural logarithms of rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `lower <= ln x <= upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LnBounds {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl LnBounds {
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}

/// Fixed-point scale of the partial sums: `10^DIGITS`.
const DIGITS: u32 = 40;

/// Encloses `ln x` for a positive rational `x` to roughly 40 decimal digits.
///
/// `x` is scaled into `[1, 2)` by powers of two and each piece is evaluated
/// as `2 atanh(z)` with `z = (y - 1) / (y + 1) <= 1/3`. Partial sums are
/// rounded outward and the series tail is bounded by a geometric sum.
pub fn ln_bounds(x: &BigRational) -> LnBounds {
    assert!(x.is_positive(), "ln needs a positive argument");
    if x < &BigRational::one() {
        let inv = ln_bounds(&x.recip());
        return LnBounds {
            lower: -inv.upper,
            upper: -inv.lower,
        };
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mut y = x.clone();
    let mut halvings = 0u64;
    while y >= two {
        y /= &two;
        halvings += 1;
    }
    let one = BigRational::one();
    let z = (&y - &one) / (&y + &one);
    let (lo, hi) = twice_atanh(&z);
    if halvings == 0 {
        return LnBounds { lower: lo, upper: hi };
    }
    let third = BigRational::new(BigInt::from(1), BigInt::from(3));
    let (l2_lo, l2_hi) = twice_atanh(&third);
    let j = BigRational::from_integer(BigInt::from(halvings));
    LnBounds {
        lower: lo + &j * l2_lo,
        upper: hi + j * l2_hi,
    }
}

/// Bounds on `2 atanh(z) = 2 sum z^(2i+1) / (2i+1)` for `0 <= z <= 1/3`.
fn twice_atanh(z: &BigRational) -> (BigRational, BigRational) {
    if z.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let scale = BigInt::from(10u32).pow(DIGITS);
    let (p, q) = (z.numer().clone(), z.denom().clone());
    let z2 = z * z;
    let mut lower = BigInt::zero();
    let mut upper = BigInt::zero();
    let mut num = p.clone();
    let mut den = q.clone();
    let mut i = 0u64;
    loop {
        let d = &den * BigInt::from(2 * i + 1);
        let scaled = &scale * &num;
        let floor = &scaled / &d;
        let exact = &floor * &d == scaled;
        upper += if exact { floor.clone() } else { &floor + 1 };
        let done = floor.is_zero();
        lower += floor;
        num *= &p * &p;
        den *= &q * &q;
        i += 1;
        if done {
            break;
        }
    }
    // tail from index i on: z^(2i+1) / ((2i+1)(1 - z^2))
    let zi = BigRational::new(num, den);
    let tail = zi / (BigRational::from_integer(BigInt::from(2 * i + 1)) * (BigRational::one() - z2));
    let tail_scaled = (tail * BigRational::from_integer(scale.clone())).ceil().to_integer();
    upper += tail_scaled;
    let two = BigInt::from(2);
    (
        BigRational::new(lower * &two, scale.clone()),
        BigRational::new(upper * two, scale),
    )
}

/// Lossy conversion for display.
pub fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
