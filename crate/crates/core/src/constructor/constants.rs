use std::fmt;

/// Constants of the staged construction and of the hard triangle sequence.
///
/// Logarithms are natural. `ln k` is evaluated as `ln(max(k, 3))` so that
/// the formulas stay finite and positive for `k < 3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StageConstants {
    pub alpha: f64,
    pub beta: f64,
}

impl Default for StageConstants {
    fn default() -> Self {
        Self {
            alpha: 0.1,
            beta: 5_000_000.0,
        }
    }
}

/// Natural log of `k`, floored at `ln 3`.
pub fn log_k(k: usize) -> f64 {
    (k.max(3) as f64).ln()
}

/// Everything the staged construction derives from `(n, k)` and the
/// constants, including how far the raw formulas had to be clamped.
#[derive(Clone, Debug, PartialEq)]
pub struct StageParameters {
    pub n: usize,
    pub k: usize,
    pub log_k: f64,
    /// `beta sqrt(k) / (30 sqrt(ln k))` before clamping.
    pub r_formula: f64,
    pub r: usize,
    /// `k^0.75 / (ln k)^0.75` before clamping.
    pub c_formula: f64,
    pub c: usize,
    /// `ceil(k^0.75 (ln k)^0.25)` steps of size `c` in the first case.
    pub case1_count: usize,
    /// Colours at or above this budget after the first stage are large.
    pub large_threshold: f64,
    /// Colours at or below this budget after the first stage are small.
    pub small_threshold: f64,
    /// The greedy splitting stops once the main block drops below this.
    pub stop_threshold: f64,
    /// One entry per clamp applied, e.g. `r 13 -> 9 (C(n,2) > 2knr)`.
    pub clamps: Vec<String>,
}

impl StageConstants {
    pub fn parameters(&self, n: usize, k: usize) -> StageParameters {
        let lk = log_k(k);
        let kf = k as f64;
        let mut clamps = Vec::new();
        let cap = (n / (3 * k.max(1))).max(1);

        let r_formula = self.beta * kf.sqrt() / (30.0 * lk.sqrt());
        let mut r = clamp(r_formula, cap, "r", &mut clamps);
        // batch precondition for k steps of size r on K_n: C(n,2) > r n 2k
        let total = (n as u128) * (n as u128).saturating_sub(1) / 2;
        let per_r = 2 * k as u128 * n as u128;
        if let Some(feasible) = total.saturating_sub(1).checked_div(per_r) {
            let feasible = feasible.max(1) as usize;
            if r > feasible {
                clamps.push(format!("r {r} -> {feasible} (C(n,2) > 2knr)"));
                r = feasible;
            }
        }

        let c_formula = kf.powf(0.75) / lk.powf(0.75);
        let c = clamp(c_formula, cap, "c", &mut clamps);
        let case1_count = (kf.powf(0.75) * lk.powf(0.25)).ceil() as usize;
        let beta2 = self.beta * self.beta;
        StageParameters {
            n,
            k,
            log_k: lk,
            r_formula,
            r,
            c_formula,
            c,
            case1_count,
            large_threshold: beta2 * kf.powf(2.25) / lk.powf(1.25),
            small_threshold: beta2 * kf * kf / (30.0 * lk),
            stop_threshold: 2.0 * self.beta.sqrt() * kf.powf(1.25) / lk.powf(0.25),
            clamps,
        }
    }

    /// `floor(beta k^1.5 / sqrt(ln k))`, the vertex count the construction
    /// is designed for.
    pub fn intended_n(&self, k: usize) -> f64 {
        (self.beta * (k as f64).powf(1.5) / log_k(k).sqrt()).floor()
    }
}

fn clamp(raw: f64, cap: usize, name: &str, clamps: &mut Vec<String>) -> usize {
    let floor = if raw.is_finite() && raw >= 0.0 {
        raw.floor()
    } else {
        f64::MAX
    };
    if floor < 1.0 {
        clamps.push(format!("{name} {raw:.6} -> 1 (lower)"));
        1
    } else if floor > cap as f64 {
        clamps.push(format!("{name} {raw:.6} -> {cap} (n/3k)"));
        cap
    } else {
        floor as usize
    }
}

impl StageParameters {
    /// Lines recorded in certificate metadata.
    pub fn metadata(&self, constants: &StageConstants) -> Vec<String> {
        let mut out = vec![
            format!("alpha {}", constants.alpha),
            format!("beta {}", constants.beta),
            "log natural".to_string(),
            format!("r {}", self.r),
            format!("c {}", self.c),
        ];
        out.extend(self.clamps.iter().map(|c| format!("clamp {c}")));
        out
    }
}

impl fmt::Display for StageParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} k={} r={} (raw {:.3}) c={} (raw {:.3}) case1_count={}",
            self.n, self.k, self.r, self.r_formula, self.c, self.c_formula, self.case1_count
        )
    }
}
