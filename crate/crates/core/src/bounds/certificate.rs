use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::FormatError;
use crate::sequence::{DistributionSequence, SequenceProfile};

use super::clash::clash_margin;
use super::log::to_f64;
use super::tree::tree_margin;
use super::triangle::{triangle_margin, TriangleHardSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// Every colouring with the sequence contains a rainbow `K_m`.
    RainbowKmForced,
    /// Every colouring with the sequence contains a rainbow copy of every
    /// tree on `m` vertices.
    TreeForced,
    /// No colouring with the hard triangle sequence is free of rainbow
    /// triangles.
    TriangleHardSequence,
}

impl CertificateKind {
    pub fn token(self) -> &'static str {
        match self {
            CertificateKind::RainbowKmForced => "RAINBOW_KM_FORCED",
            CertificateKind::TreeForced => "TREE_FORCED",
            CertificateKind::TriangleHardSequence => "TRIANGLE_HARD_SEQUENCE",
        }
    }
}

impl FromStr for CertificateKind {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "RAINBOW_KM_FORCED" => CertificateKind::RainbowKmForced,
            "TREE_FORCED" => CertificateKind::TreeForced,
            "TRIANGLE_HARD_SEQUENCE" => CertificateKind::TriangleHardSequence,
            other => return Err(FormatError::Invalid(format!("unknown certificate kind {other}"))),
        })
    }
}

/// How the certified sequence is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifiedSequence {
    Explicit(Vec<u64>),
    /// `balanced_sequence(n, k)`.
    Balanced,
    /// Determined by `k` and `n` as the hard triangle sequence.
    TriangleHard,
}

/// A self-checking witness that a sequence cannot be realized without a
/// rainbow copy of some graph.
///
/// `margin` is a lower bound on `(right side) - (left side)` of the
/// inequality behind the certificate: strictly positive for the strict
/// inequalities, non-negative for the tree bound. It is exact unless
/// `log_error` is set, in which case a logarithm was enclosed in an
/// interval of that width and `margin` is the rounded-down worst case.
#[derive(Clone, Debug, PartialEq)]
pub struct InfeasibilityCertificate {
    pub kind: CertificateKind,
    pub k: u64,
    pub n: u64,
    pub m: Option<u64>,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub c: Option<u64>,
    pub margin: BigRational,
    pub log_error: Option<f64>,
    pub sequence: CertifiedSequence,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ReverifyError {
    #[error("missing parameter {0}")]
    Missing(&'static str),
    #[error("stored {name} = {stored} but recomputed {recomputed}")]
    Mismatch {
        name: &'static str,
        stored: String,
        recomputed: String,
    },
    #[error("inequality does not hold: margin {0}")]
    NotPositive(String),
    #[error("sequence: {0}")]
    Sequence(String),
}

impl InfeasibilityCertificate {
    /// The explicit sequence, materializing balanced and hard sequences.
    /// Balanced sequences with huge `k` are better handled via [`profile`](Self::profile).
    pub fn materialize(&self) -> Result<DistributionSequence, ReverifyError> {
        let n = self.n as usize;
        match &self.sequence {
            CertifiedSequence::Explicit(e) => {
                DistributionSequence::new(n, e.clone()).map_err(|e| ReverifyError::Sequence(e.to_string()))
            }
            CertifiedSequence::Balanced => Ok(DistributionSequence::balanced(n, self.k as usize)),
            CertifiedSequence::TriangleHard => TriangleHardSequence::with_n(self.k, self.n)
                .map(|h| h.sequence)
                .map_err(|e| ReverifyError::Sequence(e.to_string())),
        }
    }

    pub fn profile(&self) -> Result<SequenceProfile, ReverifyError> {
        match self.sequence {
            CertifiedSequence::Balanced => Ok(SequenceProfile::balanced(self.n, self.k)),
            _ => self.materialize().map(|s| s.profile()),
        }
    }

    /// Recomputes the inequality from the stored parameters alone.
    pub fn reverify(&self) -> Result<(), ReverifyError> {
        let recomputed = match self.kind {
            CertificateKind::RainbowKmForced => {
                let m = self.m.ok_or(ReverifyError::Missing("m"))?;
                let seq = self.materialize()?;
                check_shape(&seq, self)?;
                clash_margin(&seq, m)
            }
            CertificateKind::TreeForced => {
                let m = self.m.ok_or(ReverifyError::Missing("m"))?;
                let profile = self.profile()?;
                if profile.k != self.k || !profile.is_n_good() {
                    return Err(ReverifyError::Sequence("not an n-good sequence with k colours".into()));
                }
                tree_margin(&profile, m)
            }
            CertificateKind::TriangleHardSequence => {
                let hard =
                    TriangleHardSequence::with_n(self.k, self.n).map_err(|e| ReverifyError::Sequence(e.to_string()))?;
                for (name, stored, value) in [("a", self.a, hard.a), ("b", self.b, hard.b), ("c", self.c, hard.c)] {
                    let stored = stored.ok_or(ReverifyError::Missing(name))?;
                    if stored != value {
                        return Err(ReverifyError::Mismatch {
                            name,
                            stored: stored.to_string(),
                            recomputed: value.to_string(),
                        });
                    }
                }
                if let Some(failed) = hard.failed_side_condition() {
                    return Err(ReverifyError::NotPositive(format!("side condition {failed}")));
                }
                triangle_margin(&hard).0
            }
        };
        if recomputed != self.margin {
            return Err(ReverifyError::Mismatch {
                name: "margin",
                stored: self.margin.to_string(),
                recomputed: recomputed.to_string(),
            });
        }
        let holds = match self.kind {
            CertificateKind::TreeForced => !recomputed.is_negative(),
            _ => recomputed.is_positive(),
        };
        if !holds {
            return Err(ReverifyError::NotPositive(recomputed.to_string()));
        }
        Ok(())
    }

    /// The inequality in words, for the `#` line.
    pub fn inequality(&self) -> String {
        let margin = to_f64(&self.margin);
        match self.kind {
            CertificateKind::RainbowKmForced => {
                format!("n(n-1)(n-2)/(m(m-1)(m-2)) - sum C(e_i,2) = {margin} > 0")
            }
            CertificateKind::TreeForced => format!("C(n,2)/(6m)^(6m) - max e_i = {margin:e} >= 0"),
            CertificateKind::TriangleHardSequence => {
                format!("b^2/3 - 4(a+1) ln(n/b) >= {margin} > 0")
            }
        }
    }
}

fn check_shape(seq: &DistributionSequence, cert: &InfeasibilityCertificate) -> Result<(), ReverifyError> {
    if seq.k() as u64 != cert.k || !seq.is_n_good() {
        return Err(ReverifyError::Sequence(format!(
            "expected an n-good sequence with {} colours, got {} colours summing to {}",
            cert.k,
            seq.k(),
            seq.total()
        )));
    }
    Ok(())
}

fn opt(v: Option<u64>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}

impl fmt::Display for InfeasibilityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} {} {} {} {} {} {} {} {}",
            self.kind.token(),
            self.k,
            self.n,
            opt(self.m),
            opt(self.a),
            opt(self.b),
            opt(self.c),
            self.margin.numer(),
            self.margin.denom(),
            self.log_error.map_or("-".to_string(), |e| format!("{e:e}")),
        )?;
        writeln!(f, "# {}", self.inequality())?;
        match &self.sequence {
            CertifiedSequence::Explicit(e) => {
                let row: Vec<String> = e.iter().map(u64::to_string).collect();
                writeln!(f, "SEQ {}", row.join(" "))
            }
            CertifiedSequence::Balanced => writeln!(f, "SEQ balanced"),
            CertifiedSequence::TriangleHard => writeln!(f, "SEQ triangle"),
        }
    }
}

impl FromStr for InfeasibilityCertificate {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = crate::format::content_lines(s);
        let (line_no, head) = lines.next().ok_or(FormatError::Empty)?;
        let f: Vec<&str> = head.split_whitespace().collect();
        if f.len() != 10 {
            return Err(FormatError::FieldCount {
                line: line_no,
                expected: 10,
                found: f.len(),
            });
        }
        let bad = |tok: &str| FormatError::BadToken {
            line: line_no,
            token: tok.to_string(),
        };
        let num = |tok: &str| tok.parse::<u64>().map_err(|_| bad(tok));
        let maybe = |tok: &str| if tok == "-" { Ok(None) } else { num(tok).map(Some) };
        let kind: CertificateKind = f[0].parse()?;
        let numer: BigInt = f[7].parse().map_err(|_| bad(f[7]))?;
        let denom: BigInt = f[8].parse().map_err(|_| bad(f[8]))?;
        if denom.is_zero() {
            return Err(bad(f[8]));
        }
        let log_error = if f[9] == "-" {
            None
        } else {
            Some(f[9].parse::<f64>().map_err(|_| bad(f[9]))?)
        };
        let mut sequence = match kind {
            CertificateKind::TriangleHardSequence => Some(CertifiedSequence::TriangleHard),
            _ => None,
        };
        for (line_no, line) in lines {
            let Some(rest) = line.strip_prefix("SEQ") else {
                return Err(FormatError::BadToken {
                    line: line_no,
                    token: line.to_string(),
                });
            };
            let rest = rest.trim();
            sequence = Some(match rest {
                "balanced" => CertifiedSequence::Balanced,
                "triangle" => CertifiedSequence::TriangleHard,
                _ => CertifiedSequence::Explicit(crate::format::parse_fields(rest, line_no)?),
            });
        }
        Ok(InfeasibilityCertificate {
            kind,
            k: num(f[1])?,
            n: num(f[2])?,
            m: maybe(f[3])?,
            a: maybe(f[4])?,
            b: maybe(f[5])?,
            c: maybe(f[6])?,
            margin: BigRational::new(numer, denom),
            log_error,
            sequence: sequence.ok_or_else(|| FormatError::Invalid("missing SEQ line".into()))?,
        })
    }
}
