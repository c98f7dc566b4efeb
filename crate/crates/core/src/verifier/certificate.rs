use crate::colouring::Colouring;
use crate::constructor::{PeelCertificate, SplitCertificate, SplitState, StepError};
use crate::sequence::DistributionSequence;

/// The certificate, colouring and sequence do not describe the same `K_n`.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum StructuralMismatch {
    #[error("vertex counts differ: certificate {cert}, colouring {colouring}, sequence {sequence}")]
    VertexCount {
        cert: usize,
        colouring: usize,
        sequence: usize,
    },
    #[error("colour counts differ: certificate {cert}, colouring {colouring}, sequence {sequence}")]
    ColourCount {
        cert: usize,
        colouring: usize,
        sequence: usize,
    },
    #[error("sequence is not n-good: {0}")]
    NotGood(String),
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CertificateFailure {
    #[error("step {index}: {error}")]
    Precondition { index: usize, error: StepError },
    #[error("step {index}: edge ({u}, {v}) has colour {found}, the step gives it {expected}")]
    EdgeMismatch {
        index: usize,
        u: usize,
        v: usize,
        expected: u32,
        found: u32,
    },
    #[error("{0} edges are never coloured by the steps")]
    Incomplete(u64),
    #[error("colour {colour} is used {found} times, the sequence asks for {expected}")]
    CountMismatch { colour: u32, expected: u64, found: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    /// Steps replayed before the first failure, or all of them.
    pub steps_checked: usize,
    pub failure: Option<CertificateFailure>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Replays `cert` from `{K_n}` with `seq` as budgets. Every step must be a
/// legal standard step, every edge it colours must have that colour in
/// `col`, the steps must colour all edges, and `col` must have exactly the
/// counts of `seq`.
pub fn verify_certificate(
    cert: &SplitCertificate,
    col: &Colouring,
    seq: &DistributionSequence,
) -> Result<CertificateReport, StructuralMismatch> {
    if cert.n != col.n() || cert.n != seq.n() {
        return Err(StructuralMismatch::VertexCount {
            cert: cert.n,
            colouring: col.n(),
            sequence: seq.n(),
        });
    }
    if cert.k != col.k() || cert.k != seq.k() {
        return Err(StructuralMismatch::ColourCount {
            cert: cert.k,
            colouring: col.k(),
            sequence: seq.k(),
        });
    }
    let mut state = SplitState::new(seq).map_err(|e| StructuralMismatch::NotGood(e.to_string()))?;
    let fail = |steps_checked, failure| {
        Ok(CertificateReport {
            steps_checked,
            failure: Some(failure),
        })
    };
    for (index, step) in cert.steps.iter().enumerate() {
        if let Err(error) = state.standard_step(step.block(), step.t, step.colour) {
            return fail(index, CertificateFailure::Precondition { index, error });
        }
        let split = step.hi - step.t + 1;
        for u in step.lo..split {
            for v in split..=step.hi {
                let found = col.colour(u, v);
                if found != step.colour {
                    return fail(
                        index,
                        CertificateFailure::EdgeMismatch {
                            index,
                            u,
                            v,
                            expected: step.colour,
                            found,
                        },
                    );
                }
            }
        }
    }
    let steps = cert.steps.len();
    if !state.is_complete() {
        return fail(steps, CertificateFailure::Incomplete(state.block_pairs()));
    }
    for (i, (&found, &expected)) in col.colour_counts().iter().zip(seq.counts()).enumerate() {
        if found != expected {
            return fail(
                steps,
                CertificateFailure::CountMismatch {
                    colour: i as u32 + 1,
                    expected,
                    found,
                },
            );
        }
    }
    Ok(CertificateReport {
        steps_checked: steps,
        failure: None,
    })
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PeelFailure {
    #[error("certificate is for n = {cert}, colouring has n = {colouring}")]
    VertexCount { cert: usize, colouring: usize },
    #[error("groups must tile {n}..1 from the top; group {index} is {lo}..={hi}")]
    Tiling {
        index: usize,
        lo: usize,
        hi: usize,
        n: usize,
    },
    #[error("group {index}: edge ({u}, {v}) has colour {colour}, allowed {major} and {minor}")]
    ThirdColour {
        index: usize,
        u: usize,
        v: usize,
        colour: u32,
        major: u32,
        minor: u32,
    },
}

/// Checks a peeling certificate: groups tile `n, n-1, ..., 1` from the top
/// and every edge below a group's top vertex that touches the group uses
/// one of its two colours. A colouring passing this check has no rainbow
/// subgraph of minimum degree three.
pub fn verify_peel_certificate(cert: &PeelCertificate, col: &Colouring) -> Result<(), PeelFailure> {
    let n = col.n();
    if cert.n != n {
        return Err(PeelFailure::VertexCount {
            cert: cert.n,
            colouring: n,
        });
    }
    let mut top = n;
    for (index, g) in cert.groups.iter().enumerate() {
        if g.hi != top || g.lo == 0 || g.lo > g.hi {
            return Err(PeelFailure::Tiling {
                index,
                lo: g.lo,
                hi: g.hi,
                n,
            });
        }
        for v in g.lo..=g.hi {
            for u in 1..v {
                let colour = col.colour(u, v);
                if colour != g.major && colour != g.minor {
                    return Err(PeelFailure::ThirdColour {
                        index,
                        u,
                        v,
                        colour,
                        major: g.major,
                        minor: g.minor,
                    });
                }
            }
        }
        top = g.lo - 1;
    }
    if top != 0 {
        return Err(PeelFailure::Tiling {
            index: cert.groups.len(),
            lo: 1,
            hi: top,
            n,
        });
    }
    Ok(())
}
