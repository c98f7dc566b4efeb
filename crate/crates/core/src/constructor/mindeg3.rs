//! Colourings with no rainbow subgraph of minimum degree three.
//!
//! Vertices are peeled from the top in groups. All edges touching a group
//! and lying below its top vertex get one of two colours, so any subgraph
//! whose first-peeled vertex has degree three or more repeats a colour.

use std::fmt;
use std::str::FromStr;

use crate::colouring::Colouring;
use crate::error::FormatError;
use crate::sequence::{pairs, DistributionSequence, SequenceError};

/// Vertices `lo..=hi` were peeled together; every edge `(u, v)` with
/// `u < v`, `lo <= v <= hi` has colour `major` or `minor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeelGroup {
    pub lo: usize,
    pub hi: usize,
    pub major: u32,
    pub minor: u32,
}

/// The groups of a peeling, from vertex `n` downwards. The last group
/// starts at vertex 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelCertificate {
    pub n: usize,
    pub k: usize,
    pub groups: Vec<PeelGroup>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Mindeg3Error {
    #[error("n = {n} < 2k = {} for the {k} nonzero colours", 2 * k)]
    TooFewVertices { n: usize, k: usize },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Peels groups off the top of `K_n`: with colours sorted by budget, the
/// smallest budget `e_s` fixes the group size as the least `t` with
/// `C(t, 2) + t (x - t) >= e_s`. The first `e_s` of those edges in
/// lexicographic order get the smallest colour and the rest the largest.
/// Colours with budget zero are ignored, and `n` must be at least twice
/// the number of the others.
pub fn construct_mindeg3(seq: &DistributionSequence) -> Result<(Colouring, PeelCertificate), Mindeg3Error> {
    seq.require_n_good()?;
    let n = seq.n();
    let mut live: Vec<(u32, u64)> = seq
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i as u32 + 1, e))
        .collect();
    if n < 2 * live.len() {
        return Err(Mindeg3Error::TooFewVertices { n, k: live.len() });
    }
    let mut colours = vec![0u32; pairs(n as u64) as usize];
    let mut groups = Vec::new();
    let mut x = n;
    while x >= 2 {
        live.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        if live.len() == 1 {
            let c = live[0].0;
            for u in 1..x {
                for v in u + 1..=x {
                    colours[crate::colouring::edge_index(n, u - 1, v - 1)] = c;
                }
            }
            groups.push(PeelGroup {
                lo: 1,
                hi: x,
                major: c,
                minor: c,
            });
            x = 0;
            break;
        }
        let (minor, small) = live.pop().unwrap();
        let t = (1..=x)
            .find(|&t| pairs(t as u64) + (t * (x - t)) as u64 >= small)
            .expect("t = x covers all remaining edges");
        let lo = x - t + 1;
        let touched = pairs(t as u64) + (t * (x - t)) as u64;
        let (major, big) = &mut live[0];
        assert!(touched - small <= *big, "largest colour covers the rest while n >= 2k");
        *big -= touched - small;
        let mut left = small;
        for u in 1..x {
            for v in lo.max(u + 1)..=x {
                let c = if left > 0 {
                    left -= 1;
                    minor
                } else {
                    *major
                };
                colours[crate::colouring::edge_index(n, u - 1, v - 1)] = c;
            }
        }
        groups.push(PeelGroup {
            lo,
            hi: x,
            major: *major,
            minor,
        });
        live.retain(|&(_, e)| e > 0);
        x = lo - 1;
    }
    if x == 1 {
        let c = live.first().map_or(1, |l| l.0);
        groups.push(PeelGroup {
            lo: 1,
            hi: 1,
            major: c,
            minor: c,
        });
    }
    let col = Colouring::from_edge_colours(n, seq.k(), colours).expect("every edge coloured in range");
    Ok((col, PeelCertificate { n, k: seq.k(), groups }))
}

impl fmt::Display for PeelCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "peel {} {}", self.n, self.k)?;
        for g in &self.groups {
            writeln!(f, "{} {} {} {}", g.lo, g.hi, g.major, g.minor)?;
        }
        Ok(())
    }
}

impl FromStr for PeelCertificate {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = crate::format::content_lines(s);
        let (line_no, header) = lines.next().ok_or(FormatError::Empty)?;
        let rest = header.strip_prefix("peel").ok_or_else(|| FormatError::BadToken {
            line: line_no,
            token: header.to_string(),
        })?;
        let (n, k) = crate::format::parse_pair(rest.trim(), line_no)?;
        let mut groups = Vec::new();
        for (line_no, line) in lines {
            let f = crate::format::parse_fields::<usize>(line, line_no)?;
            let [lo, hi, major, minor] = f[..] else {
                return Err(FormatError::FieldCount {
                    line: line_no,
                    expected: 4,
                    found: f.len(),
                });
            };
            groups.push(PeelGroup {
                lo,
                hi,
                major: major as u32,
                minor: minor as u32,
            });
        }
        Ok(PeelCertificate { n, k, groups })
    }
}
