//! Complete-graph edge colourings.

use std::fmt;

use crate::error::FormatError;
use crate::sequence::DistributionSequence;

/// Colour of each edge of `K_n`, stored as a dense upper-triangular array.
/// Vertices are `1..=n` and colours `1..=k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Colouring {
    n: usize,
    k: usize,
    colours: Vec<u32>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ColouringError {
    #[error("need {expected} edge colours for K_{n}, got {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("edge ({u}, {v}) has colour {colour} outside 1..={k}")]
    ColourOutOfRange { u: usize, v: usize, colour: u32, k: usize },
}

/// Offset of edge `(u, v)`, `0 <= u < v < n` (0-based).
#[inline]
pub(crate) fn edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

impl Colouring {
    /// Builds a colouring from the row-major list of `(u, v)` colours,
    /// `u < v`, in lexicographic order.
    pub fn from_edge_colours(n: usize, k: usize, colours: Vec<u32>) -> Result<Self, ColouringError> {
        let expected = n * n.saturating_sub(1) / 2;
        if colours.len() != expected {
            return Err(ColouringError::WrongLength {
                n,
                expected,
                found: colours.len(),
            });
        }
        let col = Self { n, k, colours };
        if let Some((u, v, c)) = col.edges().find(|&(_, _, c)| c == 0 || c as usize > k) {
            return Err(ColouringError::ColourOutOfRange { u, v, colour: c, k });
        }
        Ok(col)
    }

    pub fn monochromatic(n: usize, k: usize, colour: u32) -> Self {
        assert!(colour >= 1 && colour as usize <= k);
        Self {
            n,
            k,
            colours: vec![colour; n * n.saturating_sub(1) / 2],
        }
    }

    /// Every edge gets its own colour, numbered in lexicographic edge order.
    pub fn all_distinct(n: usize) -> Self {
        let m = n * n.saturating_sub(1) / 2;
        Self {
            n,
            k: m.max(1),
            colours: (1..=m as u32).collect(),
        }
    }

    /// Colours edges by `f(u, v)` for `u < v`.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self, ColouringError> {
        let mut colours = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 1..=n {
            for v in u + 1..=n {
                colours.push(f(u, v));
            }
        }
        Self::from_edge_colours(n, k, colours)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Colour of the edge `{u, v}`, 1-based, in either order.
    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u != v);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colours[edge_index(self.n, a - 1, b - 1)]
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, colour: u32) {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let i = edge_index(self.n, a - 1, b - 1);
        self.colours[i] = colour;
    }

    /// Edges `(u, v, colour)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.n;
        (1..=n)
            .flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
            .zip(self.colours.iter())
            .map(|((u, v), &c)| (u, v, c))
    }

    pub fn raw(&self) -> &[u32] {
        &self.colours
    }

    /// Number of edges of each colour, indexed by `colour - 1`.
    pub fn colour_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.k];
        for &c in &self.colours {
            counts[c as usize - 1] += 1;
        }
        counts
    }

    pub fn realizes(&self, seq: &DistributionSequence) -> bool {
        seq.n() == self.n && seq.k() == self.k && seq.counts() == self.colour_counts().as_slice()
    }

    /// `|C(v)|`: number of distinct colours on edges at `v`.
    pub fn colour_degree(&self, v: usize) -> usize {
        let mut seen = vec![false; self.k + 1];
        let mut count = 0;
        for w in (1..=self.n).filter(|&w| w != v) {
            let c = self.colour(v, w) as usize;
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }

    /// Restriction to the given vertices, relabelled `1..=len` in the given
    /// order. Colours keep their numbering.
    pub fn restrict(&self, vertices: &[usize]) -> Colouring {
        let m = vertices.len();
        let mut colours = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                colours.push(self.colour(vertices[i], vertices[j]));
            }
        }
        Colouring {
            n: m,
            k: self.k,
            colours,
        }
    }
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Colouring(n={}, k={})", self.n, self.k)
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.k)?;
        let mut rest = self.colours.as_slice();
        for u in 1..self.n {
            let (row, tail) = rest.split_at(self.n - u);
            rest = tail;
            let mut line = String::with_capacity(row.len() * 3);
            for (i, c) in row.iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                line.push_str(&c.to_string());
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Colouring {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = crate::format::content_lines(s);
        let (line_no, header) = lines.next().ok_or(FormatError::Empty)?;
        let (n, k) = crate::format::parse_pair(header, line_no)?;
        let mut colours = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut rows = 0;
        for (line_no, line) in lines {
            rows += 1;
            let u = rows;
            let row = crate::format::parse_fields::<u32>(line, line_no)?;
            if u >= n || row.len() != n - u {
                return Err(FormatError::FieldCount {
                    line: line_no,
                    expected: n.saturating_sub(u),
                    found: row.len(),
                });
            }
            colours.extend(row);
        }
        if rows != n.saturating_sub(1) {
            return Err(FormatError::RowCount {
                expected: n.saturating_sub(1),
                found: rows,
            });
        }
        Colouring::from_edge_colours(n, k, colours).map_err(|e| FormatError::Invalid(e.to_string()))
    }
}
