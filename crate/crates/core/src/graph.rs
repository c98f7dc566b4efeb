//! The forbidden graph `H` and its degeneracy.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::FormatError;

/// A simple graph on vertices `1..=m`, the target whose rainbow copies are
/// forbidden.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetGraph {
    m: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    degeneracy: usize,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) is a loop")]
    Loop(usize, usize),
    #[error("edge ({0}, {1}) has an endpoint outside 1..={2}")]
    OutOfRange(usize, usize, usize),
    #[error("edge ({0}, {1}) appears twice")]
    Duplicate(usize, usize),
}

impl TargetGraph {
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if m == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        let mut adjacency = vec![Vec::new(); m];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u, v));
            }
            if u == 0 || v == 0 || u > m || v > m {
                return Err(GraphError::OutOfRange(u, v, m));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::Duplicate(u, v));
            }
            list.push(key);
            adjacency[key.0 - 1].push(key.1);
            adjacency[key.1 - 1].push(key.0);
        }
        list.sort_unstable();
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let degeneracy = peel_degeneracy(&adjacency);
        Ok(Self {
            m,
            edges: list,
            adjacency,
            degeneracy,
        })
    }

    pub fn complete(m: usize) -> Self {
        let edges = (1..=m).flat_map(|u| (u + 1..=m).map(move |v| (u, v)));
        Self::new(m, edges).expect("complete graph is simple")
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3, "a cycle needs at least three vertices");
        Self::new(m, (1..=m).map(|u| (u, u % m + 1))).expect("cycle is simple")
    }

    pub fn path(m: usize) -> Self {
        Self::new(m, (1..m).map(|u| (u, u + 1))).expect("path is simple")
    }

    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).expect("star is simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1));
        let spokes = (0..5).map(|i| (i + 1, i + 6));
        let inner = (0..5).map(|i| (i + 6, (i + 2) % 5 + 6));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
    }

    /// Parses the names accepted by the command line, e.g. `K3`, `C4`, `P3`.
    pub fn builtin(name: &str) -> Option<Self> {
        let (kind, size) = name.split_at(1.min(name.len()));
        let size: usize = size.parse().ok()?;
        match kind {
            "K" | "k" if size >= 1 => Some(Self::complete(size)),
            "C" | "c" if size >= 3 => Some(Self::cycle(size)),
            "P" | "p" if size >= 1 => Some(Self::path(size)),
            "S" | "s" => Some(Self::star(size)),
            _ => None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` (1-based), sorted.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    stack.push(w - 1);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.m && self.is_connected()
    }

    /// A subgraph of minimum degree at least `d`, as a sorted vertex list,
    /// obtained by repeatedly deleting vertices of degree below `d`.
    /// Empty when no such subgraph exists.
    pub fn core(&self, d: usize) -> Vec<usize> {
        let mut alive = vec![true; self.m];
        let mut deg: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let mut queue: Vec<usize> = (0..self.m).filter(|&v| deg[v] < d).collect();
        while let Some(v) = queue.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adjacency[v] {
                let w = w - 1;
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] + 1 == d {
                        queue.push(w);
                    }
                }
            }
        }
        (0..self.m).filter(|&v| alive[v]).map(|v| v + 1).collect()
    }

    /// Induced subgraph on the given 1-based vertices, relabelled in order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![0usize; self.m + 1];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != 0 && index[v] != 0)
            .map(|&(u, v)| (index[u], index[v]));
        Self::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }
}

/// Smallest-last peeling. The degeneracy is the largest minimum degree seen
/// while repeatedly deleting a minimum-degree vertex.
fn peel_degeneracy(adjacency: &[Vec<usize>]) -> usize {
    let n = adjacency.len();
    let mut deg: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); max_deg + 1];
    for (v, &d) in deg.iter().enumerate() {
        buckets[d].insert(v);
    }
    let mut removed = vec![false; n];
    let mut best = 0;
    let mut floor = 0;
    for _ in 0..n {
        while buckets[floor].is_empty() {
            floor += 1;
        }
        let v = buckets[floor].pop_first().expect("bucket is nonempty");
        removed[v] = true;
        best = best.max(floor);
        for &w in &adjacency[v] {
            let w = w - 1;
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
            }
        }
        floor = floor.saturating_sub(1);
    }
    best
}

impl fmt::Display for TargetGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.m)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TargetGraph {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = crate::format::content_lines(s);
        let (line_no, header) = lines.next().ok_or(FormatError::Empty)?;
        let m = crate::format::parse_fields::<usize>(header, line_no)?;
        let [m] = m[..] else {
            return Err(FormatError::FieldCount {
                line: line_no,
                expected: 1,
                found: m.len(),
            });
        };
        let mut edges = Vec::new();
        for (line_no, line) in lines {
            let pair = crate::format::parse_fields::<usize>(line, line_no)?;
            let [u, v] = pair[..] else {
                return Err(FormatError::FieldCount {
                    line: line_no,
                    expected: 2,
                    found: pair.len(),
                });
            };
            edges.push((u, v));
        }
        TargetGraph::new(m, edges).map_err(|e| FormatError::Invalid(e.to_string()))
    }
}
