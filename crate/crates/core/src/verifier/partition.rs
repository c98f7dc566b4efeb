//! Gallai partitions: every Gallai colouring of `K_n`, `n >= 2`, splits
//! into at least two parts such that all edges between any two parts share
//! one colour, and at most two colours (the base colours) occur between
//! parts. Moreover the partition can be chosen so that every base colour is
//! used on at least `n - 1` edges between parts.

use std::collections::BTreeMap;
use std::fmt;

use crate::colouring::Colouring;
use crate::dsu::Dsu;

use super::{find_rainbow_triangle, Embedding};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiPartition {
    /// One or two colours, sorted.
    pub base_colours: Vec<u32>,
    /// Vertex sets (1-based, sorted), ordered by smallest member.
    pub parts: Vec<Vec<usize>>,
    /// Colour between parts `i < j` (0-based part indices).
    pub between: BTreeMap<(usize, usize), u32>,
    /// Each base colour is used on at least `n - 1` inter-part edges.
    pub base_colours_dense: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionFailure {
    /// The colouring has a rainbow triangle, so no partition is promised.
    NotGallai(Embedding),
    /// No base set produced a partition. Never expected for a Gallai
    /// colouring; reported instead of claiming nonexistence.
    NotFound,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("need at least two parts, found {0}")]
    TooFewParts(usize),
    #[error("parts do not cover 1..=n exactly once")]
    NotAPartition,
    #[error("empty part")]
    EmptyPart,
    #[error("{0} base colours, at most two allowed")]
    TooManyBaseColours(usize),
    #[error("edge ({u}, {v}) between parts {i} and {j} has colour {found}, recorded {recorded}")]
    WrongColour {
        u: usize,
        v: usize,
        i: usize,
        j: usize,
        found: u32,
        recorded: u32,
    },
    #[error("pair of parts ({0}, {1}) has no recorded colour or a non-base one")]
    BadRecord(usize, usize),
}

impl GallaiPartition {
    /// Re-checks every inter-part edge against the recorded colours.
    pub fn verify(&self, col: &Colouring) -> Result<(), PartitionError> {
        let n = col.n();
        if self.parts.len() < 2 {
            return Err(PartitionError::TooFewParts(self.parts.len()));
        }
        if self.base_colours.len() > 2 {
            return Err(PartitionError::TooManyBaseColours(self.base_colours.len()));
        }
        let mut owner = vec![usize::MAX; n + 1];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(PartitionError::EmptyPart);
            }
            for &v in part {
                if v == 0 || v > n || owner[v] != usize::MAX {
                    return Err(PartitionError::NotAPartition);
                }
                owner[v] = i;
            }
        }
        if owner[1..].contains(&usize::MAX) {
            return Err(PartitionError::NotAPartition);
        }
        for i in 0..self.parts.len() {
            for j in i + 1..self.parts.len() {
                match self.between.get(&(i, j)) {
                    Some(c) if self.base_colours.contains(c) => {}
                    _ => return Err(PartitionError::BadRecord(i, j)),
                }
            }
        }
        for (u, v, c) in col.edges() {
            let (i, j) = (owner[u], owner[v]);
            if i == j {
                continue;
            }
            let key = (i.min(j), i.max(j));
            let recorded = self.between[&key];
            if recorded != c {
                return Err(PartitionError::WrongColour {
                    u,
                    v,
                    i: key.0,
                    j: key.1,
                    found: c,
                    recorded,
                });
            }
        }
        Ok(())
    }

    /// Number of inter-part edges of each base colour.
    pub fn base_usage(&self) -> Vec<(u32, u64)> {
        self.base_colours
            .iter()
            .map(|&c| {
                let used = self
                    .between
                    .iter()
                    .filter(|(_, &b)| b == c)
                    .map(|(&(i, j), _)| (self.parts[i].len() * self.parts[j].len()) as u64)
                    .sum();
                (c, used)
            })
            .collect()
    }

    pub fn smallest_part(&self) -> usize {
        (0..self.parts.len()).min_by_key(|&i| self.parts[i].len()).unwrap()
    }
}

impl fmt::Display for GallaiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base: Vec<String> = self.base_colours.iter().map(u32::to_string).collect();
        write!(f, "PARTITION base={}", base.join(","))?;
        for part in &self.parts {
            let p: Vec<String> = part.iter().map(usize::to_string).collect();
            write!(f, " part={}", p.join(","))?;
        }
        Ok(())
    }
}

/// Finds a Gallai partition, preferring one whose base colours are each used
/// on at least `n - 1` inter-part edges.
///
/// Base sets are tried as single colours, then pairs. For a base set `B`
/// the components of the graph of non-`B` edges must each sit inside one
/// part; pairs of components joined by more than one colour are merged
/// until every pair is monochromatic. The merge is forced, so this yields
/// the finest partition for `B` whenever one exists.
pub fn find_gallai_partition(col: &Colouring) -> Result<GallaiPartition, PartitionFailure> {
    assert!(col.n() >= 2, "a Gallai partition needs at least two vertices");
    if let Some(t) = find_rainbow_triangle(col) {
        return Err(PartitionFailure::NotGallai(t));
    }
    let present: Vec<u32> = col
        .colour_counts()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, _)| i as u32 + 1)
        .collect();
    let singles = present.iter().map(|&c| vec![c]);
    let doubles = present
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| present[i + 1..].iter().map(move |&b| vec![a, b]));

    let mut fallback = None;
    for base in singles.chain(doubles) {
        let Some(partition) = finest_for_base(col, &base) else {
            continue;
        };
        if partition.base_colours_dense {
            return Ok(partition);
        }
        if let Some(coarse) = two_group_coarsening(col, &partition) {
            return Ok(coarse);
        }
        fallback.get_or_insert(partition);
    }
    fallback.ok_or(PartitionFailure::NotFound)
}

fn finest_for_base(col: &Colouring, base: &[u32]) -> Option<GallaiPartition> {
    let n = col.n();
    let mut dsu = Dsu::new(n);
    for (u, v, c) in col.edges() {
        if !base.contains(&c) {
            dsu.union(u - 1, v - 1);
        }
    }
    if dsu.sets() < 2 {
        return None;
    }
    loop {
        let mut seen: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let mut merged = false;
        for (u, v, c) in col.edges() {
            let (a, b) = (dsu.find(u - 1), dsu.find(v - 1));
            if a == b {
                continue;
            }
            let key = (a.min(b), a.max(b));
            match seen.get(&key) {
                None => {
                    seen.insert(key, c);
                }
                Some(&prev) if prev != c => {
                    dsu.union(a, b);
                    merged = true;
                    break;
                }
                _ => {}
            }
        }
        if dsu.sets() < 2 {
            return None;
        }
        if !merged {
            break;
        }
    }
    let parts: Vec<Vec<usize>> = dsu
        .groups()
        .into_iter()
        .map(|g| g.into_iter().map(|x| x + 1).collect())
        .collect();
    Some(assemble(col, parts))
}

/// Records between-part colours and the base set actually used.
fn assemble(col: &Colouring, parts: Vec<Vec<usize>>) -> GallaiPartition {
    let mut between = BTreeMap::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            between.insert((i, j), col.colour(parts[i][0], parts[j][0]));
        }
    }
    let mut base_colours: Vec<u32> = between.values().copied().collect();
    base_colours.sort_unstable();
    base_colours.dedup();
    let mut partition = GallaiPartition {
        base_colours,
        parts,
        between,
        base_colours_dense: false,
    };
    let need = col.n() as u64 - 1;
    partition.base_colours_dense = partition.base_usage().iter().all(|&(_, used)| used >= need);
    partition
}

/// If the parts joined by one base colour fall apart into several groups,
/// the other base colour alone separates one group from the rest.
fn two_group_coarsening(col: &Colouring, p: &GallaiPartition) -> Option<GallaiPartition> {
    for &colour in &p.base_colours {
        let mut dsu = Dsu::new(p.parts.len());
        for (&(i, j), &c) in &p.between {
            if c == colour {
                dsu.union(i, j);
            }
        }
        if dsu.sets() < 2 {
            continue;
        }
        let groups = dsu.groups();
        let mut first: Vec<usize> = groups[0].iter().flat_map(|&i| p.parts[i].iter().copied()).collect();
        let mut rest: Vec<usize> = groups[1..]
            .iter()
            .flatten()
            .flat_map(|&i| p.parts[i].iter().copied())
            .collect();
        first.sort_unstable();
        rest.sort_unstable();
        let mut parts = vec![first, rest];
        parts.sort_by_key(|part| part[0]);
        return Some(assemble(col, parts));
    }
    None
}
