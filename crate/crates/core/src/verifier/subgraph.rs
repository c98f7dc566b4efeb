use crate::colouring::Colouring;
use crate::graph::TargetGraph;

use super::{Embedding, SearchOutcome};

/// Backtracking search for a rainbow copy of `h`.
///
/// Target vertices are placed in index order onto unused host vertices in
/// increasing order, so the first embedding found is the lexicographically
/// least one. Each placement checks the edges back to already placed
/// neighbours against the set of colours used so far. `budget` caps the
/// number of placements tried.
pub fn find_rainbow_subgraph(col: &Colouring, h: &TargetGraph, budget: u64) -> SearchOutcome<Embedding> {
    let m = h.vertex_count();
    if m > col.n() {
        return SearchOutcome::Absent;
    }
    // back_edges[i]: neighbours of target vertex i+1 with smaller index
    let back_edges: Vec<Vec<usize>> = (1..=m)
        .map(|v| h.neighbours(v).iter().copied().filter(|&w| w < v).collect())
        .collect();
    let mut search = Search {
        col,
        back_edges,
        images: Vec::with_capacity(m),
        used_vertex: vec![false; col.n() + 1],
        used_colour: vec![false; col.k() + 1],
        nodes: 0,
        budget,
    };
    match search.extend() {
        Some(true) => SearchOutcome::Found(Embedding::new(search.images)),
        Some(false) => SearchOutcome::Absent,
        None => SearchOutcome::Inconclusive,
    }
}

struct Search<'a> {
    col: &'a Colouring,
    back_edges: Vec<Vec<usize>>,
    images: Vec<usize>,
    used_vertex: Vec<bool>,
    used_colour: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn extend(&mut self) -> Option<bool> {
        let depth = self.images.len();
        if depth == self.back_edges.len() {
            return Some(true);
        }
        let mut fresh: Vec<u32> = Vec::with_capacity(self.back_edges[depth].len());
        for x in 1..=self.col.n() {
            if self.used_vertex[x] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            fresh.clear();
            let ok = self.back_edges[depth].iter().all(|&w| {
                let c = self.col.colour(self.images[w - 1], x);
                if self.used_colour[c as usize] || fresh.contains(&c) {
                    false
                } else {
                    fresh.push(c);
                    true
                }
            });
            if !ok {
                continue;
            }
            for &c in &fresh {
                self.used_colour[c as usize] = true;
            }
            self.used_vertex[x] = true;
            self.images.push(x);
            let saved = fresh.clone();
            match self.extend() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.images.pop();
            self.used_vertex[x] = false;
            for c in saved {
                self.used_colour[c as usize] = false;
            }
        }
        Some(false)
    }
}

/// Whether `emb` is an injective placement of `h` whose edges carry pairwise
/// distinct colours.
pub fn is_rainbow_embedding(col: &Colouring, h: &TargetGraph, emb: &Embedding) -> bool {
    let imgs = &emb.images;
    if imgs.len() != h.vertex_count() || imgs.iter().any(|&x| x == 0 || x > col.n()) {
        return false;
    }
    let mut sorted = imgs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != imgs.len() {
        return false;
    }
    let mut colours: Vec<u32> = h
        .edges()
        .iter()
        .map(|&(u, v)| col.colour(imgs[u - 1], imgs[v - 1]))
        .collect();
    colours.sort_unstable();
    colours.windows(2).all(|w| w[0] != w[1])
}
