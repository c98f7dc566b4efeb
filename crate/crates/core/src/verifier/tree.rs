use crate::colouring::Colouring;
use crate::graph::TargetGraph;

use super::{find_rainbow_subgraph, Embedding, SearchOutcome};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("target is not a tree")]
    NotATree,
}

/// Outcome of [`find_rainbow_tree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSearch {
    pub outcome: SearchOutcome<Embedding>,
    /// The greedy leaf-by-leaf embedding failed and the exhaustive search
    /// produced `outcome`.
    pub used_fallback: bool,
}

/// Rainbow copy of the tree `h` by leaf peeling.
///
/// A leaf is removed, the smaller tree is embedded among the vertices of
/// high colour degree (at least `2m + 1` colours, falling back to all
/// vertices when fewer than `m` qualify), and the leaf is reattached through
/// an edge whose colour is new. If every colour appears on at most
/// `C(n, 2) / (6m)^{6m}` edges this always succeeds. When the greedy pass
/// fails the exhaustive search takes over with `budget` nodes.
pub fn find_rainbow_tree(col: &Colouring, h: &TargetGraph, budget: u64) -> Result<TreeSearch, TreeError> {
    if !h.is_tree() {
        return Err(TreeError::NotATree);
    }
    if h.vertex_count() > col.n() {
        return Ok(TreeSearch {
            outcome: SearchOutcome::Absent,
            used_fallback: false,
        });
    }
    let order = leaf_order(h);
    let pool: Vec<usize> = (1..=col.n()).collect();
    if let Some(images) = embed(col, h, &order, &pool) {
        let mut by_vertex = vec![0; h.vertex_count()];
        for (&v, &x) in order.iter().zip(&images) {
            by_vertex[v - 1] = x;
        }
        return Ok(TreeSearch {
            outcome: SearchOutcome::Found(Embedding::new(by_vertex)),
            used_fallback: false,
        });
    }
    Ok(TreeSearch {
        outcome: find_rainbow_subgraph(col, h, budget),
        used_fallback: true,
    })
}

/// Vertices in re-insertion order: `order[0]` is the core vertex, and each
/// later vertex is a leaf of the subtree spanned by `order[..=i]`.
fn leaf_order(h: &TargetGraph) -> Vec<usize> {
    let m = h.vertex_count();
    let mut deg: Vec<usize> = (1..=m).map(|v| h.degree(v)).collect();
    let mut removed = vec![false; m + 1];
    let mut removal = Vec::with_capacity(m);
    for _ in 1..m {
        // largest-index leaf first
        let leaf = (1..=m)
            .rev()
            .find(|&v| !removed[v] && deg[v - 1] <= 1)
            .expect("trees have leaves");
        removed[leaf] = true;
        removal.push(leaf);
        for &w in h.neighbours(leaf) {
            if !removed[w] {
                deg[w - 1] -= 1;
            }
        }
    }
    let last = (1..=m).find(|&v| !removed[v]).unwrap();
    removal.push(last);
    removal.reverse();
    removal
}

/// Embeds the subtree on `order[..len]` inside `pool`; images parallel `order`.
fn embed(col: &Colouring, h: &TargetGraph, order: &[usize], pool: &[usize]) -> Option<Vec<usize>> {
    let m = order.len();
    if m == 1 {
        return pool.first().map(|&x| vec![x]);
    }
    let leaf = order[m - 1];
    let inner = &order[..m - 1];
    let anchor = *h
        .neighbours(leaf)
        .iter()
        .find(|w| inner.contains(w))
        .expect("leaf attaches to the subtree");

    let rich: Vec<usize> = pool
        .iter()
        .copied()
        .filter(|&v| colour_degree_within(col, v, pool) > 2 * m)
        .collect();
    let sub_pool = if rich.len() >= m { rich } else { pool.to_vec() };
    let mut images = embed(col, h, inner, &sub_pool)?;

    let mut used: Vec<u32> = Vec::with_capacity(m);
    for (i, &v) in inner.iter().enumerate() {
        for &w in h.neighbours(v) {
            if let Some(j) = inner.iter().position(|&x| x == w) {
                if i < j {
                    used.push(col.colour(images[i], images[j]));
                }
            }
        }
    }
    let anchor_image = images[inner.iter().position(|&x| x == anchor).unwrap()];
    let leaf_image = pool
        .iter()
        .copied()
        .find(|x| !images.contains(x) && !used.contains(&col.colour(anchor_image, *x)))?;
    images.push(leaf_image);
    Some(images)
}

fn colour_degree_within(col: &Colouring, v: usize, pool: &[usize]) -> usize {
    let mut seen = vec![false; col.k() + 1];
    let mut count = 0;
    for &w in pool {
        if w != v {
            let c = col.colour(v, w) as usize;
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
    }
    count
}
