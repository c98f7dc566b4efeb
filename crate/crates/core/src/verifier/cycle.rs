use crate::colouring::Colouring;

use super::Embedding;

/// Lexicographically least rainbow cycle of length `3..=max_len`, returned
/// as its vertex sequence starting from the smallest vertex.
///
/// Exhaustive over rainbow paths, so only meant for small `n` (about 12).
pub fn find_rainbow_cycle(col: &Colouring, max_len: usize) -> Option<Embedding> {
    let n = col.n();
    let max_len = max_len.min(n);
    if max_len < 3 {
        return None;
    }
    let mut walk = Walk {
        col,
        max_len,
        path: Vec::with_capacity(max_len),
        on_path: vec![false; n + 1],
        used: vec![false; col.k() + 1],
    };
    for start in 1..=n {
        walk.path.push(start);
        walk.on_path[start] = true;
        if walk.extend() {
            return Some(Embedding::new(walk.path));
        }
        walk.on_path[start] = false;
        walk.path.pop();
    }
    None
}

struct Walk<'a> {
    col: &'a Colouring,
    max_len: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    used: Vec<bool>,
}

impl Walk<'_> {
    fn extend(&mut self) -> bool {
        let start = self.path[0];
        let last = *self.path.last().unwrap();
        if self.path.len() >= 3 {
            // each cycle is reported once: second vertex below the last one
            let closing = self.col.colour(last, start) as usize;
            if self.path[1] < last && !self.used[closing] {
                return true;
            }
        }
        if self.path.len() == self.max_len {
            return false;
        }
        for next in start + 1..=self.col.n() {
            if self.on_path[next] {
                continue;
            }
            let c = self.col.colour(last, next) as usize;
            if self.used[c] {
                continue;
            }
            self.used[c] = true;
            self.on_path[next] = true;
            self.path.push(next);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.on_path[next] = false;
            self.used[c] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let tri = Colouring::from_edge_colours(3, 3, vec![1, 2, 3]).unwrap();
        assert_eq!(find_rainbow_cycle(&tri, 3), Some(Embedding::new(vec![1, 2, 3])));
        let two = Colouring::from_fn(5, 2, |u, v| ((u + v) % 2 + 1) as u32).unwrap();
        assert_eq!(find_rainbow_cycle(&two, 5), None);
    }

    #[test]
    fn finds_long_cycles_only_when_allowed() {
        // C4 on 1-2-3-4 in colours 1..4, every other edge colour 1
        let col = Colouring::from_fn(4, 4, |u, v| match (u, v) {
            (1, 2) => 1,
            (2, 3) => 2,
            (3, 4) => 3,
            (1, 4) => 4,
            _ => 1,
        })
        .unwrap();
        // triangles: 1-2-3 has 1,2,1; 1-3-4 has 1,3,4 -> rainbow
        assert_eq!(find_rainbow_cycle(&col, 3), Some(Embedding::new(vec![1, 3, 4])));
        let col = Colouring::from_fn(4, 5, |u, v| match (u, v) {
            (1, 2) => 1,
            (2, 3) => 2,
            (3, 4) => 3,
            (1, 4) => 4,
            _ => 5,
        })
        .unwrap();
        assert_eq!(find_rainbow_cycle(&col, 3), Some(Embedding::new(vec![1, 2, 3])));
    }

    #[test]
    fn two_colours_never_rainbow() {
        for n in 3..8 {
            let col = Colouring::from_fn(n, 2, |u, v| ((u * 3 + v * 5) % 2 + 1) as u32).unwrap();
            assert_eq!(find_rainbow_cycle(&col, n), None);
        }
    }
}
