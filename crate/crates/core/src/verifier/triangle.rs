use crate::colouring::{edge_index, Colouring};

use super::Embedding;

/// Lexicographically least rainbow triangle `(u, v, w)`, `u < v < w`, or
/// `None` for a Gallai colouring.
pub fn find_rainbow_triangle(col: &Colouring) -> Option<Embedding> {
    let n = col.n();
    let raw = col.raw();
    // Row `u` holds the colours of (u, u+1..n); indexing by offset keeps the
    // inner loop on two contiguous slices.
    for u in 0..n {
        let row_u = &raw[edge_index_row(n, u)..edge_index_row(n, u) + (n - u - 1)];
        for v in u + 1..n {
            let cuv = row_u[v - u - 1];
            let row_v_start = edge_index_row(n, v);
            for w in v + 1..n {
                let cuw = row_u[w - u - 1];
                if cuw == cuv {
                    continue;
                }
                let cvw = raw[row_v_start + (w - v - 1)];
                if cvw != cuv && cvw != cuw {
                    return Some(Embedding::new(vec![u + 1, v + 1, w + 1]));
                }
            }
        }
    }
    None
}

fn edge_index_row(n: usize, u: usize) -> usize {
    if u + 1 < n {
        edge_index(n, u, u + 1)
    } else {
        0
    }
}

/// Reference implementation: enumerate every triple through the public
/// accessor and keep the first rainbow one.
pub fn find_rainbow_triangle_naive(col: &Colouring) -> Option<Embedding> {
    let n = col.n();
    (1..=n)
        .flat_map(|u| (u + 1..=n).flat_map(move |v| (v + 1..=n).map(move |w| (u, v, w))))
        .find(|&(u, v, w)| {
            let (a, b, c) = (col.colour(u, v), col.colour(u, w), col.colour(v, w));
            a != b && a != c && b != c
        })
        .map(|(u, v, w)| Embedding::new(vec![u, v, w]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let tri = Colouring::from_edge_colours(3, 3, vec![1, 2, 3]).unwrap();
        assert_eq!(find_rainbow_triangle(&tri), Some(Embedding::new(vec![1, 2, 3])));
        assert_eq!(find_rainbow_triangle(&Colouring::monochromatic(5, 1, 1)), None);
        // {1,2} coloured 2, {3,4} coloured 3, crossing edges 1
        let k4 = Colouring::from_fn(4, 3, |u, v| match (u, v) {
            (1, 2) => 2,
            (3, 4) => 3,
            _ => 1,
        })
        .unwrap();
        assert_eq!(find_rainbow_triangle(&k4), None);
        assert_eq!(find_rainbow_triangle(&Colouring::monochromatic(1, 1, 1)), None);
        assert_eq!(find_rainbow_triangle(&Colouring::monochromatic(2, 1, 1)), None);
    }

    #[test]
    fn agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300 {
            let n = rng.gen_range(1..=50);
            let k = rng.gen_range(1..=4);
            // sparse third colours keep many instances Gallai
            let col = Colouring::from_fn(n, k, |_, _| {
                if rng.gen_bool(0.9) {
                    1
                } else {
                    rng.gen_range(1..=k as u32)
                }
            })
            .unwrap();
            assert_eq!(
                find_rainbow_triangle(&col),
                find_rainbow_triangle_naive(&col),
                "trial {trial}"
            );
        }
    }
}
