use crate::colouring::{edge_index, Colouring};
use crate::graph::TargetGraph;
use crate::sequence::DistributionSequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realizability {
    /// A rainbow-`H`-free colouring with the sequence.
    Realizable(Colouring),
    Unrealizable,
    /// The node budget ran out before the search space was exhausted.
    Inconclusive,
}

impl Realizability {
    /// `None` when inconclusive.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Realizability::Realizable(_) => Some(true),
            Realizability::Unrealizable => Some(false),
            Realizability::Inconclusive => None,
        }
    }

    pub fn witness(&self) -> Option<&Colouring> {
        match self {
            Realizability::Realizable(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Colour assignments tried before giving up.
    pub node_budget: u64,
    /// Try only the first of several untouched colours with equal budgets.
    pub symmetry: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            node_budget: 20_000_000,
            symmetry: true,
        }
    }
}

/// Decides whether some colouring of `K_n` with distribution `seq` has no
/// rainbow copy of `h`, with the default options.
pub fn is_realizable(seq: &DistributionSequence, h: &TargetGraph) -> Realizability {
    is_realizable_with(seq, h, &OracleOptions::default())
}

/// Backtracking over the edges of `K_n` in lexicographic order. After each
/// assignment only copies of `h` through the new edge are looked for, since
/// every other copy among the coloured edges was ruled out earlier.
pub fn is_realizable_with(seq: &DistributionSequence, h: &TargetGraph, options: &OracleOptions) -> Realizability {
    realize(seq, h, options, true).0
}

/// The decision and the number of nodes it took.
pub(super) fn realize_counted(
    seq: &DistributionSequence,
    h: &TargetGraph,
    options: &OracleOptions,
) -> (Realizability, u64) {
    realize(seq, h, options, true)
}

fn realize(
    seq: &DistributionSequence,
    h: &TargetGraph,
    options: &OracleOptions,
    specialised: bool,
) -> (Realizability, u64) {
    let n = seq.n();
    if !seq.is_n_good() {
        return (Realizability::Unrealizable, 0);
    }
    if h.vertex_count() <= n && h.edge_count() == 0 {
        // an edgeless copy is rainbow in every colouring
        return (Realizability::Unrealizable, 0);
    }
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let budgets: Vec<u64> = seq.counts().to_vec();
    let k = budgets.len();
    let prev_same = (0..k)
        .map(|c| (0..c).rev().find(|&p| budgets[p] == budgets[c]))
        .collect();
    let kernel = if h.vertex_count() > n {
        Kernel::Never
    } else if specialised && *h == TargetGraph::complete(3) {
        Kernel::Triangle
    } else {
        Kernel::General(Anchored::new(h))
    };
    let mut search = Search {
        n,
        edges,
        colours: vec![0; n * n.saturating_sub(1) / 2],
        remaining: budgets.clone(),
        budgets,
        prev_same,
        kernel,
        symmetry: options.symmetry,
        nodes: 0,
        budget: options.node_budget,
    };
    let outcome = match search.assign(0) {
        Some(true) => {
            let col = Colouring::from_edge_colours(n, k, search.colours).expect("every edge coloured in range");
            Realizability::Realizable(col)
        }
        Some(false) => Realizability::Unrealizable,
        None => Realizability::Inconclusive,
    };
    (outcome, search.nodes)
}

enum Kernel {
    /// `h` has more vertices than `K_n`.
    Never,
    Triangle,
    General(Anchored),
}

/// For each oriented edge `(a, b)` of `h`: the order in which the other
/// vertices are placed, each with its already placed neighbours.
struct Anchored {
    m: usize,
    plans: Vec<Plan>,
}

struct Plan {
    a: usize,
    b: usize,
    order: Vec<(usize, Vec<usize>)>,
}

impl Anchored {
    fn new(h: &TargetGraph) -> Self {
        let m = h.vertex_count();
        let mut plans = Vec::new();
        for &(x, y) in h.edges() {
            for (a, b) in [(x - 1, y - 1), (y - 1, x - 1)] {
                let mut placed = vec![false; m];
                placed[a] = true;
                placed[b] = true;
                let mut order = Vec::new();
                for _ in 2..m {
                    // most constrained next: the vertex with most placed neighbours
                    let next = (0..m)
                        .filter(|&v| !placed[v])
                        .max_by_key(|&v| {
                            (
                                h.neighbours(v + 1).iter().filter(|&&w| placed[w - 1]).count(),
                                usize::MAX - v,
                            )
                        })
                        .expect("an unplaced vertex remains");
                    let back = h
                        .neighbours(next + 1)
                        .iter()
                        .map(|&w| w - 1)
                        .filter(|&w| placed[w])
                        .collect();
                    placed[next] = true;
                    order.push((next, back));
                }
                plans.push(Plan { a, b, order });
            }
        }
        Self { m, plans }
    }
}

struct Search {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// 0 while unassigned, else the 1-based colour.
    colours: Vec<u32>,
    budgets: Vec<u64>,
    remaining: Vec<u64>,
    /// The previous colour with the same budget.
    prev_same: Vec<Option<usize>>,
    kernel: Kernel,
    symmetry: bool,
    nodes: u64,
    budget: u64,
}

impl Search {
    /// `Some(true)` on a complete colouring, `None` out of budget.
    fn assign(&mut self, index: usize) -> Option<bool> {
        if index == self.edges.len() {
            return Some(true);
        }
        let (u, v) = self.edges[index];
        for c in 0..self.budgets.len() {
            if self.remaining[c] == 0 {
                continue;
            }
            if self.symmetry {
                if let Some(p) = self.prev_same[c] {
                    if self.remaining[p] == self.budgets[p] && self.remaining[c] == self.budgets[c] {
                        continue;
                    }
                }
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let colour = c as u32 + 1;
            self.colours[index] = colour;
            if !self.creates_rainbow(u, v, colour) {
                self.remaining[c] -= 1;
                let below = self.assign(index + 1);
                self.remaining[c] += 1;
                match below {
                    Some(false) => {}
                    done => return done,
                }
            }
            self.colours[index] = 0;
        }
        Some(false)
    }

    /// Colour of `{x, y}` if already assigned.
    fn colour(&self, x: usize, y: usize) -> u32 {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        self.colours[edge_index(self.n, x, y)]
    }

    fn creates_rainbow(&self, u: usize, v: usize, colour: u32) -> bool {
        match &self.kernel {
            Kernel::Never => false,
            Kernel::Triangle => (0..u).any(|w| {
                // for w > u the edge (w, v) comes later in the order
                let (a, b) = (self.colour(w, u), self.colour(w, v));
                a != b && a != colour && b != colour
            }),
            Kernel::General(anchored) => {
                let mut images = vec![usize::MAX; anchored.m];
                let mut used = vec![colour];
                let mut taken = vec![false; self.n];
                taken[u] = true;
                taken[v] = true;
                anchored.plans.iter().any(|plan| {
                    images[plan.a] = u;
                    images[plan.b] = v;
                    self.extend(plan, 0, &mut images, &mut used, &mut taken)
                })
            }
        }
    }

    fn extend(&self, plan: &Plan, depth: usize, images: &mut [usize], used: &mut Vec<u32>, taken: &mut [bool]) -> bool {
        let Some((vertex, back)) = plan.order.get(depth) else {
            return true;
        };
        for y in 0..self.n {
            if taken[y] {
                continue;
            }
            let mark = used.len();
            let fits = back.iter().all(|&w| {
                let c = self.colour(y, images[w]);
                if c == 0 || used.contains(&c) {
                    return false;
                }
                used.push(c);
                true
            });
            if fits {
                images[*vertex] = y;
                taken[y] = true;
                let found = self.extend(plan, depth + 1, images, used, taken);
                taken[y] = false;
                if found {
                    used.truncate(mark);
                    return true;
                }
            }
            used.truncate(mark);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{find_rainbow_subgraph, find_rainbow_triangle, SearchOutcome};

    fn seq(n: usize, e: &[u64]) -> DistributionSequence {
        DistributionSequence::good(n, e.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let k3 = TargetGraph::complete(3);
        assert_eq!(is_realizable(&seq(3, &[1, 1, 1]), &k3), Realizability::Unrealizable);
        let two = is_realizable(&seq(4, &[3, 3]), &k3);
        assert!(two.witness().unwrap().realizes(&seq(4, &[3, 3])));
        let r = is_realizable(&seq(5, &[4, 3, 3]), &k3);
        let w = r.witness().expect("(4,3,3) on K_5 is realizable");
        assert_eq!(w.colour_counts(), vec![4, 3, 3]);
        assert_eq!(find_rainbow_triangle(w), None);
    }

    #[test]
    fn triangle_kernel_matches_general() {
        let k3 = TargetGraph::complete(3);
        assert_eq!(Anchored::new(&k3).plans.len(), 6);
        for counts in [
            vec![4u64, 3, 3],
            vec![5, 5],
            vec![2, 2, 2, 2, 2],
            vec![6, 2, 2],
            vec![1; 10],
        ] {
            let s = seq(5, &counts);
            let fast = is_realizable(&s, &k3);
            let (general, _) = realize(&s, &k3, &OracleOptions::default(), false);
            assert_eq!(fast.decided(), general.decided(), "{counts:?}");
            if let Some(c) = general.witness() {
                assert_eq!(find_rainbow_triangle(c), None);
            }
        }
    }

    #[test]
    fn single_edge_target() {
        // any single edge is a rainbow K_2
        let k2 = TargetGraph::complete(2);
        assert_eq!(is_realizable(&seq(4, &[6, 0]), &k2), Realizability::Unrealizable);
        assert_eq!(is_realizable(&seq(4, &[5, 1]), &k2), Realizability::Unrealizable);
        assert!(is_realizable(&seq(1, &[0, 0]), &k2).witness().is_some());
    }

    #[test]
    fn target_larger_than_host() {
        let r = is_realizable(&seq(3, &[1, 1, 1]), &TargetGraph::complete(4));
        assert!(r.witness().is_some());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let opts = OracleOptions {
            node_budget: 3,
            symmetry: true,
        };
        let r = is_realizable_with(&seq(6, &[5, 5, 5]), &TargetGraph::complete(3), &opts);
        assert_eq!(r, Realizability::Inconclusive);
    }

    #[test]
    fn path_target_witness() {
        let p3 = TargetGraph::path(3);
        let s = seq(4, &[3, 3]);
        let r = is_realizable(&s, &p3);
        // a vertex seeing two colours is the middle of a rainbow path
        assert_eq!(r, Realizability::Unrealizable);
        let s = seq(4, &[6, 0]);
        let w = is_realizable(&s, &p3);
        assert_eq!(
            find_rainbow_subgraph(w.witness().unwrap(), &p3, u64::MAX),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn symmetry_pruning_is_sound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let targets = [TargetGraph::complete(3), TargetGraph::cycle(4), TargetGraph::path(3)];
        for _ in 0..50 {
            let n = rng.gen_range(3..=5);
            let k = rng.gen_range(1..=4);
            let mut counts = vec![0u64; k];
            for _ in 0..n * (n - 1) / 2 {
                counts[rng.gen_range(0..k)] += 1;
            }
            let s = seq(n, &counts);
            let h = &targets[rng.gen_range(0..targets.len())];
            let fast = is_realizable(&s, h).decided();
            let slow = is_realizable_with(
                &s,
                h,
                &OracleOptions {
                    symmetry: false,
                    ..OracleOptions::default()
                },
            )
            .decided();
            assert_eq!(fast, slow, "{counts:?}");
            assert!(fast.is_some());
        }
    }
}
