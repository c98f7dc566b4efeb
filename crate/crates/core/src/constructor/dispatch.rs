use std::fmt;
use std::str::FromStr;

use crate::bounds::{tree_forced_check, InfeasibilityCertificate};
use crate::colouring::Colouring;
use crate::graph::TargetGraph;
use crate::sequence::DistributionSequence;
use crate::verifier::{find_rainbow_subgraph, find_rainbow_tree, Embedding, SearchOutcome};

use super::constants::StageConstants;
use super::greedy::{construct_greedy, GreedyOutcome, DEFAULT_NODE_BUDGET};
use super::mindeg3::{construct_mindeg3, PeelCertificate};
use super::staged::construct_staged;
use super::state::SplitCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Staged,
    Greedy,
    Mindeg3,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "staged" => Ok(Strategy::Staged),
            "greedy" => Ok(Strategy::Greedy),
            "mindeg3" => Ok(Strategy::Mindeg3),
            other => Err(format!("unknown strategy {other:?} (auto, staged, greedy, mindeg3)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Staged => "staged",
            Strategy::Greedy => "greedy",
            Strategy::Mindeg3 => "mindeg3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionCertificate {
    Split(SplitCertificate),
    Peel(PeelCertificate),
}

impl fmt::Display for ConstructionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionCertificate::Split(c) => c.fmt(f),
            ConstructionCertificate::Peel(c) => c.fmt(f),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub colouring: Colouring,
    pub certificate: ConstructionCertificate,
    /// The strategy that produced the colouring.
    pub strategy: Strategy,
    /// Earlier attempts that failed, in order.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct NotConstructed {
    /// Why each attempted route failed, in order.
    pub reasons: Vec<String>,
    /// A rainbow copy of the target in a colouring that was tried.
    pub witness: Option<(Colouring, Embedding)>,
    /// Every colouring with the sequence contains a rainbow copy of `H`.
    pub infeasibility: Option<InfeasibilityCertificate>,
    /// The greedy search exhausted all standard colourings.
    pub no_standard_colouring: bool,
}

impl fmt::Display for NotConstructed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no construction: {}", self.reasons.join("; "))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ConstructOptions {
    pub constants: StageConstants,
    pub node_budget: u64,
    /// Node budget for the rainbow copy search used on forest targets.
    pub search_budget: u64,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        Self {
            constants: StageConstants::default(),
            node_budget: DEFAULT_NODE_BUDGET,
            search_budget: 10_000_000,
        }
    }
}

/// Builds a rainbow-`H`-free colouring of `K_n` with distribution `seq`.
///
/// The route follows the degeneracy of `H`:
///
/// - at least 3: the peeling construction when `n >= 2k` (counting nonzero
///   colours), else a standard colouring;
/// - 2: the staged standard colouring, falling back to the greedy search.
///   Standard colourings have no rainbow cycle, and `H` has a cycle;
/// - at most 1: if every colour is rare enough that a rainbow copy of each
///   `|V(H)|`-vertex tree is forced, an infeasibility certificate is
///   returned. Otherwise a standard colouring is tried and searched
///   explicitly for a rainbow `H`.
pub fn construct(
    h: &TargetGraph,
    seq: &DistributionSequence,
    strategy: Strategy,
    options: &ConstructOptions,
) -> Result<Construction, NotConstructed> {
    let mut failure = NotConstructed {
        reasons: Vec::new(),
        witness: None,
        infeasibility: None,
        no_standard_colouring: false,
    };
    if let Err(e) = seq.require_n_good() {
        failure.reasons.push(e.to_string());
        return Err(failure);
    }
    let degeneracy = h.degeneracy();
    let forest = degeneracy <= 1;
    let mut notes = Vec::new();

    if forest && h.vertex_count() >= 2 {
        if let Some(cert) = tree_forced_check(seq, h.vertex_count()) {
            failure.reasons.push(format!(
                "every colour is used at most C(n,2)/D({}) times, forcing a rainbow copy of every tree on {} vertices",
                h.vertex_count(),
                h.vertex_count()
            ));
            failure.infeasibility = Some(cert);
            return Err(failure);
        }
    }

    let mut attempts: Vec<Strategy> = match strategy {
        Strategy::Auto if degeneracy >= 3 => vec![Strategy::Mindeg3, Strategy::Greedy],
        Strategy::Auto => vec![Strategy::Staged, Strategy::Greedy],
        s => vec![s],
    };
    if strategy == Strategy::Mindeg3 && degeneracy < 3 {
        failure
            .reasons
            .push(format!("mindeg3 needs a target of degeneracy >= 3, found {degeneracy}"));
        attempts.clear();
    }

    for attempt in attempts {
        let built = match attempt {
            Strategy::Mindeg3 => construct_mindeg3(seq)
                .map(|(col, cert)| (col, ConstructionCertificate::Peel(cert)))
                .map_err(|e| format!("mindeg3: {e}")),
            Strategy::Staged => construct_staged(seq, &options.constants)
                .map_err(|e| format!("staged: {e}"))
                .and_then(|cert| split_result(cert, "staged")),
            Strategy::Greedy => match construct_greedy(seq, options.node_budget) {
                GreedyOutcome::Certificate(cert) => split_result(cert, "greedy"),
                GreedyOutcome::Infeasible => {
                    failure.no_standard_colouring = true;
                    Err("greedy: no standard colouring has this distribution".to_string())
                }
                GreedyOutcome::GiveUp { nodes } => Err(format!("greedy: gave up after {nodes} nodes")),
            },
            Strategy::Auto => unreachable!("auto expands to concrete strategies"),
        };
        let (colouring, certificate) = match built {
            Ok(b) => b,
            Err(reason) => {
                notes.push(reason.clone());
                failure.reasons.push(reason);
                continue;
            }
        };
        if forest {
            let outcome = if h.is_tree() {
                find_rainbow_tree(&colouring, h, options.search_budget)
                    .expect("checked to be a tree")
                    .outcome
            } else {
                find_rainbow_subgraph(&colouring, h, options.search_budget)
            };
            match outcome {
                SearchOutcome::Absent => {}
                SearchOutcome::Found(emb) => {
                    let reason = format!("{attempt}: colouring contains a rainbow copy ({emb})");
                    notes.push(reason.clone());
                    failure.reasons.push(reason);
                    failure.witness = Some((colouring, emb));
                    continue;
                }
                SearchOutcome::Inconclusive => {
                    let reason = format!("{attempt}: rainbow search inconclusive");
                    notes.push(reason.clone());
                    failure.reasons.push(reason);
                    continue;
                }
            }
        }
        return Ok(Construction {
            colouring,
            certificate,
            strategy: attempt,
            notes,
        });
    }

    if forest && failure.witness.is_none() && h.vertex_count() <= seq.n() {
        // show what goes wrong on the simplest colouring with this sequence
        let col = sequential_colouring(seq);
        if let SearchOutcome::Found(emb) = find_rainbow_subgraph(&col, h, options.search_budget) {
            failure.witness = Some((col, emb));
        }
    }
    Err(failure)
}

fn split_result(cert: SplitCertificate, name: &str) -> Result<(Colouring, ConstructionCertificate), String> {
    let col = cert
        .realize()
        .map_err(|e| format!("{name}: certificate does not replay: {e}"))?;
    Ok((col, ConstructionCertificate::Split(cert)))
}

/// Colours edges in lexicographic order: the first `e_1` get colour 1 and
/// so on.
pub fn sequential_colouring(seq: &DistributionSequence) -> Colouring {
    let mut colours = Vec::with_capacity(seq.total() as usize);
    for (i, &e) in seq.counts().iter().enumerate() {
        colours.extend(std::iter::repeat_n(i as u32 + 1, e as usize));
    }
    Colouring::from_edge_colours(seq.n(), seq.k(), colours).expect("n-good sequence fills every edge")
}
