use gallai::bounds::sample_rainbow_km;
use gallai::constructor::{PeelCertificate, SplitCertificate};
use gallai::verifier::{verify_certificate, verify_peel_certificate, SearchOutcome};
use gallai::{Colouring, DistributionSequence};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::input;
use crate::outcome::{usage, Failure, Outcome};
use crate::VerifyArgs;

use super::rainbow_search;

/// What a replayed certificate proves about rainbow subgraphs.
enum Proof {
    None,
    /// A standard colouring: no rainbow cycle.
    NoRainbowCycle,
    /// No rainbow subgraph of minimum degree three.
    NoRainbowThreeCore,
}

pub fn run(args: &VerifyArgs, seed: u64) -> Outcome {
    let col: Colouring = input::parse_file(&args.colouring)?;
    let h = input::target(&args.target)?;
    let seq = match &args.seq {
        Some(spec) => input::sequence(spec, col.n(), Some(col.k()))?,
        None => DistributionSequence::new(col.n(), col.colour_counts()).map_err(usage)?,
    };

    if seq.k() != col.k() {
        return Err(Failure::Negative(format!(
            "colouring has {} colours, the sequence {}",
            col.k(),
            seq.k()
        )));
    }
    let counts = col.colour_counts();
    if counts != seq.counts() {
        let (i, (found, expected)) = counts
            .iter()
            .zip(seq.counts())
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .unwrap();
        return Err(Failure::Negative(format!(
            "colour {} is used {found} times, the sequence asks for {expected}",
            i + 1
        )));
    }

    let proof = match &args.cert {
        Some(path) => replay(&input::read_file(path)?, &col, &seq)?,
        None => Proof::None,
    };

    let m = h.vertex_count();
    let degeneracy = h.degeneracy();
    match proof {
        Proof::NoRainbowCycle if degeneracy >= 2 => {
            println!("OK n={} k={}: certificate replayed, no rainbow cycle", col.n(), col.k());
            return Ok(());
        }
        Proof::NoRainbowThreeCore if degeneracy >= 3 => {
            println!(
                "OK n={} k={}: certificate replayed, no rainbow subgraph of minimum degree 3",
                col.n(),
                col.k()
            );
            return Ok(());
        }
        _ => {}
    }

    let complete = h.edge_count() == m * (m.saturating_sub(1)) / 2;
    if args.samples > 0 && complete && m >= 2 && m <= col.n() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(emb) = sample_rainbow_km(&col, m, args.samples, &mut rng) {
            println!("{emb}");
            return Err(Failure::Negative("rainbow copy of the target".into()));
        }
    }
    match rainbow_search(&col, &h, args.budget) {
        SearchOutcome::Absent => {
            println!("OK n={} k={}: no rainbow copy of the target", col.n(), col.k());
            Ok(())
        }
        SearchOutcome::Found(emb) => {
            println!("{emb}");
            Err(Failure::Negative("rainbow copy of the target".into()))
        }
        SearchOutcome::Inconclusive => Err(Failure::Inconclusive(format!(
            "rainbow search ran out of {} nodes",
            args.budget
        ))),
    }
}

fn replay(text: &str, col: &Colouring, seq: &DistributionSequence) -> Result<Proof, Failure> {
    let peel = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("peel"));
    if peel {
        let cert: PeelCertificate = text.parse().map_err(|e| usage(format!("peel certificate: {e}")))?;
        verify_peel_certificate(&cert, col).map_err(|e| Failure::Negative(format!("certificate: {e}")))?;
        return Ok(Proof::NoRainbowThreeCore);
    }
    let cert: SplitCertificate = text.parse().map_err(|e| usage(format!("certificate: {e}")))?;
    let report = verify_certificate(&cert, col, seq).map_err(|e| Failure::Negative(format!("certificate: {e}")))?;
    match report.failure {
        None => Ok(Proof::NoRainbowCycle),
        Some(f) => Err(Failure::Negative(format!("certificate: {f}"))),
    }
}
