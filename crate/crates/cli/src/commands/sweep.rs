use std::fmt::Write as _;

use gallai::constructor::{construct, ConstructOptions, ConstructionCertificate, Strategy};
use gallai::verifier::{verify_certificate, verify_peel_certificate, SearchOutcome};
use gallai::{pairs, DistributionSequence, TargetGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input;
use crate::outcome::{usage, Failure, Outcome};
use crate::SweepArgs;

use super::{emit, rainbow_search};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Run {
    Verified,
    Infeasible,
    NotBuilt,
    /// The rainbow search ran out of nodes.
    Unchecked,
    /// The construction succeeded but its colouring failed a check.
    Broken,
}

pub fn run(args: &SweepArgs, seed: u64, jobs: usize) -> Outcome {
    let h = input::target(&args.target)?;
    if args.k == 0 || args.n_min > args.n_max {
        return Err(usage("need --k >= 1 and --n-min <= --n-max"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = Vec::new();
    for n in args.n_min.max(2)..=args.n_max {
        for _ in 0..args.samples {
            work.push(random_sequence(n, args.k, &mut rng));
        }
    }

    let jobs = jobs.max(1).min(work.len().max(1));
    let chunk = work.len().div_ceil(jobs).max(1);
    let results: Vec<(Run, String)> = std::thread::scope(|scope| {
        let handles: Vec<_> = work
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(|seq| attempt(seq, &h, args.budget)).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });

    let mut out = String::new();
    let mut tally = [0usize; 5];
    for (seq, (result, detail)) in work.iter().zip(&results) {
        tally[*result as usize] += 1;
        let counts: Vec<String> = seq.counts().iter().map(u64::to_string).collect();
        writeln!(out, "{} {} {detail}", seq.n(), counts.join(" ")).unwrap();
    }
    writeln!(
        out,
        "# {} sequences: {} verified, {} infeasible, {} not built, {} unchecked, {} broken",
        work.len(),
        tally[Run::Verified as usize],
        tally[Run::Infeasible as usize],
        tally[Run::NotBuilt as usize],
        tally[Run::Unchecked as usize],
        tally[Run::Broken as usize],
    )
    .unwrap();
    emit(args.out.as_deref(), &out)?;
    if tally[Run::Broken as usize] > 0 {
        return Err(Failure::Negative(format!(
            "{} constructed colourings failed verification",
            tally[Run::Broken as usize]
        )));
    }
    Ok(())
}

/// A uniform composition of `C(n,2)` into `k` parts, zeros allowed.
fn random_sequence(n: usize, k: usize, rng: &mut ChaCha8Rng) -> DistributionSequence {
    let total = pairs(n as u64);
    let mut cuts: Vec<u64> = (1..k).map(|_| rng.gen_range(0..=total)).collect();
    cuts.push(0);
    cuts.push(total);
    cuts.sort_unstable();
    let counts = cuts.windows(2).map(|w| w[1] - w[0]).collect();
    DistributionSequence::good(n, counts).expect("parts sum to C(n,2)")
}

fn attempt(seq: &DistributionSequence, h: &TargetGraph, budget: u64) -> (Run, String) {
    let options = ConstructOptions {
        node_budget: budget,
        search_budget: budget,
        ..ConstructOptions::default()
    };
    let built = match construct(h, seq, Strategy::Auto, &options) {
        Ok(c) => c,
        Err(e) => {
            return match e.infeasibility {
                Some(cert) => (Run::Infeasible, format!("INFEASIBLE {}", cert.kind.token())),
                None => (Run::NotBuilt, "NOT_BUILT".into()),
            };
        }
    };
    let col = &built.colouring;
    if col.colour_counts() != seq.counts() {
        return (Run::Broken, format!("BROKEN {} counts", built.strategy));
    }
    let replay = match &built.certificate {
        ConstructionCertificate::Split(c) => match verify_certificate(c, col, seq) {
            Ok(r) => r.failure.map(|f| f.to_string()),
            Err(e) => Some(e.to_string()),
        },
        ConstructionCertificate::Peel(c) => verify_peel_certificate(c, col).err().map(|e| e.to_string()),
    };
    if let Some(why) = replay {
        return (Run::Broken, format!("BROKEN {} certificate: {why}", built.strategy));
    }
    let proven = match built.certificate {
        ConstructionCertificate::Split(_) => h.degeneracy() >= 2,
        ConstructionCertificate::Peel(_) => h.degeneracy() >= 3,
    };
    if proven {
        return (Run::Verified, format!("OK {} certificate", built.strategy));
    }
    match rainbow_search(col, h, budget) {
        SearchOutcome::Found(emb) => (Run::Broken, format!("BROKEN {} {emb}", built.strategy)),
        SearchOutcome::Absent => (Run::Verified, format!("OK {} search", built.strategy)),
        SearchOutcome::Inconclusive => (Run::Unchecked, format!("UNCHECKED {}", built.strategy)),
    }
}
