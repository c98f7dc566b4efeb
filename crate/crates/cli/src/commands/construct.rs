use gallai::bounds::clash_bound_check;
use gallai::constructor::{construct, ConstructOptions};
use gallai::oracle::{is_realizable, Realizability};

use crate::input;
use crate::outcome::{Failure, Outcome};
use crate::ConstructArgs;

use super::emit;

/// Sequences this small go to the exhaustive oracle when every
/// construction fails.
const ORACLE_MAX_N: usize = 8;

pub fn run(args: &ConstructArgs) -> Outcome {
    let h = input::target(&args.target)?;
    let seq = input::sequence(&args.seq, args.n, args.k)?;
    let options = ConstructOptions {
        node_budget: args.budget,
        ..ConstructOptions::default()
    };
    let failure = match construct(&h, &seq, args.strategy, &options) {
        Ok(c) => {
            for note in &c.notes {
                eprintln!("note: {note}");
            }
            eprintln!("constructed by {}", c.strategy);
            if let Some(path) = &args.cert {
                input::write_file(path, &c.certificate.to_string())?;
            }
            return emit(args.out.as_deref(), &c.colouring.to_string());
        }
        Err(f) => f,
    };
    for reason in &failure.reasons {
        eprintln!("note: {reason}");
    }
    if let Some((_, emb)) = &failure.witness {
        eprintln!("note: a tried colouring contains {emb}");
    }

    let m = h.vertex_count();
    let certificate = failure
        .infeasibility
        .clone()
        .or_else(|| (m >= 3).then(|| clash_bound_check(&seq, m)).flatten());
    if let Some(cert) = certificate {
        if let Some(path) = &args.cert {
            input::write_file(path, &cert.to_string())?;
        }
        return Err(Failure::Negative(format!(
            "proven infeasible: {} ({})",
            cert.kind.token(),
            cert.inequality()
        )));
    }

    if seq.n() <= ORACLE_MAX_N {
        match is_realizable(&seq, &h) {
            Realizability::Realizable(col) => {
                eprintln!("constructed by exhaustive search; no certificate");
                return emit(args.out.as_deref(), &col.to_string());
            }
            Realizability::Unrealizable => {
                return Err(Failure::Negative(
                    "proven infeasible: exhaustive search found no colouring".into(),
                ));
            }
            Realizability::Inconclusive => {}
        }
    }
    Err(Failure::Inconclusive(
        "no construction found and no infeasibility proof".into(),
    ))
}
