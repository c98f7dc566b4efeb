use std::fmt::Write as _;

use gallai::bounds::{
    clash_bound_check, clash_margin, general_lower_sequence, peel_splitting_process, tree_forced_check,
    tree_forced_check_balanced, tree_threshold, triangle_hard_sequence, triangle_infeasibility_check,
    InfeasibilityCertificate, PeelError, PeelTrace, RangeError,
};
use gallai::constructor::StageConstants;
use gallai::{Colouring, DistributionSequence};

use crate::input;
use crate::outcome::{usage, Failure, Outcome};
use crate::{CertifyArgs, CertifyKind};

use super::emit;

pub fn run(args: &CertifyArgs) -> Outcome {
    match args.kind {
        CertifyKind::Triangle => triangle(args),
        CertifyKind::Clash => clash(args),
        CertifyKind::Tree => tree(args),
        CertifyKind::General => general(args),
        CertifyKind::Peel => peel(args),
    }
}

fn range(e: RangeError) -> Failure {
    Failure::Negative(format!("out of range: {e}"))
}

fn need<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("--kind {kind} needs {flag}")))
}

fn write_certificate(args: &CertifyArgs, cert: &InfeasibilityCertificate) -> Outcome {
    cert.reverify()
        .map_err(|e| Failure::Usage(format!("certificate does not reverify: {e}")))?;
    eprintln!("{} k={} n={}: {}", cert.kind.token(), cert.k, cert.n, cert.inequality());
    emit(args.out.as_deref(), &cert.to_string())
}

fn triangle(args: &CertifyArgs) -> Outcome {
    let k = need(args.k, "--k", "triangle")?;
    let mut constants = StageConstants::default();
    if let Some(alpha) = args.alpha {
        constants.alpha = alpha;
    }
    let hard = triangle_hard_sequence(k, &constants).map_err(range)?;
    if hard.b == 0 {
        return Err(Failure::Negative("b = floor(k/2) is 0".into()));
    }
    if let Some(condition) = hard.failed_side_condition() {
        return Err(Failure::Negative(format!(
            "side condition {condition} fails at k={k} n={} a={} b={}",
            hard.n, hard.a, hard.b
        )));
    }
    match triangle_infeasibility_check(k, &constants).map_err(range)? {
        Some(cert) => write_certificate(args, &cert),
        None => Err(Failure::Negative(format!(
            "margin b^2/3 - 4(a+1) ln(n/b) is not positive at k={k} n={} a={} b={}",
            hard.n, hard.a, hard.b
        ))),
    }
}

/// `--seq` against `--n`, with `--k` for `balanced`.
fn sequence(args: &CertifyArgs, kind: &str) -> Result<DistributionSequence, Failure> {
    let n = need(args.n, "--n", kind)?;
    let spec = args
        .seq
        .as_deref()
        .ok_or_else(|| usage(format!("--kind {kind} needs --seq")))?;
    input::sequence(spec, n as usize, args.k.map(|k| k as usize))
}

fn clash(args: &CertifyArgs) -> Outcome {
    let m = args.m.unwrap_or(3);
    if m < 3 {
        return Err(usage("the clash bound needs --m >= 3"));
    }
    let seq = sequence(args, "clash")?;
    if seq.n() < m {
        return Err(Failure::Negative(format!("n = {} < m = {m}", seq.n())));
    }
    match clash_bound_check(&seq, m) {
        Some(cert) => write_certificate(args, &cert),
        None => Err(Failure::Negative(format!(
            "n(n-1)(n-2)/(m(m-1)(m-2)) - sum C(e_i,2) = {} is not positive",
            clash_margin(&seq, m as u64)
        ))),
    }
}

fn tree(args: &CertifyArgs) -> Outcome {
    let m = need(args.m, "--m", "tree")?;
    if m < 2 {
        return Err(usage("the tree bound needs --m >= 2"));
    }
    let cert = if args.seq.as_deref() == Some("balanced") {
        // k may be far too large to build the sequence
        let n = need(args.n, "--n", "tree")?;
        let k = need(args.k, "--k", "tree")?;
        let total = (n as u128) * (n as u128).saturating_sub(1) / 2;
        if total > u64::MAX as u128 {
            return Err(usage(format!("C({n},2) does not fit in 64 bits")));
        }
        if k == 0 || n < 2 || total < k as u128 {
            return Err(usage(format!("balanced({n}, {k}) is not n-good")));
        }
        tree_forced_check_balanced(n, k, m)
    } else {
        tree_forced_check(&sequence(args, "tree")?, m)
    };
    match cert {
        Some(cert) => write_certificate(args, &cert),
        None => Err(Failure::Negative(format!(
            "max e_i exceeds C(n,2)/(6m)^(6m) with (6m)^(6m) = {} digits",
            tree_threshold(m as u32).to_string().len()
        ))),
    }
}

fn general(args: &CertifyArgs) -> Outcome {
    let spec = args
        .target
        .as_deref()
        .ok_or_else(|| usage("--kind general needs --target"))?;
    let h = input::target(spec)?;
    let k = need(args.k, "--k", "general")?;
    let (seq, m, cert) = general_lower_sequence(&h, k as usize).map_err(range)?;
    eprintln!(
        "every colouring of K_{} with balanced({}, {k}) has a rainbow K_{m}",
        seq.n(),
        seq.n()
    );
    write_certificate(args, &cert)
}

fn peel(args: &CertifyArgs) -> Outcome {
    let path = args
        .colouring
        .as_deref()
        .ok_or_else(|| usage("--kind peel needs --colouring"))?;
    let col: Colouring = input::parse_file(path)?;
    let trace = match peel_splitting_process(&col, args.stop) {
        Ok(t) => t,
        Err(PeelError::NotGallai(emb)) => {
            println!("{emb}");
            return Err(Failure::Negative("not a Gallai colouring".into()));
        }
        Err(e @ PeelError::HeuristicFailure { .. }) => return Err(Failure::Inconclusive(e.to_string())),
        Err(e @ PeelError::BadStop) => return Err(usage(e)),
    };
    trace
        .check()
        .map_err(|e| Failure::Usage(format!("trace check failed: {e}")))?;
    eprintln!(
        "{} peels from {} down to {} vertices",
        trace.steps.len(),
        trace.n,
        trace.final_size
    );
    emit(args.out.as_deref(), &trace_text(&trace))
}

fn trace_text(trace: &PeelTrace) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "PEEL {} {} {} {}",
        trace.n, trace.stop, trace.final_size, trace.base_edge_total
    )
    .unwrap();
    writeln!(out, "# x t base_frequency base_edges : base colours : part").unwrap();
    for s in &trace.steps {
        let colours: Vec<String> = s.base_colours.iter().map(u32::to_string).collect();
        let part: Vec<String> = s.part.iter().map(usize::to_string).collect();
        writeln!(
            out,
            "{} {} {} {} : {} : {}",
            s.x_before,
            s.t,
            s.base_frequency,
            s.base_edges,
            colours.join(" "),
            part.join(" ")
        )
        .unwrap();
    }
    out
}
