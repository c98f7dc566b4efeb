use std::fmt::Write as _;

use gallai::bounds::clash_bound_check;
use gallai::constructor::{construct_greedy, GreedyOutcome};
use gallai::oracle::{exact_g, ExactGOptions, ExactGReport, OracleOptions, Verdict};
use gallai::{DistributionSequence, TargetGraph};

use crate::input;
use crate::outcome::{usage, Failure, Outcome};
use crate::OracleArgs;

use super::emit;

/// Greedy node limit per row of the agreement report.
const GREEDY_BUDGET: u64 = 200_000;

pub fn run(args: &OracleArgs, jobs: usize) -> Outcome {
    let h = input::target(&args.target)?;
    if args.k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    let options = ExactGOptions {
        oracle: OracleOptions {
            node_budget: args.budget,
            ..OracleOptions::default()
        },
        total_nodes: args.total_budget,
        max_sequences: args.max_sequences,
        jobs: jobs.max(1),
    };
    let report = exact_g(&h, args.k, args.n_max, &options);
    emit(args.out.as_deref(), &report.table())?;
    eprintln!("{}", report.summary().trim_end());

    if let Some(path) = &args.report {
        let (text, conflicts) = agreement(&report, &h);
        input::write_file(path, &text)?;
        if conflicts > 0 {
            return Err(usage(format!(
                "{conflicts} rows disagree with the constructor or the clash bound"
            )));
        }
    }
    if report.partial {
        return Err(Failure::Inconclusive("budget exhausted, table is PARTIAL".into()));
    }
    Ok(())
}

/// Compares every decided row with the greedy constructor and the clash
/// bound. A standard colouring avoids `H` only when `H` has a cycle, so
/// greedy successes count against UNREALIZABLE rows only then.
fn agreement(report: &ExactGReport, h: &TargetGraph) -> (String, usize) {
    let m = h.vertex_count();
    let cyclic = h.degeneracy() >= 2;
    let mut out = String::new();
    if report.partial {
        out.push_str("# PARTIAL\n");
    }
    writeln!(out, "# n counts verdict greedy clash").unwrap();
    let mut conflicts = 0;
    let mut greedy_built = 0;
    let mut clash_certified = 0;
    for row in &report.rows {
        let seq = DistributionSequence::good(row.n, row.counts.clone()).expect("oracle rows are n-good");
        let greedy = match construct_greedy(&seq, GREEDY_BUDGET) {
            GreedyOutcome::Certificate(_) => "built",
            GreedyOutcome::Infeasible => "none",
            GreedyOutcome::GiveUp { .. } => "gaveup",
        };
        let clash = m >= 3 && clash_bound_check(&seq, m).is_some();
        greedy_built += usize::from(greedy == "built");
        clash_certified += usize::from(clash);
        let conflict = (row.verdict == Verdict::Unrealizable && cyclic && greedy == "built")
            || (row.verdict == Verdict::Realizable && clash);
        conflicts += usize::from(conflict);
        let counts: Vec<String> = row.counts.iter().map(u64::to_string).collect();
        writeln!(
            out,
            "{} {} {} {greedy} {}{}",
            row.n,
            counts.join(" "),
            row.verdict,
            if clash { "forced" } else { "-" },
            if conflict { " CONFLICT" } else { "" }
        )
        .unwrap();
    }
    writeln!(
        out,
        "# {} rows, greedy built {greedy_built}, clash certified {clash_certified}, {conflicts} conflicts",
        report.rows.len()
    )
    .unwrap();
    (out, conflicts)
}
