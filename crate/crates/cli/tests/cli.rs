use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn gallai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Constructs, then verifies the outputs with and without the certificate.
fn round_trip(target: &str, n: &str, seq: &str, k: Option<&str>, strategy: &str) {
    let dir = TempDir::new().unwrap();
    let (col, cert) = (path(&dir, "col.txt"), path(&dir, "cert.txt"));
    let mut args = vec![
        "construct",
        "--target",
        target,
        "--n",
        n,
        "--seq",
        seq,
        "--strategy",
        strategy,
    ];
    if let Some(k) = k {
        args.extend(["--k", k]);
    }
    args.extend(["--out", s(&col), "--cert", s(&cert)]);
    let out = gallai(&args);
    assert_eq!(code(&out), 0, "{args:?}: {}", stderr(&out));
    let out = gallai(&["verify", "--colouring", s(&col), "--target", target, "--cert", s(&cert)]);
    assert_eq!(code(&out), 0, "{}{}", stdout(&out), stderr(&out));
    let mut args = vec!["verify", "--colouring", s(&col), "--target", target];
    if k.is_none() {
        args.extend(["--seq", seq]);
    }
    let out = gallai(&args);
    assert_eq!(code(&out), 0, "{}{}", stdout(&out), stderr(&out));
}

#[test]
fn construct_then_verify() {
    round_trip("builtin:K3", "6", "balanced", Some("3"), "greedy");
    round_trip("builtin:K3", "8", "10 9 9", None, "auto");
    round_trip("builtin:K4", "12", "balanced", Some("3"), "mindeg3");
    round_trip("builtin:C4", "10", "balanced", Some("4"), "auto");
}

#[test]
fn construct_infeasible() {
    let out = gallai(&["construct", "--target", "builtin:K3", "--n", "3", "--seq", "1 1 1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("RAINBOW_KM_FORCED"), "{}", stderr(&out));
}

#[test]
fn construct_falls_back_to_the_oracle() {
    // no standard colouring, but the three perfect matchings of K_4 avoid a
    // rainbow C_4
    let dir = TempDir::new().unwrap();
    let col = path(&dir, "col.txt");
    let out = gallai(&[
        "construct",
        "--target",
        "builtin:C4",
        "--n",
        "4",
        "--seq",
        "2 2 2",
        "--out",
        s(&col),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stderr(&out).contains("exhaustive search"));
    let out = gallai(&["verify", "--colouring", s(&col), "--target", "builtin:C4"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_errors() {
    let out = gallai(&["construct", "--target", "builtin:K3", "--seq", "balanced", "--k", "3"]);
    assert_eq!(code(&out), 1);
    let out = gallai(&["construct", "--target", "builtin:K3", "--n", "4", "--seq", "1 1"]);
    assert_eq!(code(&out), 1);
    let out = gallai(&[
        "verify",
        "--colouring",
        "/nonexistent/col.txt",
        "--target",
        "builtin:K3",
    ]);
    assert_eq!(code(&out), 1);
    let out = gallai(&["certify", "--kind", "clash"]);
    assert_eq!(code(&out), 1);
    assert_eq!(code(&gallai(&["--help"])), 0);
}

#[test]
fn tampered_colouring_shows_a_triangle() {
    let dir = TempDir::new().unwrap();
    let (col, cert) = (path(&dir, "col.txt"), path(&dir, "cert.txt"));
    let out = gallai(&[
        "construct",
        "--target",
        "builtin:K3",
        "--n",
        "6",
        "--seq",
        "balanced",
        "--k",
        "3",
        "--strategy",
        "greedy",
        "--out",
        s(&col),
        "--cert",
        s(&cert),
    ]);
    assert_eq!(code(&out), 0);
    // recolour one edge of a two-coloured path so its triangle turns rainbow
    let text = std::fs::read_to_string(&col).unwrap();
    let mut rows: Vec<Vec<u32>> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    let colour = |rows: &Vec<Vec<u32>>, u: usize, v: usize| rows[u.min(v) - 1][u.max(v) - u.min(v) - 1];
    let (u, v, fresh) = (1..=6)
        .flat_map(|u| (u + 1..=6).flat_map(move |v| (v + 1..=6).map(move |w| (u, v, w))))
        .flat_map(|(u, v, w)| [(u, v, w), (u, w, v), (v, w, u)])
        .find_map(|(u, v, w)| {
            let (a, b) = (colour(&rows, u, w), colour(&rows, v, w));
            (a != b).then(|| (u, v, (1..=3).find(|c| *c != a && *c != b).unwrap()))
        })
        .unwrap();
    rows[u - 1][v - u - 1] = fresh;
    let mut tampered = text.lines().next().unwrap().to_string() + "\n";
    for row in &rows {
        let row: Vec<String> = row.iter().map(u32::to_string).collect();
        tampered += &(row.join(" ") + "\n");
    }
    std::fs::write(&col, tampered).unwrap();

    let out = gallai(&[
        "verify",
        "--colouring",
        s(&col),
        "--target",
        "builtin:K3",
        "--cert",
        s(&cert),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("certificate: step"), "{}", stderr(&out));
    let out = gallai(&["verify", "--colouring", s(&col), "--target", "builtin:K3"]);
    assert_ne!(code(&out), 0);
    assert!(stdout(&out).starts_with("TRIANGLE "), "{}", stdout(&out));
}

#[test]
fn sampling_finds_rainbow_triangles() {
    let dir = TempDir::new().unwrap();
    let col = path(&dir, "col.txt");
    // every edge its own colour
    let mut text = String::from("5 10\n");
    let mut c = 0;
    for u in 1..5 {
        let row: Vec<String> = (u + 1..=5)
            .map(|_| {
                c += 1;
                c.to_string()
            })
            .collect();
        text += &(row.join(" ") + "\n");
    }
    std::fs::write(&col, text).unwrap();
    let out = gallai(&[
        "--seed",
        "7",
        "verify",
        "--colouring",
        s(&col),
        "--target",
        "builtin:K3",
        "--samples",
        "10",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).starts_with("TRIANGLE"));
}

#[test]
fn exhaustive_c4_verdict() {
    let dir = TempDir::new().unwrap();
    let col = path(&dir, "col.txt");
    // a monochromatic K_5 and a K_5 whose edges all differ
    std::fs::write(&col, "5 1\n1 1 1 1\n1 1 1\n1 1\n1\n").unwrap();
    let out = gallai(&["verify", "--colouring", s(&col), "--target", "builtin:C4"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let mut text = String::from("5 10\n");
    let mut c = 0;
    for u in 1..5 {
        let row: Vec<String> = (u + 1..=5)
            .map(|_| {
                c += 1;
                c.to_string()
            })
            .collect();
        text += &(row.join(" ") + "\n");
    }
    std::fs::write(&col, text).unwrap();
    let out = gallai(&["verify", "--colouring", s(&col), "--target", "builtin:C4"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).starts_with("EMBEDDING"));
}

#[test]
fn certify_triangle() {
    let dir = TempDir::new().unwrap();
    let cert = path(&dir, "cert.txt");
    let out = gallai(&["certify", "--kind", "triangle", "--k", "1000", "--out", s(&cert)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = std::fs::read_to_string(&cert).unwrap();
    let head: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(
        &head[..7],
        &["TRIANGLE_HARD_SEQUENCE", "1000", "1203", "3", "946", "500", "3"]
    );

    let out = gallai(&["certify", "--kind", "triangle", "--k", "100"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("a < 0"), "{}", stderr(&out));
}

#[test]
fn certify_other_kinds() {
    let out = gallai(&[
        "certify",
        "--kind",
        "clash",
        "--n",
        "5",
        "--m",
        "3",
        "--seq",
        "1 1 1 1 1 1 1 1 1 1",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("RAINBOW_KM_FORCED 10 5 3"));
    let out = gallai(&["certify", "--kind", "clash", "--n", "6", "--seq", "15"]);
    assert_eq!(code(&out), 2);

    let out = gallai(&["certify", "--kind", "general", "--target", "builtin:K3", "--k", "10000"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("SEQ balanced"));
    let out = gallai(&["certify", "--kind", "general", "--target", "builtin:K3", "--k", "10"]);
    assert_eq!(code(&out), 2);

    let out = gallai(&[
        "certify", "--kind", "tree", "--m", "2", "--n", "12", "--seq", "balanced", "--k", "1",
    ]);
    assert_eq!(code(&out), 2);
    // D(2) = 12^12 < C(5 * 10^6, 2), so one edge per colour is rare enough
    let out = gallai(&[
        "certify",
        "--kind",
        "tree",
        "--m",
        "2",
        "--n",
        "5000000",
        "--seq",
        "balanced",
        "--k",
        "12499997500000",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = gallai(&[
        "certify",
        "--kind",
        "tree",
        "--m",
        "2",
        "--n",
        "10000000000000",
        "--seq",
        "balanced",
        "--k",
        "1",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn certify_peel() {
    let dir = TempDir::new().unwrap();
    let (col, trace) = (path(&dir, "col.txt"), path(&dir, "trace.txt"));
    let out = gallai(&[
        "construct",
        "--target",
        "builtin:K3",
        "--n",
        "10",
        "--seq",
        "20 15 10",
        "--out",
        s(&col),
    ]);
    assert_eq!(code(&out), 0);
    let out = gallai(&["certify", "--kind", "peel", "--colouring", s(&col), "--out", s(&trace)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = std::fs::read_to_string(&trace).unwrap();
    assert!(text.starts_with("PEEL 10 1 1 45"), "{text}");
}

#[test]
fn oracle_reproduces_the_fixture() {
    let dir = TempDir::new().unwrap();
    let (table, report) = (path(&dir, "table.txt"), path(&dir, "report.txt"));
    let out = gallai(&[
        "--jobs",
        "2",
        "oracle",
        "--target",
        "builtin:K3",
        "--k",
        "3",
        "--n-max",
        "6",
        "--out",
        s(&table),
        "--report",
        s(&report),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let ours = gallai::oracle::parse_table(&std::fs::read_to_string(&table).unwrap()).unwrap();
    let fixture = include_str!("../../core/tests/fixtures/triangle_k3_n6.txt");
    let expected = gallai::oracle::parse_table(fixture).unwrap();
    assert_eq!(ours, expected);
    let report = std::fs::read_to_string(&report).unwrap();
    assert!(report.trim_end().ends_with("0 conflicts"), "{report}");
}

#[test]
fn oracle_two_colours() {
    let out = gallai(&["oracle", "--target", "builtin:K3", "--k", "2", "--n-max", "7"]);
    assert_eq!(code(&out), 0);
    assert!(!stdout(&out).contains("UNREALIZABLE"));
    assert!(stdout(&out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .all(|l| l.ends_with("REALIZABLE")));
}

#[test]
fn oracle_budget_guard() {
    let out = gallai(&[
        "oracle",
        "--target",
        "builtin:K3",
        "--k",
        "3",
        "--n-max",
        "20",
        "--total-budget",
        "20000000",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).starts_with("# PARTIAL"));
}

#[test]
fn sweep_is_reproducible() {
    let run = |jobs: &str| {
        gallai(&[
            "--seed",
            "3",
            "--jobs",
            jobs,
            "sweep",
            "--target",
            "builtin:C4",
            "--k",
            "4",
            "--n-min",
            "8",
            "--n-max",
            "14",
            "--samples",
            "4",
        ])
    };
    let (one, four) = (run("1"), run("4"));
    assert_eq!(code(&one), 0, "{}", stdout(&one));
    assert_eq!(stdout(&one), stdout(&four));
    assert!(stdout(&one).contains("0 broken"));
}
