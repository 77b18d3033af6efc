use std::fs;
use std::process::{Command, Output};

use expander_nmc::cli::Report;
use expander_nmc::tamper::parse_rational;

fn nmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nmc"))
        .args(args)
        .env_remove("NMC_THREADS")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Report {
    let out = nmc(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

#[test]
fn encode_then_decode() {
    let out = nmc(&["encode", "--graph", "cycle:n=8", "--seed", "7", "--bit", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let (u, v) = text.trim().split_once(' ').unwrap();
    let dec = nmc(&["decode", "--graph", "cycle:n=8", u, v]);
    assert_eq!(String::from_utf8(dec.stdout).unwrap().trim(), "1");

    let again = nmc(&["encode", "--graph", "cycle:n=8", "--seed", "7", "--bit", "1"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn decode_examples() {
    for (l, r, bit) in [("0", "1", "1"), ("0", "4", "0")] {
        let out = nmc(&["decode", "--graph", "cycle:n=8", l, r]);
        assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), bit);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(nmc(&["decode", "--graph", "cycle:n=8", "0", "8"]).status.code(), Some(2));
    assert_eq!(nmc(&["graph-info", "--graph", "cycle:n=1"]).status.code(), Some(2));
    assert_eq!(nmc(&["graph-info"]).status.code(), Some(2));
    assert_eq!(nmc(&["tamper", "--graph", "cycle:n=7", "--adversary", "exhaustive"]).status.code(), Some(4));
    assert_eq!(
        nmc(&["tamper", "--graph", "ld:p=3,t=2", "--adversary", "id", "--method", "closed_form"]).status.code(),
        Some(4)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "4 2\n0 1\n1 2\n2 3\n").unwrap();
    let out = nmc(&["graph-info", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex"));
}

#[test]
fn graph_info_reports_figure_of_merit() {
    let r = report(&["graph-info", "--graph", "cycle:n=5", "--seed", "3"]);
    assert_eq!(r.config.seed, 3);
    assert!((r.graph.lambda.unwrap() - 1.618_034).abs() < 1e-6);
    assert!((r.graph.epsilon_star.unwrap() - 1.029).abs() < 1e-3);

    let r = report(&["graph-info", "--graph", "ld:p=101,t=5"]);
    assert_eq!(r.graph.lambda, Some(505.0));
    assert!((r.graph.epsilon_star.unwrap() - 1.11).abs() < 0.01);
}

#[test]
fn seed_is_always_reported() {
    let a = report(&["graph-info", "--graph", "petersen"]);
    let b = report(&["graph-info", "--graph", "petersen"]);
    // Drawn from OS entropy; a collision would be a one-in-2^64 event.
    assert_ne!(a.config.seed, b.config.seed);
}

#[test]
fn table_file_closed_form_matches_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("adv.txt");
    fs::write(&path, "8\n3 1 4 1 5 1 2 6\n2 7 1 0 2 0 1 7\n").unwrap();
    let p = path.to_str().unwrap();
    let cf = report(&["tamper", "--graph", "cycle:n=8", "--adversary", p, "--method", "closed_form"]);
    let bf = report(&["tamper", "--graph", "cycle:n=8", "--adversary", p, "--method", "brute_force"]);
    assert_eq!(cf.results.flips[0].t, bf.results.flips[0].t);
    assert!(bf.results.flips[0].q0.is_some());

    let csv_path = dir.path().join("out.csv");
    let out = nmc(&[
        "tamper", "--graph", "cycle:n=8", "--adversary", p, "--method", "exact", "--format", "csv", "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = fs::read_to_string(csv_path).unwrap();
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.starts_with("method,adversary,graph,n,d,lambda,t,epsilon"));
}

#[test]
fn exhaustive_includes_argmax_tables() {
    let r = report(&["tamper", "--graph", "cycle:n=5", "--adversary", "exhaustive"]);
    let flip = &r.results.flips[0];
    let t = parse_rational(flip.t.as_deref().unwrap()).unwrap();
    assert!(t >= parse_rational("1/2").unwrap());
    let tables = flip.tables.as_ref().unwrap();
    assert_eq!((tables.g.len(), tables.h.len()), (5, 5));
}

#[test]
fn monte_carlo_on_cayley_graph() {
    let r = report(&[
        "tamper", "--graph", "ld:p=5,t=3", "--adversary", "const:0,const:0", "--trials", "100000", "--seed", "11",
    ]);
    let f = &r.results.flips[0];
    assert!((f.estimate.unwrap() - 0.5).abs() <= f.half_width.unwrap());
    assert_eq!(f.seed, Some(11));
    assert_eq!(r.config.trials, Some(100_000));
}

#[test]
fn identical_across_thread_counts() {
    let base = ["tamper", "--graph", "petersen", "--adversary", "search:iters=200,restarts=6", "--seed", "5"];
    let one = report(&[&base[..], &["--threads", "1"]].concat());
    let many = report(&[&base[..], &["--threads", "3"]].concat());
    assert_eq!(one.stable_payload(), many.stable_payload());

    let env = Command::new(env!("CARGO_BIN_EXE_nmc"))
        .args(base)
        .env("NMC_THREADS", "2")
        .output()
        .unwrap();
    let via_env = Report::from_json(&String::from_utf8(env.stdout).unwrap()).unwrap();
    assert_eq!(one.stable_payload(), via_env.stable_payload());
}

#[test]
fn mixing_and_spectrum() {
    let r = report(&["mixing", "--graph", "petersen", "--pairs", "1000", "--seed", "1"]);
    let m = r.results.mixing.unwrap();
    assert_eq!(m.violations, 0);
    assert!(m.max_ratio.unwrap() <= 1.0);
    assert_eq!(m.full_set_lhs, 0.0);

    let r = report(&["spectrum", "--graph", "ld:p=3,t=2"]);
    let s = r.results.spectrum.unwrap();
    assert_eq!(s.adjacency, "multiplicity");
    assert_eq!(s.eigenvalues.len(), 27);
    assert!((s.eigenvalues[0] - 9.0).abs() < 1e-9);
    assert!((s.trace - 27.0 * 3.0).abs() < 1e-6);
}
