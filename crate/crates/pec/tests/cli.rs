use std::fs;
use std::path::{Path, PathBuf};

use tempfile::TempDir;

const COIN: &str = include_str!("../examples/coin.pec");
const ANTIBIOTIC: &str = include_str!("../examples/antibiotic.pec");
const KEYS: &str = include_str!("../examples/keys.pec");

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn pec(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = pec::cli::run(std::iter::once("pec").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_accepts_shipped_domains() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("coin.pec", COIN), ("antibiotic.pec", ANTIBIOTIC), ("keys.pec", KEYS)] {
        let path = put(&dir, name, text);
        let r = pec(&["check", s(&path)]);
        assert_eq!(r.code, 0, "{name}: {}", r.err);
        assert!(r.out.contains("valid"));
    }
    let r = pec(&["check", s(&put(&dir, "coin.pec", COIN))]);
    assert!(r.out.ends_with("1 fluents, 1 actions, maxinst 3; 4 propositions (1 v, 1 i, 1 c, 1 p)\n"), "{}", r.out);
}

#[test]
fn check_reports_violated_conditions() {
    let dir = TempDir::new().unwrap();
    let no_initial = COIN.replace("initially-one-of {({Coin=Heads}, 1)}", "");
    let r = pec(&["check", s(&put(&dir, "a.pec", &no_initial))]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("condition (ii)"), "{}", r.err);

    let twice = format!("{COIN}\nToss performed-at 1 with-prob 0.5\n");
    let r = pec(&["check", s(&put(&dir, "b.pec", &twice))]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("condition (iv)"), "{}", r.err);
}

#[test]
fn syntax_and_io_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let r = pec(&["check", s(&put(&dir, "bad.pec", "fluent Coin takes-values\n"))]);
    assert_eq!(r.code, 1);
    assert!(r.err.starts_with("error: "));
    let r = pec(&["check", s(&dir.path().join("missing.pec"))]);
    assert_eq!(r.code, 1);
    let r = pec(&["frobnicate"]);
    assert_eq!(r.code, 1);
    let r = pec(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("translate"));
}

#[test]
fn query_marginals_and_conditionals() {
    let dir = TempDir::new().unwrap();
    let coin = put(&dir, "coin.pec", COIN);
    let anti = put(&dir, "antibiotic.pec", ANTIBIOTIC);
    assert_eq!(pec(&["query", s(&coin), "-q", "[Coin=Heads]@2"]).out, "0.510000\n");
    assert_eq!(pec(&["query", s(&coin), "-q", "[Coin=Heads]@2", "--exact"]).out, "51/100\n");
    assert_eq!(pec(&["query", s(&anti), "-q", "[Bacteria=Absent & Rash=Absent]@4"]).out, "0.650769\n");
    let r = pec(&["query", s(&anti), "-q", "[Bacteria=Absent]@4", "--given", "[Rash=Absent]@4", "--exact"]);
    assert_eq!(r.out, "47/53\n");
    let r = pec(&["query", s(&anti), "-q", "[Bacteria=Absent]@4", "--given", "[Rash=Absent]@4", "--precision", "3"]);
    assert_eq!(r.out, "0.887\n");
}

#[test]
fn query_errors() {
    let dir = TempDir::new().unwrap();
    let coin = put(&dir, "coin.pec", COIN);
    let r = pec(&["query", s(&coin), "-q", "[Coin=Edge]@2"]);
    assert_eq!(r.code, 1);
    let r = pec(&["query", s(&coin), "-q", "[Coin=Heads]@9"]);
    assert_eq!(r.code, 1);
    let r = pec(&["query", s(&coin), "-q", "[Coin=Heads]@1", "--given", "[Coin=Tails]@0"]);
    assert_eq!(r.code, 2, "{}", r.err);
}

#[test]
fn translate_writes_next_to_input() {
    let dir = TempDir::new().unwrap();
    let coin = put(&dir, "coin.pec", COIN);
    let r = pec(&["translate", s(&coin)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let written = fs::read_to_string(dir.path().join("coin.lp")).unwrap();
    assert_eq!(written, include_str!("golden/coin.lp"));

    let keys = put(&dir, "keys.pec", KEYS);
    let target = dir.path().join("out.lp");
    let r = pec(&["translate", s(&keys), "-o", s(&target), "--with-axioms"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let written = fs::read_to_string(&target).unwrap();
    assert!(written.lines().any(|l| l == "performed(pickupKeys,0,99/100)."));
    assert!(written.contains("% domain-independent axioms"));
}

#[test]
fn graph_prints_dot() {
    let dir = TempDir::new().unwrap();
    let r = pec(&["graph", s(&put(&dir, "antibiotic.pec", ANTIBIOTIC))]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("digraph pec {\n"));
    assert_eq!(r.out.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 5);
    assert_eq!(r.out.lines().filter(|l| l.contains("->")).count(), 10);
}

#[test]
fn sample_is_seeded() {
    let dir = TempDir::new().unwrap();
    let coin = put(&dir, "coin.pec", COIN);
    let args = ["sample", s(&coin), "-n", "2000", "--seed", "3", "-q", "[Coin=Heads]@2"];
    let a = pec(&args);
    let b = pec(&args);
    assert_eq!(a.code, 0, "{}", a.err);
    assert_eq!(a.out, b.out);
    assert!(a.out.starts_with("samples: 2000\nfrequency: "));
    assert!(a.out.ends_with("exact: 0.510000 (51/100)\n"));
    let r = pec(&["sample", s(&coin), "-n", "0", "-q", "[Coin=Heads]@2"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("sample count must be positive"));
}
