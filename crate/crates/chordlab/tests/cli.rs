use std::path::Path;
use std::process::{Command, Output};

use chordlab::io::write_graph6;
use chordlab_core::named;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordlab")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus_file(dir: &Path, orders: &[usize]) -> String {
    let mut text = String::new();
    for n in orders {
        let o = run(&["generate", "--n", &n.to_string()]);
        assert_eq!(code(&o), 0);
        text.push_str(&stdout(&o));
    }
    let p = dir.join("corpus.g6");
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn generate_counts() {
    assert_eq!(stdout(&run(&["generate", "--n", "4"])).lines().count(), 1);
    assert_eq!(stdout(&run(&["generate", "--n", "6"])).lines().count(), 2);
    assert_eq!(code(&run(&["generate", "--n", "5"])), 2);
    assert_eq!(code(&run(&["generate", "--n", "16"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eight.g6");
    assert_eq!(code(&run(&["generate", "--n", "8", "--out", out.to_str().unwrap()])), 0);
    assert_eq!(std::fs::read_to_string(out).unwrap().lines().count(), 5);
}

#[test]
fn verify_modes_on_the_small_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = corpus_file(dir.path(), &[4, 6, 8, 10]);
    for mode in ["zhan2", "zhan3adj", "chords"] {
        let o = run(&["verify", "--mode", mode, "--in", &corpus]);
        assert_eq!(code(&o), 0, "{mode}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 27);
        let thr = if mode == "zhan2" { 1 } else { 2 };
        for r in rows.iter().filter(|r| r["status"] != "skipped") {
            assert!(r["value"].as_u64().unwrap() >= thr);
        }
    }
}

#[test]
fn petersen_has_three_chords() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("pet.g6");
    std::fs::write(&p, write_graph6(&named::petersen()).unwrap() + "\n").unwrap();
    let o = run(&["verify", "--mode", "chords", "--in", p.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!((row[6], row[7]), ("3", "pass"));
}

#[test]
fn reports_are_reproducible_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = corpus_file(dir.path(), &[8, 10]);
    let a = run(&["verify", "--mode", "zhan2", "--in", &corpus, "--jobs", "1"]);
    let b = run(&["verify", "--mode", "zhan2", "--in", &corpus, "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "--mode", "zhan2", "--in", &corpus, "--format", "csv", "--jobs", "3"]);
    assert_eq!(stdout(&c).lines().count(), 25);
}

#[test]
fn verify_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "C~\nC\n").unwrap();
    let o = run(&["verify", "--mode", "zhan2", "--in", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(code(&run(&["verify", "--mode", "zhan2", "--in", "/nonexistent/x"])), 3);
    assert_eq!(code(&run(&["verify", "--mode", "bogus", "--in", "x"])), 2);
}

#[test]
fn extend_k33() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k33.txt");
    std::fs::write(&g, "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n").unwrap();
    let trace = dir.path().join("trace.json");
    let o = run(&[
        "extend",
        "--graph",
        g.to_str().unwrap(),
        "--path",
        "0,3,1,4",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let path: Vec<usize> = stdout(&o).trim().split(',').map(|t| t.parse().unwrap()).collect();
    assert_eq!((path[0], path[path.len() - 1]), (0, 4));
    assert!(path.len() > 4);
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(trace).unwrap()).unwrap();
    assert_eq!(t["output"].as_array().unwrap().len(), path.len());
    assert_eq!(t["steps"][0]["step"], "component-claim");
}

#[test]
fn extend_refusals() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.g6");
    std::fs::write(&g, "C~\n").unwrap();
    let g = g.to_str().unwrap();
    let o = run(&["extend", "--graph", g, "--path", "0,1,2,3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound vertices at v=1,2"));
    assert_eq!(code(&run(&["extend", "--graph", g, "--path", "0;1"])), 2);
    assert_eq!(code(&run(&["extend", "--graph", g, "--path", "0,9"])), 2);
}

#[test]
fn lemma_suites() {
    for (which, seeds) in [("coloring", "200"), ("parity", "100"), ("second-cycle", "100")] {
        let o = run(&["lemmas", "--which", which, "--seeds", seeds]);
        assert_eq!(code(&o), 0, "{which}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }
    assert_eq!(code(&run(&["lemmas", "--which", "parity", "--seeds", "3", "--k", "4..2"])), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_chordlab"))
        .args(["lemmas", "--which", "parity", "--seeds", "2"])
        .env("CHORDLAB_SEED", "nope")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let a = Command::new(env!("CARGO_BIN_EXE_chordlab"))
        .args(["lemmas", "--which", "second-cycle", "--seeds", "5", "--k", "3..3"])
        .env("CHORDLAB_SEED", "41")
        .output()
        .unwrap();
    assert_eq!(code(&a), 0);
}
