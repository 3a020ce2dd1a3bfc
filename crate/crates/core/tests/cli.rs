use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use arcbound::chromatic::verify_coloring;
use arcbound::toolkit::{parse_coloring, parse_digraph, qr_tournament, serialize_digraph};

fn arcbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn gen_is_reproducible_and_seed_sensitive() {
    let a = arcbound(&[
        "gen",
        "--model",
        "random-tournament",
        "--n",
        "12",
        "--seed",
        "5",
    ]);
    let b = arcbound(&[
        "gen",
        "--model",
        "random-tournament",
        "--n",
        "12",
        "--seed",
        "5",
    ]);
    let c = arcbound(&[
        "gen",
        "--model",
        "random-tournament",
        "--n",
        "12",
        "--seed",
        "6",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let g = parse_digraph(std::str::from_utf8(&a.stdout).unwrap()).unwrap();
    assert!(g.is_tournament());
    assert_eq!(g.n(), 12);
}

#[test]
fn qr_matches_library() {
    let out = arcbound(&["gen", "--model", "qr", "--q", "11"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, serialize_digraph(&qr_tournament(11).unwrap()));
}

#[test]
fn color_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "g.txt");
    let col = path(dir.path(), "g.col");
    let trace = path(dir.path(), "trace.json");
    let gen = arcbound(&[
        "gen",
        "--model",
        "random-oriented",
        "--n",
        "20",
        "--p",
        "0.6",
        "--seed",
        "1",
        "-o",
        &g,
    ]);
    assert!(gen.status.success());
    for method in ["dense", "greedy", "exact"] {
        let out = arcbound(&[
            "color", &g, "--method", method, "-o", &col, "--trace", &trace,
        ]);
        assert_eq!(out.status.code(), Some(0), "{method}");
        let d = parse_digraph(&fs::read_to_string(&g).unwrap()).unwrap();
        let c = parse_coloring(&fs::read_to_string(&col).unwrap(), d.n()).unwrap();
        assert!(verify_coloring(&d, &c).unwrap());
        let v = arcbound(&["verify", &g, &col]);
        assert_eq!(v.status.code(), Some(0));
        assert!(String::from_utf8(v.stdout).unwrap().starts_with("valid"));
    }
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(report["method"], "dense");
}

#[test]
fn errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "c3.txt");
    let bad = path(dir.path(), "bad.col");
    fs::write(&g, "digraph 3\n0 1\n1 2\n2 0\n").unwrap();
    fs::write(&bad, "0 0\n1 0\n2 0\n").unwrap();
    assert_eq!(arcbound(&["verify", &g, &bad]).status.code(), Some(1));
    assert_eq!(
        arcbound(&["analyze", &path(dir.path(), "missing.txt")])
            .status
            .code(),
        Some(1)
    );
    let bu = path(dir.path(), "bu.txt");
    assert!(
        arcbound(&["gen", "--model", "blowup", "--parts", "2,2,2", "-o", &bu])
            .status
            .success()
    );
    let refine = arcbound(&["color", &bu, "--method", "refine"]);
    assert_eq!(refine.status.code(), Some(1));
    assert!(String::from_utf8(refine.stderr)
        .unwrap()
        .contains("tournament"));
    assert_eq!(
        arcbound(&["split", &g, "--cluster", "0,7"]).status.code(),
        Some(1)
    );
}

#[test]
fn analyze_reports_qr7() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "qr.txt");
    arcbound(&["gen", "--model", "qr", "--q", "7", "-o", &g]);
    let out = String::from_utf8(arcbound(&["analyze", &g]).stdout).unwrap();
    for line in [
        "n 7",
        "arcs 21",
        "tournament true",
        "alpha 1 exact",
        "girth 3",
        "dichromatic 3 exact",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in {out}");
    }
}

#[test]
fn structural_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = path(dir.path(), "qr.txt");
    arcbound(&["gen", "--model", "qr", "--q", "7", "-o", &g]);
    let cluster =
        String::from_utf8(arcbound(&["cluster", &g, "--k", "3", "--ell", "7"]).stdout).unwrap();
    assert_eq!(cluster, "found 0 1 2 3 4 5 6\n");
    let none =
        String::from_utf8(arcbound(&["cluster", &g, "--k", "4", "--ell", "7"]).stdout).unwrap();
    assert_eq!(none, "absent\n");
    let split = String::from_utf8(arcbound(&["split", &g, "--cluster", "0,1,3"]).stdout).unwrap();
    assert_eq!(split.lines().count(), 4);

    let path3 = path(dir.path(), "p.txt");
    fs::write(&path3, "digraph 3\n0 1\n1 2\n").unwrap();
    let complete = String::from_utf8(arcbound(&["complete", &path3]).stdout).unwrap();
    assert_eq!(complete, "digraph 3\n0 1\n0 2\n1 2\n# added 0 2\n");
}
