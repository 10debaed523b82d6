//! Command-line behaviour, in process and through the built binary.

use std::path::{Path, PathBuf};
use std::process::Command;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/orbifolds")
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("orbicluster-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("orbicluster").chain(args.iter().copied());
    let status = orbicluster::cli::run(argv, &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const STRAIGHT: &str = r#"{"kind":"snake","shape":"R","tiles":[
  {"label":"t","edges":{"S":"a","E":"u","N":"b","W":"c"}},
  {"label":"u","edges":{"S":"d","E":"e","N":"f","W":"u"}}]}"#;

#[test]
fn expand_an_edge() {
    let d = scratch("edge");
    let g = write(&d, "edge.json", r#"{"kind":"edge","label":"B"}"#);
    let (s, out, _) = run(&["expand", &g]);
    assert_eq!(s, 0);
    assert_eq!(out.trim(), "x_B");
}

#[test]
fn matchings_of_two_tiles() {
    let d = scratch("two");
    let g = write(&d, "g.json", STRAIGHT);
    let (s, out, _) = run(&["matchings", &g]);
    assert_eq!(s, 0);
    assert_eq!(out.lines().next(), Some("count 3"));
    assert_eq!(out.lines().count(), 4);
    let (_, json, _) = run(&["--json", "matchings", &g]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["count"], 3);
}

#[test]
fn suite_verifies() {
    let dir = fixtures();
    let (s, out, _) = run(&["verify", "--suite", dir.to_str().unwrap()]);
    assert_eq!(s, 0, "{out}");
    assert!(out.ends_with("all 25 identities verified\n"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("ok")).count(), 25);
}

#[test]
fn single_identity_and_a_wrong_one() {
    let dir = fixtures();
    let file = dir.join("identities/uv-graft.json");
    let (s, out, _) = run(&["verify", file.to_str().unwrap()]);
    assert_eq!(s, 0, "{out}");
    let d = scratch("wrong");
    let text = std::fs::read_to_string(&file).unwrap().replace("y_5", "y_4");
    let bad = write(&d, "uv-graft.json", &text);
    let (s, out, _) = run(&["verify", &bad, "--bundle", dir.to_str().unwrap()]);
    assert_eq!(s, 1);
    assert!(out.contains("FAIL uv-graft"), "{out}");
}

#[test]
fn oracle_matches_expand() {
    let dir = fixtures();
    let t = scratch("oracle");
    let b = orbicluster::fixtures::Bundle::load(&dir).unwrap();
    let tri = write(&t, "t.json", &serde_json::to_string(&b.triangulations["genus1"]).unwrap());
    let g = write(&t, "d.json", &serde_json::to_string(&b.graphs["D"].graph).unwrap());
    let (_, x, _) = run(&["expand", &g, "--triangulation", &tri]);
    let (s, y, _) = run(&["oracle", &tri, "1,3", "3"]);
    assert_eq!(s, 0);
    assert_eq!(x, y);
    let (_, z, _) = run(&["oracle", &tri, "-", "0"]);
    assert_eq!(z.trim(), "x_1");
}

#[test]
fn triangulate_mutate_and_graph() {
    let (s, out, _) = run(&["triangulate", "1", "1"]);
    assert_eq!(s, 0);
    let d = scratch("tri");
    let tri = write(&d, "t.json", &out);
    let (s, seed, _) = run(&["mutate", &tri, "5"]);
    assert_eq!(s, 0);
    let seed = write(&d, "seed.json", &seed);
    let (_, back, _) = run(&["mutate", &seed, "5"]);
    let (_, start, _) = run(&["mutate", &tri]);
    assert_eq!(back, start);
    let curve = write(&d, "c.json", r#"{"kind":"arc","start":0,"crossings":["4","2"]}"#);
    let (s, g, _) = run(&["curve-graph", &tri, &curve]);
    assert_eq!(s, 0);
    assert!(g.contains("\"snake\""));
}

#[test]
fn errors_have_nonzero_status() {
    let (s, _, err) = run(&["frobnicate"]);
    assert_ne!(s, 0);
    assert!(!err.is_empty());
    let d = scratch("bad");
    let g = write(&d, "broken.json", "{\"kind\":");
    let (s, _, err) = run(&["expand", &g]);
    assert_eq!(s, 2);
    assert!(err.contains("broken.json"), "{err}");
    let (s, _, _) = run(&["verify"]);
    assert_eq!(s, 2);
}

#[test]
fn binary_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_orbicluster");
    let dir = fixtures();
    let go = || Command::new(exe).args(["--json", "verify", "--suite"]).arg(&dir).output().unwrap();
    let (a, b) = (go(), go());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let bad = Command::new(exe).arg("nonsense").output().unwrap();
    assert!(!bad.status.success());
}
