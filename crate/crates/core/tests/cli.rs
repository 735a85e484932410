use std::path::PathBuf;

use pseudocone::cli::run;
use serde_json::Value;

const K1: &str = r#"{"cone": {"generators": [[1, 0], [0, 1]]},
  "halfspaces": [{"normal": [-1, -1], "offset": "-1"}, {"normal": [-1, 0], "offset": 0}, {"normal": [0, -1], "offset": 0}]}"#;
const ORTHANT: &str = r#"{"generators": [[1, 0], [0, 1]]}"#;
const ONE_ATOM: &str = r#"{"atoms": [{"dir": [-0.7071067811865476, -0.7071067811865476], "weight": 1.4142135623730951}]}"#;

fn file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pseudocone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn call(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["pseudocone"];
    all.extend_from_slice(args);
    let (code, out) = run(all);
    let value = serde_json::from_str(&out).unwrap_or(Value::Null);
    (code, value)
}

#[test]
fn copolar_twice_returns_the_input() {
    let k1 = file("k1.json", K1);
    let (code, once) = call(&["copolar", k1.to_str().unwrap()]);
    assert_eq!(code, 0);
    let star = file("k1-star.json", &once.to_string());
    let (_, twice) = call(&["copolar", star.to_str().unwrap()]);
    let (_, mut canonical) = call(&["validate", k1.to_str().unwrap()]);
    canonical.as_object_mut().unwrap().remove("c_full");
    assert_eq!(twice, canonical);
    assert_eq!(once["v"], 1);
}

#[test]
fn scalar_queries_on_k1() {
    let k1 = file("k1-scalars.json", K1);
    let path = k1.to_str().unwrap();
    let (code, v) = call(&["support", path, "--direction", "-1,-1"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["support"], "-1");
    let (_, v) = call(&["radial", path, "--point", "1,1"]);
    assert_eq!(v["radial"], "1/2");
    let (_, v) = call(&["volume", path]);
    assert_eq!(v["finite"], true);
    assert_eq!(v["triangulation"], 0.5);
}

#[test]
fn solve_single_atom_gives_k1() {
    let cone = file("orthant.json", ORTHANT);
    let measure = file("one-atom.json", ONE_ATOM);
    let (code, v) = call(&["solve", "--cone", cone.to_str().unwrap(), "--measure", measure.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
    let (_, canonical) = call(&["validate", file("k1-solve.json", K1).to_str().unwrap()]);
    assert_eq!(v["pseudocone"]["halfspaces"], canonical["halfspaces"]);
}

#[test]
fn exit_codes_distinguish_malformed_and_invalid_input() {
    let garbage = file("garbage.json", "{not json");
    let (code, v) = call(&["validate", garbage.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["reason"], "malformed-input");
    // The cone itself: the origin lies in the set.
    let cone_only = file("cone-only.json", r#"{"cone": {"generators": [[1, 0], [0, 1]]}, "halfspaces": [{"normal": [-1, 0], "offset": 0}]}"#);
    let (code, _) = call(&["validate", cone_only.to_str().unwrap()]);
    assert_eq!(code, 2);
    let (code, _) = call(&["frobnicate"]);
    assert_eq!(code, 1);
}

#[test]
fn generated_corpus_is_deterministic_and_passes_identities() {
    let (code, a) = call(&["gen", "--count", "3", "--seed", "7"]);
    assert_eq!(code, 0);
    let (_, b) = call(&["gen", "--count", "3", "--seed", "7"]);
    assert_eq!(a, b);
    let corpus = file("corpus.json", &a.to_string());
    let (code, v) = call(&["check-identities", corpus.to_str().unwrap(), "--samples", "5"]);
    assert_eq!(code, 0, "{v}");
}
