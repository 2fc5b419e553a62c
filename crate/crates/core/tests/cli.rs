use std::path::Path;

use dtdom::cli::{run, EXIT_DOMAIN, EXIT_FAILED, EXIT_INPUT, EXIT_OK};

fn dtdom(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dtdom").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn generate(dir: &Path, family: &str, format: &str) -> String {
    let path = dir.join(format!("{}.{format}", family.replace(['(', ')', ','], "_")));
    let p = path.to_str().unwrap().to_string();
    let (code, _, err) = dtdom(&["generate", "--family", family, "--out", &p, "--format", format]);
    assert_eq!(code, EXIT_OK, "{err}");
    p
}

#[test]
fn compute_then_check_set() {
    let dir = tempfile::tempdir().unwrap();
    let c7 = generate(dir.path(), "C(7)", "edgelist");
    let (code, out, _) = dtdom(&["compute", "--kind", "dtd", "--in", &c7]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("dtd 4"));
    let witness = lines.next().unwrap().strip_prefix("witness ").unwrap().to_string();
    assert_eq!(witness.split(',').count(), 4);
    let (code, out, _) = dtdom(&["check-set", "--kind", "dtd", "--in", &c7, "--set", &witness]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "valid\n"));
    let (code, out, _) = dtdom(&["check-set", "--kind", "tdom", "--in", &c7, "--set", "0,1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.starts_with("invalid\nuncovered "));
}

#[test]
fn every_kind_and_format() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = generate(dir.path(), "T(2)", "graph6");
    for (kind, value) in [("dom", 3), ("tdom", 4), ("dtd", 4)] {
        let (code, out, _) = dtdom(&["compute", "--kind", kind, "--in", &g6, "--format", "graph6"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().next().unwrap(), format!("{kind} {value}"));
    }
}

#[test]
fn convert_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = generate(dir.path(), "L(13)", "graph6");
    let el = dir.path().join("l13.el").to_str().unwrap().to_string();
    let back = dir.path().join("back.g6").to_str().unwrap().to_string();
    let args = ["convert", "--in", &g6, "--format-in", "graph6", "--format-out", "edgelist", "--out", &el];
    assert_eq!(dtdom(&args).0, EXIT_OK);
    let args = ["convert", "--in", &el, "--format-in", "edgelist", "--format-out", "graph6", "--out", &back];
    assert_eq!(dtdom(&args).0, EXIT_OK);
    assert_eq!(std::fs::read(&g6).unwrap(), std::fs::read(&back).unwrap());
}

#[test]
fn construct_reports_method_and_refuses_exceptional() {
    let dir = tempfile::tempdir().unwrap();
    let h2 = generate(dir.path(), "H(2)", "edgelist");
    let (code, out, _) = dtdom(&["construct", "--in", &h2]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("size 8\n") && out.contains("method proof-path\n"), "{out}");
    let p6 = generate(dir.path(), "P(6)", "edgelist");
    let (code, _, err) = dtdom(&["construct", "--in", &p6]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("P(6)") && err.lines().count() == 1, "{err}");
    let t3 = generate(dir.path(), "T(3)", "edgelist");
    assert_eq!(dtdom(&["construct", "--in", &t3]).0, EXIT_INPUT);
}

#[test]
fn verify_census_passes() {
    let (code, out, _) = dtdom(&["verify", "--theorem", "census7", "--jobs", "2"]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["counts"]["gt4"], 20);
    assert_eq!(report["counts"]["gt4_clawfree"], 12);
    assert_eq!(report["counts"]["gt4_clawfree_dtd4"], 6);
}

#[test]
fn enumerate_output_is_independent_of_jobs() {
    let one = dtdom(&["enumerate", "--n", "6", "--class", "clawfree", "--jobs", "1"]);
    let four = dtdom(&["enumerate", "--n", "6", "--class", "clawfree", "--jobs", "4"]);
    assert_eq!(one.0, EXIT_OK);
    assert_eq!(one.1, four.1);
    assert_eq!(one.1.lines().count(), 50);
    assert_eq!(dtdom(&["enumerate", "--n", "9", "--class", "trees"]).1.lines().count(), 47);
}

#[test]
fn diagnostics_name_the_bad_token() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = generate(dir.path(), "C(5)", "edgelist");
    let (code, _, err) = dtdom(&["check-set", "--kind", "dtd", "--in", &c5, "--set", "0,zz"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("'zz'"));
    let (code, _, err) = dtdom(&["generate", "--family", "Q(3)"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("Q(3)"));
    let iso = dir.path().join("iso.el");
    std::fs::write(&iso, "3 1\n0 1\n").unwrap();
    let (code, _, err) = dtdom(&["compute", "--kind", "tdom", "--in", iso.to_str().unwrap()]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("vertex 2"));
    let (code, _, _) = dtdom(&["compute", "--kind", "dtd", "--in", "/nonexistent/file"]);
    assert_eq!(code, EXIT_INPUT);
    assert_eq!(dtdom(&["frobnicate"]).0, EXIT_INPUT);
}
