use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_piercing"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_then_check_pq() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.txt");
    let fam = fam.to_str().unwrap();
    assert!(run(&["gen", "--n", "6", "--out", fam]).status.success());
    let o = run(&["check-pq", "--p", "4", "--q", "3", fam]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds: true"));
}

#[test]
fn generated_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.txt");
    run(&["gen", "--n", "5", "--out", fam.to_str().unwrap()]);
    let text = std::fs::read_to_string(&fam).unwrap();
    let parsed = piercing::io::parse_family(&text).unwrap();
    assert_eq!(piercing::io::serialize_family(&parsed), text);
    assert!(text.contains("region F3\nhalfplane 3 0 2\nhalfplane -3 -1 -2\nend\n"));
}

#[test]
fn gen_from_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.txt");
    std::fs::write(&table, "1/2 -1\n2/3 -2\n3/4 -3\n").unwrap();
    let fam = dir.path().join("fam.txt");
    let ok = run(&["gen", "--n", "5", "--table", table.to_str().unwrap(), "--out", fam.to_str().unwrap()]);
    assert!(ok.status.success());
    let too_long = run(&["gen", "--n", "6", "--table", table.to_str().unwrap(), "--out", fam.to_str().unwrap()]);
    assert_eq!(too_long.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&too_long.stderr).contains("BAD_SEQUENCE"));
}

#[test]
fn pierce_prefix_ten() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.txt");
    run(&["gen", "--n", "10", "--out", fam.to_str().unwrap()]);
    let o = run(&["pierce", fam.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("tau: 2\n"));
    let budget = run(&["pierce", fam.to_str().unwrap(), "--max-size", "1"]);
    assert_eq!(budget.status.code(), Some(1));
}

#[test]
fn escape_report() {
    let o = run(&["escape", "--x", "0", "--y", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("escapeIndex: 7\n"));
    let o = run(&["escape", "--x", "-3/2", "--y", "1/2"]);
    assert!(o.status.success());
}

#[test]
fn certify_points() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("p.txt");
    std::fs::write(&pts, "0 5\n1/2 0\n").unwrap();
    let o = run(&["certify-unpierceable", "--points", pts.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("missed region: F7\n"));
}

#[test]
fn reduction_on_wedges_with_compacta() {
    let f = fixture("wedges6_compacta.txt");
    let o = run(&["theorem2", f.to_str().unwrap(), "--a", "A", "--b", "B"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("boundSatisfied: true"));
    assert!(out.contains("transversal pierces original: true"));
    let demo = fixture("boxes_and_bands.txt");
    let o = run(&["theorem2", demo.to_str().unwrap(), "--a", "A", "--b", "B"]);
    assert!(stdout(&o).contains("tau: 2\n"));
}

#[test]
fn reduction_hypothesis_failures() {
    let f = fixture("disjoint_squares.txt");
    let o = run(&["theorem2", f.to_str().unwrap(), "--a", "A", "--b", "B"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("HYPOTHESIS_VIOLATED"));
    let w = fixture("wedges6_compacta.txt");
    let o = run(&["theorem2", w.to_str().unwrap(), "--a", "F1", "--b", "F2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["theorem2", w.to_str().unwrap(), "--a", "A", "--b", "F3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn pq_violation_exit_code() {
    let f = fixture("disjoint_squares.txt");
    let o = run(&["check-pq", "--p", "4", "--q", "3", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation: {A, B, C, P}"));
    let o = run(&["check-pq", "--p", "5", "--q", "3", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn radon_with_negative_coordinates() {
    let o = run(&["radon", "-1", "0", "1", "0", "0", "-1", "0", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "partA: {1, 2}\npartB: {3, 4}\ncommonPoint: (0, 0)\n");
    assert_eq!(run(&["radon", "1", "2"]).status.code(), Some(2));
}

#[test]
fn parse_errors_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "family t\nregion R\nhalfplane 0 0 1\nend\n").unwrap();
    let o = run(&["pierce", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PARSE_ERROR at line 3"));
    assert_eq!(run(&["pierce", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn render_draws_one_shape_per_region() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("out.svg");
    let f = fixture("wedges6_compacta.txt");
    let o = run(&["render", f.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    let shapes = text.matches("<polygon").count() + text.matches("<circle").count();
    assert_eq!(shapes, 8);
    let o = run(&[
        "render", f.to_str().unwrap(), "--out", svg.to_str().unwrap(), "--clip-box", "-2", "-1", "2", "20",
    ]);
    assert!(o.status.success());
    let o = run(&["render", f.to_str().unwrap(), "--out", svg.to_str().unwrap(), "--clip-box", "2", "0", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let f = fixture("wedges6_compacta.txt");
    let a = run(&["theorem2", f.to_str().unwrap(), "--a", "A", "--b", "B"]);
    let b = run(&["theorem2", f.to_str().unwrap(), "--a", "A", "--b", "B"]);
    assert_eq!(a.stdout, b.stdout);
}
