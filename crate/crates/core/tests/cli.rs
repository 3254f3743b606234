use std::fs;
use std::path::Path;

use packtriple::cli::main_with;
use packtriple::format::{parse_triple, parse_witness};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["packtriple"];
    full.extend_from_slice(args);
    let code = main_with(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn solve_prints_a_checked_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = "# path against an edge\ntriple 3\ng1 0 1\ng1 1 2\ng2 0 1\ng3 0 2\n";
    let file = write(dir.path(), "t.triple", text);
    let t = parse_triple(text).unwrap();
    for method in ["brute", "backtrack", "constructive"] {
        let (code, out, _) = run(&["solve", &file, "--method", method]);
        assert_eq!(code, 0, "{method}");
        let f = parse_witness(out.trim()).unwrap();
        assert!(t.is_packing(&f).unwrap());
    }
}

#[test]
fn solve_reports_no_packing_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(&["badpairs", "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    for i in 1..=7 {
        let file = dir.path().join(format!("be{i}.triple"));
        let (code, out, _) = run(&["solve", file.to_str().unwrap()]);
        assert_eq!((code, out.as_str()), (1, "no-packing\n"), "pair {i}");
    }
}

#[test]
fn check_prints_one_line_per_condition() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "t.triple", "triple 4\ng1 0 1\ng2 2 3\n");
    let (code, out, _) = run(&["check", &file]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    for (line, name) in lines.iter().zip(["ss_product", "lemma7", "cor8", "be"]) {
        assert!(line.starts_with(name), "{line}");
    }
}

#[test]
fn gen_writes_families() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.triple");
    let (code, _, _) =
        run(&["gen", "--family", "FIG2D", "--n", "6", "--m", "4", "--mp", "4", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let t = parse_triple(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(t.counts().edge_sum(), 10);
    let (code, out, _) = run(&["gen", "--family", "kk_clique", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(parse_triple(&out).unwrap().n(), 6);
    let (code, _, err) = run(&["gen", "--family", "FIG2E", "--n", "5"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn verify_summary_and_counterexample_exit_codes() {
    let (code, out, _) = run(&["verify", "--theorem", "be", "--n", "4", "--exhaustive", "--summary"]);
    assert_eq!(code, 0);
    assert_eq!(out, "theorem=be n=4 checked=122438 counterexamples=0\n");
    let (code, out, _) = run(&[
        "verify", "--theorem", "ss_product", "--n", "8", "--samples", "500", "--seed", "3", "--caps", "1,2,1",
        "--workers", "3", "--constructive",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("instances_checked: 500"));
    assert!(out.contains("wall_time_ms:"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["solve", "/nonexistent/file"]).0, 2);
    assert_eq!(run(&["verify", "--theorem", "nope", "--n", "3"]).0, 2);
    assert_eq!(run(&["verify", "--theorem", "be", "--n", "4", "--samples", "5"]).0, 2);
    assert_eq!(run(&["verify", "--theorem", "be", "--n", "4", "--caps", "1,2"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
}

#[test]
fn parse_errors_name_the_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.triple", "triple 3\ng1 0 7\n");
    let (code, _, err) = run(&["solve", &file]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.triple"), "{err}");
}
