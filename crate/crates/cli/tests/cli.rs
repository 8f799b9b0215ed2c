use std::io::Write;
use std::process::{Command, Output, Stdio};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data");

fn mpersp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpersp")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn table_matches_golden_file() {
    let golden = std::fs::read_to_string(data("two_triangles_table.tsv")).unwrap();
    for fixture in ["two_triangles.txt", "two_triangles_graph.txt"] {
        let o = mpersp(&["table", "--input", &data(fixture)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), golden);
    }
}

#[test]
fn every_method_prints_the_same_polynomial() {
    let expected = std::fs::read_to_string(data("two_triangles_polynomial.txt")).unwrap();
    for method in ["activities", "compatible", "rank-gen"] {
        let o = mpersp(&["tutte", "--method", method, "--input", &data("two_triangles.txt")]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), expected);
    }
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mpersp"))
        .arg("compatible")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"elements: 2\nmatroid M bases: {1}\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{2}\n");
}

#[test]
fn check_passes_on_fixture() {
    let o = mpersp(&["check", "--seed", "3", "--input", &data("two_triangles.txt")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all 11 checks passed\n"));
}

#[test]
fn corrupted_matroid_is_an_input_error() {
    let o = mpersp(&["tutte", "--input", &data("two_triangles_corrupted.txt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: "), "{}", stderr(&o));
}

#[test]
fn non_perspective_exit_codes() {
    let o = mpersp(&["table", "--input", &data("not_perspective.txt")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("{1,2,3}"), "{}", stderr(&o));
    let o = mpersp(&["check", "--input", &data("not_perspective.txt")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("FAIL perspective"));
}

#[test]
fn help_succeeds() {
    let o = mpersp(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("tutte"));
}

#[test]
fn usage_errors() {
    assert_eq!(
        mpersp(&["tutte", "--method", "bogus", "--input", &data("two_triangles.txt")])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        mpersp(&["table", "--input", &data("missing.txt")]).status.code(),
        Some(1)
    );
}
