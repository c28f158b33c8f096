use std::path::Path;
use std::process::{Command, Output};

fn sombor(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sombor"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_single_line_error(o: &Output, code: i32, tag: &str) {
    assert_eq!(o.status.code(), Some(code), "{}", stderr(o));
    let err = stderr(o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with(&format!("error[{tag}]: ")), "{err}");
}

#[test]
fn generate_ladder_writes_file_and_counts() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(
        &["generate", "--family", "ladder", "--n", "4", "--out", "l.txt"],
        dir.path(),
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "vertices=8 edges=10\n");
    let text = std::fs::read_to_string(dir.path().join("l.txt")).unwrap();
    assert!(text.starts_with("n 8\n"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn generate_single_vertex_path() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(&["generate", "--family", "path", "--n", "1"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n 1\n");
    assert_eq!(stderr(&o), "vertices=1 edges=0\n");
}

#[test]
fn generate_rejects_small_windmill() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(
        &["generate", "--family", "windmill", "--n", "2", "--m", "3"],
        dir.path(),
    );
    assert_single_line_error(&o, 2, "input");
    assert!(stderr(&o).contains("n >= 3"));
    let o = sombor(&["generate", "--family", "hypercube", "--n", "3"], dir.path());
    assert_single_line_error(&o, 2, "input");
}

#[test]
fn compute_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(
        &["compute", "--family", "path", "--n", "12", "--indices", "so1"],
        dir.path(),
    );
    assert_eq!(stdout(&o), "so1\t3\n");
    let o = sombor(
        &[
            "compute",
            "--family",
            "cycle",
            "--n",
            "30",
            "--indices",
            "so1,so2,so5,so6",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&o), "so1\t0\nso2\t0\nso5\t0\nso6\t0\n");
    let o = sombor(
        &[
            "compute",
            "--family",
            "tri-chain",
            "--n",
            "3",
            "--indices",
            "so1",
            "--profile",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&o), "so1\t36\nprofile\t{(2,2):2, (2,4):6, (4,4):1}\n");
}

#[test]
fn compute_reads_files_and_rejects_isolated_vertices() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p3.txt"), "# path\n0 1\n1 2\n").unwrap();
    let o = sombor(&["compute", "--input", "p3.txt", "--indices", "so1,so2"], dir.path());
    assert_eq!(stdout(&o), "so1\t3\nso2\t1.2\n");
    std::fs::write(dir.path().join("iso.txt"), "n 3\n0 1\n").unwrap();
    let o = sombor(&["compute", "--input", "iso.txt"], dir.path());
    assert_single_line_error(&o, 2, "input");
    std::fs::write(dir.path().join("bad.txt"), "0 1\n1 x\n").unwrap();
    let o = sombor(&["compute", "--input", "bad.txt"], dir.path());
    assert_single_line_error(&o, 2, "input");
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(
        &[
            "verify",
            "--families",
            "cactus",
            "--n",
            "2..30",
            "--sources",
            "cactus-so1",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    assert!(stderr(&o).ends_with("mismatches=0\n"));
    assert!(!stdout(&o).contains(",mismatch,"));

    let o = sombor(
        &["verify", "--families", "grid", "--m", "6..10", "--n", "6..10"],
        dir.path(),
    );
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("family,index,n,m,engine,formula,rel_diff,verdict,source\n"));
    assert!(out.contains("grid,so1,6,6,76,152,0.5,mismatch,grid\n"));

    let o = sombor(&["verify", "--families", "path"], dir.path());
    assert!(!stdout(&o).contains(",mismatch,"));

    let o = sombor(&["verify", "--families", "grid", "--fail-on-mismatch"], dir.path());
    assert_eq!(o.status.code(), Some(4));
    let o = sombor(
        &[
            "verify",
            "--verified-only",
            "--fail-on-mismatch",
            "--out",
            "v.json",
            "--format",
            "json",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn bounds_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(
        &[
            "bounds",
            "--check",
            "edge-del-so1",
            "--family",
            "path",
            "--n",
            "4",
            "--edge",
            "1",
            "2",
            "--format",
            "csv",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "bound,instance,lhs,rhs,slack,verdict,preconditions_met\nedge-del-so1,path n=4 e=1-2,3,-1.5,4.5,holds,true\n"
    );

    let o = sombor(
        &[
            "bounds",
            "--check",
            "edge-del-so1",
            "--family",
            "cycle",
            "--n",
            "5",
            "--edge",
            "0",
            "1",
        ],
        dir.path(),
    );
    assert_single_line_error(&o, 2, "precondition");

    let o = sombor(
        &[
            "bounds",
            "--check",
            "link-so1",
            "--monomer",
            "path:3",
            "--monomer",
            "path:3",
            "--monomer",
            "path:3",
            "--anchor",
            "0:2",
            "--anchor",
            "0:2",
            "--anchor",
            "0:2",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("\"verdict\":\"violated\""));

    let o = sombor(&["bounds", "--check", "link-so1", "--monomer", "cycle:3"], dir.path());
    assert_single_line_error(&o, 2, "input");

    let o = sombor(
        &["bounds", "--check", "sandwich-so3", "--family", "cycle", "--n", "8"],
        dir.path(),
    );
    assert!(stdout(&o).contains("\"verdict\":\"tight\""));

    let o = sombor(&["bounds", "--check", "fuzz", "--count", "5"], dir.path());
    assert_single_line_error(&o, 2, "input");
    let o = sombor(
        &["bounds", "--check", "fuzz", "--seed", "1", "--count", "0"],
        dir.path(),
    );
    assert_single_line_error(&o, 2, "input");
}

#[test]
fn fuzz_summary_has_no_sandwich_violations() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(
        &[
            "bounds", "--check", "fuzz", "--seed", "1", "--count", "500", "--out", "r.jsonl",
        ],
        dir.path(),
    );
    let summary = stdout(&o);
    assert!(summary.starts_with("bound,evaluated,holds,tight,violated,skipped\n"));
    for line in summary
        .lines()
        .filter(|l| l.starts_with("sandwich") || l.starts_with("upper"))
    {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[4], "0", "{line}");
    }
    let reports = std::fs::read_to_string(dir.path().join("r.jsonl")).unwrap();
    let violated = reports.lines().any(|l| l.contains("\"verdict\":\"violated\""));
    assert_eq!(o.status.code(), Some(if violated { 3 } else { 0 }));
}

#[test]
fn table_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(&["table", "--which", "t3", "--n", "5"], dir.path());
    let out = stdout(&o);
    let header: Vec<&str> = out.lines().next().unwrap().split(',').collect();
    let col = header.iter().position(|&h| h == "so2_engine").unwrap();
    let tri = out.lines().find(|l| l.starts_with("tri-chain,5,")).unwrap();
    let fields: Vec<&str> = tri.split(',').collect();
    assert_eq!(fields[col], "6");
    assert_eq!(fields[col + 1], "6");

    let o = sombor(&["table", "--which", "thm21", "--n", "10"], dir.path());
    assert!(stdout(&o).contains("ladder,10,,10,10,match\n"));

    let o = sombor(&["table", "--which", "grid", "--m", "6", "--n", "6"], dir.path());
    assert!(stdout(&o).contains("grid,6,6,76,152,mismatch,"));

    let o = sombor(&["table", "--which", "t9"], dir.path());
    assert_single_line_error(&o, 2, "input");
}

#[test]
fn usage_errors_are_single_lines() {
    let dir = tempfile::tempdir().unwrap();
    let o = sombor(&["frobnicate"], dir.path());
    assert_single_line_error(&o, 2, "usage");
    let o = sombor(&["compute", "--family", "path", "--n", "x"], dir.path());
    assert_single_line_error(&o, 2, "usage");
}
