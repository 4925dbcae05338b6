use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/specs").join(name)
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alternant"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn params_lines() {
    let goppa = spec("goppa19.toml");
    let o = run(&["params", "--code", goppa.to_str().unwrap()], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("n=19 k=7 t=3 rate=7/19"), "{}", stdout(&o));

    let prs = spec("prs31.toml");
    let o = run(&["params", "--code", prs.to_str().unwrap()], "");
    assert!(stdout(&o).lines().any(|l| l == "[30,20,11]"));

    let bch = spec("bch121.toml");
    let o = run(&["params", "--code", bch.to_str().unwrap()], "");
    assert!(stdout(&o).contains("k=86 t=5 rate=86/121"));
}

#[test]
fn decode_one_error_example() {
    let prs = spec("prs13.toml");
    let o = run(&["decode", "--code", prs.to_str().unwrap()], "[0,0,0,0,3,0,0,0,0,0,0,0]\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PGZ: Error positions [4], error values [3]\n[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]\n");
}

#[test]
fn decode_goppa76_with_pgzm() {
    let g = spec("goppa76.toml");
    let mut e = vec!["0"; 76];
    for (p, v) in [(10, "2"), (46, "2"), (56, "1"), (63, "1"), (67, "2")] {
        e[p] = v;
    }
    let line = format!("[{}]\n", e.join(","));
    let o = run(&["decode", "--code", g.to_str().unwrap(), "--alg", "pgzm"], &line);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        "PGZm: Error positions [10, 46, 56, 63, 67], error values [2, 2, 1, 1, 2]"
    );
}

#[test]
fn decode_failure_exit_code() {
    let prs = spec("prs13.toml");
    let o = run(&["decode", "--code", prs.to_str().unwrap()], "[1,1,1,0,0,0,0,0,0,0,0,0]\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("Defective error location"), "{err}");
}

#[test]
fn spec_error_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[field]\np = 13\nextra = 1\n[code]\nkind = \"prs\"\nk = 8\n").unwrap();
    let o = run(&["params", "--code", bad.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(3));
    let missing = dir.path().join("missing.toml");
    let o = run(&["params", "--code", missing.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn budget_exit_code() {
    let bch = spec("bch121.toml");
    let o = run(&["selftest", "--code", bch.to_str().unwrap(), "--trials", "1"], "");
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn corrupt_requires_seed() {
    let prs = spec("prs13.toml");
    let o = run(&["corrupt", "--code", prs.to_str().unwrap()], "");
    assert!(!o.status.success());
}

#[test]
fn corrupt_weight_zero_is_identity() {
    let prs = spec("prs13.toml");
    let x = "[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]\n";
    let o = run(&["corrupt", "--code", prs.to_str().unwrap(), "--seed", "5", "--weight", "0"], x);
    assert_eq!(stdout(&o), x);
}

#[test]
fn pipeline_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let code = spec("goppa19.toml");
    let code = code.to_str().unwrap();
    std::fs::write(p("msg"), "[1,2,3,4,0,1,2]\n[4,4,4,4,4,4,4]\n").unwrap();
    assert!(run(&["encode", "--code", code, "--in", &p("msg"), "--out", &p("x")], "").status.success());
    let args = ["corrupt", "--code", code, "--seed", "11", "--weight", "3", "--in", &p("x"), "--out", &p("y")];
    assert!(run(&args, "").status.success());
    let again = ["corrupt", "--code", code, "--seed", "11", "--weight", "3", "--in", &p("x"), "--out", &p("y2")];
    assert!(run(&again, "").status.success());
    assert_eq!(std::fs::read_to_string(p("y")).unwrap(), std::fs::read_to_string(p("y2")).unwrap());

    let o = run(&["decode", "--code", code, "--in", &p("y")], "");
    assert!(o.status.success());
    let decoded: Vec<String> = stdout(&o).lines().skip(1).step_by(2).map(String::from).collect();
    let sent: Vec<String> = std::fs::read_to_string(p("x")).unwrap().lines().map(String::from).collect();
    assert_eq!(decoded, sent);
}

#[test]
fn wrong_length_input_rejected() {
    let prs = spec("prs13.toml");
    let o = run(&["encode", "--code", prs.to_str().unwrap()], "[1,2,3]\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn demo_passes() {
    let o = run(&["demo"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("8 cases, 0 failed"));
}

#[test]
fn bench_rows() {
    let prs = spec("prs31.toml");
    let o = run(&["bench", "--code", prs.to_str().unwrap(), "--trials", "50", "--weight", "5"], "");
    assert!(o.status.success());
    let rows: Vec<_> = stdout(&o).lines().filter(|l| l.trim_start().starts_with("5 ")).map(String::from).collect();
    assert_eq!(rows.len(), 2, "{rows:?}");

    let o = run(&["bench", "--code", prs.to_str().unwrap(), "--trials", "0"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn selftest_small_code() {
    let prs = spec("prs7.toml");
    let o = run(&["selftest", "--code", prs.to_str().unwrap(), "--trials", "10"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("min distance 4"));
}
