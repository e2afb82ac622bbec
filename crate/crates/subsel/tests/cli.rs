//! End-to-end tests of the command-line interface: exit codes, output
//! formats, batch replay and the self-verification command.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn subsel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subsel"))
        .args(args)
        .output()
        .expect("failed to spawn subsel")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn build_index(dir: &Path, text: &[u8], tau: &str) -> std::path::PathBuf {
    let input = dir.join("text.bin");
    let output = dir.join("text.idx");
    fs::write(&input, text).unwrap();
    let out = subsel(&[
        "build",
        "--input",
        input.to_str().unwrap(),
        "--tau",
        tau,
        "--output",
        output.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "build failed: {}", String::from_utf8_lossy(&out.stderr));
    output
}

#[test]
fn build_reports_and_writes() {
    let dir = tempfile::tempdir().unwrap();
    let idx = build_index(dir.path(), b"banana", "1");
    let meta = fs::metadata(&idx).unwrap();
    assert!(meta.len() > 0);
}

#[test]
fn build_missing_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = subsel(&[
        "build",
        "--input",
        dir.path().join("nope.bin").to_str().unwrap(),
        "--output",
        dir.path().join("x.idx").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_empty_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.bin");
    fs::write(&input, b"").unwrap();
    let out = subsel(&[
        "build",
        "--input",
        input.to_str().unwrap(),
        "--output",
        dir.path().join("x.idx").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn build_clamps_tau_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.bin");
    fs::write(&input, vec![b'a'; 64]).unwrap();
    let out = subsel(&[
        "build",
        "--input",
        input.to_str().unwrap(),
        "--tau",
        "99",
        "--output",
        dir.path().join("t.idx").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("tau: 6"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("clamped"));
}

#[test]
fn query_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let idx = build_index(dir.path(), b"banana", "1");
    let idx = idx.to_str().unwrap();

    let out = subsel(&["query", "--index", idx, "select", "1", "6", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\t3\n");

    let out = subsel(&["query", "--index", idx, "minsuf", "3", "3"]);
    assert_eq!(stdout(&out), "3\t1\n");

    let out = subsel(&["query", "--index", idx, "lyndon", "1", "6"]);
    assert_eq!(stdout(&out), "1\t1\t1\n2\t2\t2\n6\t1\t1\n");

    let out = subsel(&["query", "--index", idx, "psq", "2", "6", "1", "6"]);
    assert_eq!(stdout(&out), "1\t1\t1\n3\t1\t1\n5\t1\t1\n");
}

#[test]
fn query_maxsuf_on_paper_string() {
    let dir = tempfile::tempdir().unwrap();
    let idx = build_index(dir.path(), b"dcccabab", "1");
    let out = subsel(&["query", "--index", idx.to_str().unwrap(), "maxsuf", "5", "8"]);
    assert_eq!(stdout(&out), "6\t3\n");
}

#[test]
fn query_bad_bounds_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let idx = build_index(dir.path(), b"banana", "1");
    let idx = idx.to_str().unwrap();
    for bad in [
        vec!["minsuf", "0", "3"],
        vec!["minsuf", "4", "2"],
        vec!["minsuf", "1", "7"],
        vec!["select", "1", "6", "7"],
        vec!["select", "1", "6", "0"],
        vec!["frobnicate", "1", "2"],
        vec!["select", "1", "x", "1"],
    ] {
        let mut args = vec!["query", "--index", idx];
        args.extend(bad.iter());
        let out = subsel(&args);
        assert_eq!(out.status.code(), Some(4), "args {bad:?}");
    }
}

#[test]
fn query_corrupt_index_exit_5() {
    let dir = tempfile::tempdir().unwrap();
    let idx = build_index(dir.path(), b"banana", "1");
    let mut bytes = fs::read(&idx).unwrap();
    let last = bytes.len() - 1;
    bytes[last] ^= 0xff;
    fs::write(&idx, &bytes).unwrap();
    let out = subsel(&["query", "--index", idx.to_str().unwrap(), "minsuf", "1", "6"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn batch_streams_and_reports_bad_lines() {
    let dir = tempfile::tempdir().unwrap();
    let idx = build_index(dir.path(), b"banana", "1");
    let ops = dir.path().join("ops.txt");
    fs::write(&ops, "minsuf 1 6\nselect 1 6 2\n\nlyndon 1 6\n").unwrap();
    let out = subsel(&[
        "batch",
        "--index",
        idx.to_str().unwrap(),
        "--ops",
        ops.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "6\t1\n4\t3\n1\t1\t1\n2\t2\t2\n6\t1\t1\n");

    // empty batch: zero output lines, exit 0
    fs::write(&ops, "").unwrap();
    let out = subsel(&[
        "batch",
        "--index",
        idx.to_str().unwrap(),
        "--ops",
        ops.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");

    // malformed line reported with its number
    fs::write(&ops, "minsuf 1 6\nbogus 1 2\n").unwrap();
    let out = subsel(&[
        "batch",
        "--index",
        idx.to_str().unwrap(),
        "--ops",
        ops.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn verify_small_corpus_passes() {
    let out = subsel(&["verify", "--max-n", "24", "--seeds", "2", "--alphabets", "2,26"]);
    assert!(
        out.status.success(),
        "verify failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let s = stdout(&out);
    assert!(s.contains("all queries agree with oracles"), "{s}");
}

#[test]
fn bench_runs() {
    let dir = tempfile::tempdir().unwrap();
    let text: Vec<u8> = (0..2000u32).map(|i| b'a' + (i.wrapping_mul(2654435761) % 4) as u8).collect();
    let idx = build_index(dir.path(), &text, "2");
    let out = subsel(&["bench", "--index", idx.to_str().unwrap(), "--queries", "200"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let s = stdout(&out);
    for op in ["minsuf", "maxsuf", "select", "lyndon", "psq", "construction"] {
        assert!(s.contains(op), "missing {op} in report:\n{s}");
    }
}
