use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maxmatch"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn run(args: &[&str], stdin: &[u8]) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &[u8], env: &[(&str, &str)]) -> Output {
    let mut child = bin()
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn analyze_matches_golden_files() {
    for (input, expected) in [
        ("k4.g6", "analyze_k4.json"),
        ("k5.g6", "analyze_k5.json"),
        ("c6.txt", "analyze_c6.json"),
        ("k14.txt", "analyze_k14.json"),
    ] {
        let o = run(&["analyze", golden(input).to_str().unwrap()], b"");
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let want = std::fs::read_to_string(golden(expected)).unwrap();
        assert_eq!(String::from_utf8(o.stdout).unwrap(), want, "{input}");
    }
}

#[test]
fn decompose_matches_golden_files() {
    for (input, expected) in [
        ("k4.g6", "decompose_k4.json"),
        ("c6.txt", "decompose_c6.json"),
    ] {
        let o = run(&["decompose", golden(input).to_str().unwrap()], b"");
        assert_eq!(code(&o), 0);
        let want = std::fs::read_to_string(golden(expected)).unwrap();
        assert_eq!(String::from_utf8(o.stdout).unwrap(), want, "{input}");
    }
}

#[test]
fn analyze_reads_stdin_in_both_formats() {
    let a = run(&["analyze"], b"0 1\n1 2\n2 3\n");
    assert_eq!(code(&a), 0);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["friendly"], false);
    assert_eq!(v["witness"]["m"], 3);
    assert_eq!(v["witness"]["chi_nu"], 4);
    assert!(v["partition"].is_null());

    let b = run(&["analyze", "--format", "graph6"], b"Ch\n");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["analyze"], b"zzz!")), 2);
    assert_eq!(code(&run(&["analyze"], b"0 1\n0 1\n")), 2);
    assert_eq!(code(&run(&["analyze"], b"n 3\n")), 1);
    assert_eq!(code(&run(&["analyze"], b"n 3\n0 1\n")), 1);
    assert_eq!(code(&run(&["frobnicate"], b"")), 1);
    assert_eq!(code(&run(&["--help"], b"")), 0);
    assert_eq!(code(&run(&["decompose"], b"D~{")), 1);
    assert_eq!(
        code(&run(
            &["construct", "alternative", "--delta", "4", "--nu", "2"],
            b""
        )),
        1
    );
    assert_eq!(
        code(&run(
            &[
                "verify",
                "--suite",
                "uniqueness",
                "--delta",
                "6",
                "--nu",
                "5"
            ],
            b""
        )),
        3
    );
    assert_eq!(
        code(&run(
            &[
                "verify",
                "--suite",
                "bound",
                "--max-vertices",
                "5",
                "--tighten",
                "1"
            ],
            b""
        )),
        4
    );
    assert_eq!(code(&run(&["verify", "--suite", "uniqueness"], b"")), 1);
}

#[test]
fn budget_override_reports_undecided() {
    let petersen = b"0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n";
    let o = run_env(&["analyze"], petersen, &[("MAXMATCH_BUDGET", "1")]);
    assert_eq!(code(&o), 3);
    let o = run_env(&["analyze"], petersen, &[("MAXMATCH_BUDGET", "lots")]);
    assert_eq!(code(&o), 1);
    let o = run(&["analyze"], petersen);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chi_prime"], 4);
    assert_eq!(v["friendly"], false);
}

#[test]
fn allow_isolated_strips_and_keeps_input_ids() {
    let o = run(&["analyze", "--allow-isolated"], b"n 5\n1 2\n2 3\n1 3\n");
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["isolated"], serde_json::json!([0, 4]));
    assert_eq!(v["n"], 5);
    let parts = v["partition"].as_array().unwrap();
    assert_eq!(parts.len(), 3);
    assert_eq!(parts[0], serde_json::json!([[1, 2]]));
}

#[test]
fn construct_outputs() {
    let o = run(
        &["construct", "c", "--delta", "3", "--format", "edge-list"],
        b"",
    );
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("n 5\n"));
    assert_eq!(text.lines().count(), 8);

    let o = run(
        &["construct", "attaining", "--delta", "2", "--nu", "3"],
        b"",
    );
    let g6 = String::from_utf8(o.stdout).unwrap();
    let g = maxmatch_core::format::parse_graph6(g6.trim().as_bytes()).unwrap();
    let k3 = maxmatch_core::Graph::complete(3);
    assert_eq!(g, maxmatch_core::Graph::disjoint_union([&k3, &k3, &k3]));
}
