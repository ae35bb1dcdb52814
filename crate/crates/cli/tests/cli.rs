//! End-to-end tests of the binary: output formats, exit codes, and the
//! stdin/argument equivalence every graph-reading subcommand promises.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn trispec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trispec")).args(args).output().expect("binary runs")
}

fn trispec_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trispec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn spectrum_of_k4() {
    let out = trispec(&["spectrum", "C~"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3.000000000000, -1.000000000000, -1.000000000000, -1.000000000000");
}

#[test]
fn stdin_and_args_agree() {
    for sub in ["spectrum", "classify", "scan-forbidden", "base", "blockgraph"] {
        let graph = if sub == "blockgraph" { "Bw" } else { "Dts" }; // K3 / F11
        let a = trispec(&[sub, graph]);
        let b = trispec_stdin(&[sub], &format!("{graph}\n"));
        assert_eq!(stdout(&a), stdout(&b), "{sub}");
        assert_eq!(a.status.code(), b.status.code(), "{sub}");
    }
}

#[test]
fn generate_classify_pipeline() {
    let g6 = stdout(&trispec(&["generate", "t3", "2"]));
    let out = trispec_stdin(&["classify", "--verify"], &g6);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("accepted, witness t3 k=2"), "{text}");
    assert!(text.contains("agreement true"), "{text}");
}

#[test]
fn classify_json_is_single_line_json() {
    let out = trispec(&["classify", "--verify", "--json", "Dts"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with('{') && lines[0].ends_with('}'));
    assert!(lines[0].contains("\"accepted\":false"));
    assert!(lines[0].contains("forbidden_subgraph"));
}

#[test]
fn scan_forbidden_reports_pattern_and_subset() {
    // F5 contains itself.
    let g6 = stdout(&trispec(&["generate", "f", "5"]));
    let out = trispec_stdin(&["scan-forbidden"], &g6);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"pattern\":\"F_5\""), "{text}");
    assert!(text.contains("\"subset\":[0,1,2,3,4,5]"), "{text}");
}

#[test]
fn base_subcommand_types_t3() {
    let g6 = stdout(&trispec(&["generate", "t3", "4"]));
    let out = trispec_stdin(&["base", "--json"], &g6);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"label\":\"G3_4\""));
}

#[test]
fn blockgraph_subcommand_on_star_and_cycle() {
    let out = trispec(&["blockgraph", "--json", "Cs"]); // K_{1,3}
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"block_star\":true"), "{text}");
    assert!(text.contains("\"lambda2_below\":true"), "{text}");

    let out = trispec(&["blockgraph", "--json", "Cl"]); // C4
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"block_graph\":false"));
}

#[test]
fn enumerate_emits_canonical_corpus() {
    let out = trispec(&["enumerate", "--n", "5", "--m", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim().lines().count(), 4);

    let out = trispec(&["enumerate", "--n", "5", "--m", "7", "--json"]);
    assert_eq!(stdout(&out).trim(), "{\"n\":5,\"m\":7,\"classes\":4}");
}

#[test]
fn exit_codes() {
    // Domain error: disconnected graph for spectrum.
    let out = trispec(&["spectrum", "A?"]);
    assert_eq!(out.status.code(), Some(1));
    // Domain error: non-tricyclic input for classify.
    let out = trispec(&["classify", "Bw"]);
    assert_eq!(out.status.code(), Some(1));
    // Usage error: unknown subcommand.
    let out = trispec(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
    // Usage error: bad polycheck family.
    let out = trispec(&["polycheck", "t9", "--range", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
    // Guard trips without --allow-large.
    let out = trispec(&["enumerate", "--n", "9", "--m", "11"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_theorem_small_and_polycheck() {
    let out = trispec(&["check-theorem", "--max-n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n=4:") && text.contains("disagreements=0"), "{text}");

    let out = trispec(&["polycheck", "t4", "--range", "1..20"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "20/20 coefficient identities hold");

    let out = trispec(&["polycheck", "t3", "--range", "1..20"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "20/20 coefficient identities hold");
}

#[test]
fn tolerance_env_override_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_trispec"))
        .env("TRISPEC_TOL", "1e-6")
        .args(["classify", "--verify"]) // F12 via stdin
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.as_mut().unwrap().write_all(b"Dvc\n")?;
            c.wait_with_output()
        })
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("agreement true"));
}
