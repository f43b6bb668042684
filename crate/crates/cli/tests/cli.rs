//! End-to-end tests of the `hgq` binary: exact output bytes for the
//! pinned examples, exit-code contract, strict mode, guard overrides, and
//! determinism across thread counts.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hgq(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hgq"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(stdin.unwrap_or("").as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("stderr is UTF-8")
}

#[test]
fn psi_of_an_edge() {
    let out = hgq(&["psi"], Some(r#"{"n":2,"edges":[[1,2]]}"#));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "{\"degree\":2,\"terms\":[{\"composition\":[1,1],\"poly\":[2]},{\"composition\":[2],\"poly\":[0,1]}]}\n"
    );
}

#[test]
fn pitman_stanley_fpoly_is_a_cube() {
    let out = hgq(&["family", "pitman-stanley", "4", "fpoly"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "{\"f\":[16,32,24,8,1]}\n");
}

#[test]
fn pipelines_emit_identical_documents() {
    let algebraic = hgq(&["family", "uniform", "4", "2", "fpoly"], None);
    let geometric = hgq(&["family", "uniform", "4", "2", "fpoly-oracle"], None);
    assert_eq!(algebraic.status.code(), Some(0));
    assert_eq!(geometric.status.code(), Some(0));
    assert_eq!(stdout_of(&algebraic), "{\"f\":[24,36,14,1]}\n");
    assert_eq!(stdout_of(&algebraic), stdout_of(&geometric));
}

#[test]
fn verify_theorem_exhaustively_on_three_vertices() {
    let out = hgq(&["verify-theorem", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "{\"checked\":208,\"mismatches\":0}\n");
}

#[test]
fn verify_hopf_reports_counts() {
    let out = hgq(&["verify-hopf", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "{\"checked\":6,\"mismatches\":0}\n");
}

#[test]
fn randomized_sweeps_are_seed_reproducible() {
    let a = hgq(
        &["verify-theorem", "5", "--random", "4", "--seed", "7"],
        None,
    );
    let b = hgq(
        &["verify-theorem", "5", "--random", "4", "--seed", "7"],
        None,
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn output_is_independent_of_thread_count() {
    let one = hgq(&["verify-theorem", "4", "--threads", "1"], None);
    let many = hgq(&["verify-theorem", "4", "--threads", "8"], None);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(many.status.code(), Some(0));
    assert_eq!(stdout_of(&one), stdout_of(&many));
    assert_eq!(stdout_of(&one), "{\"checked\":153600,\"mismatches\":0}\n");
}

#[test]
fn vertices_and_faces_of_a_segment() {
    let doc = r#"{"n":2,"edges":[[1,2]]}"#;
    let vertices = hgq(&["vertices"], Some(doc));
    assert_eq!(stdout_of(&vertices), "{\"vertices\":[[1,2],[2,1]]}\n");
    let faces = hgq(&["faces"], Some(doc));
    assert_eq!(
        stdout_of(&faces),
        "{\"faces\":[{\"dim\":0,\"vertex_ids\":[0]},{\"dim\":0,\"vertex_ids\":[1]},{\"dim\":1,\"vertex_ids\":[0,1]}]}\n"
    );
}

#[test]
fn hopf_commands_emit_canonical_terms() {
    let doc = r#"{"n":2,"edges":[[1,2]]}"#;
    let antipode = hgq(&["antipode"], Some(doc));
    assert_eq!(
        stdout_of(&antipode),
        "{\"terms\":[{\"hypergraph\":{\"edges\":[[1],[2]],\"n\":2},\"poly\":[2]},{\"hypergraph\":{\"edges\":[[1],[2],[1,2]],\"n\":2},\"poly\":[-1]}]}\n"
    );
    let coproduct = hgq(&["coproduct"], Some(doc));
    assert_eq!(
        stdout_of(&coproduct),
        "{\"terms\":[{\"left\":{\"edges\":[],\"n\":0},\"poly\":[1],\"right\":{\"edges\":[[1],[2],[1,2]],\"n\":2}},{\"left\":{\"edges\":[[1]],\"n\":1},\"poly\":[2],\"right\":{\"edges\":[[1]],\"n\":1}},{\"left\":{\"edges\":[[1],[2],[1,2]],\"n\":2},\"poly\":[1],\"right\":{\"edges\":[],\"n\":0}}]}\n"
    );
}

#[test]
fn q_evaluation_collapses_polynomials() {
    let out = hgq(
        &["family", "pitman-stanley", "4", "fpoly", "--q", "2"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "{\"f\":256}\n");
}

#[test]
fn graph_and_complex_families() {
    let path = hgq(&["family", "graph", "3", "1,2;2,3", "fpoly"], None);
    assert_eq!(stdout_of(&path), "{\"f\":[4,4,1]}\n");

    // a complex and its 1-skeleton produce the same invariant
    let complex = hgq(&["family", "complex", "4", "1,2,3;3,4", "psi"], None);
    let skeleton = hgq(&["family", "graph", "4", "1,2;1,3;2,3;3,4", "psi"], None);
    assert_eq!(complex.status.code(), Some(0));
    assert_eq!(stdout_of(&complex), stdout_of(&skeleton));
}

#[test]
fn input_errors_exit_one_with_distinct_messages() {
    let out_of_range = hgq(&["psi"], Some(r#"{"n":2,"edges":[[3]]}"#));
    assert_eq!(out_of_range.status.code(), Some(1));
    assert!(stderr_of(&out_of_range).contains("vertex 3 out of range"));

    let empty_edge = hgq(&["psi"], Some(r#"{"n":2,"edges":[[]]}"#));
    assert_eq!(empty_edge.status.code(), Some(1));
    assert!(stderr_of(&empty_edge).contains("empty"));

    let malformed = hgq(&["psi"], Some("{not json"));
    assert_eq!(malformed.status.code(), Some(1));
    assert!(stderr_of(&malformed).contains("malformed input document"));

    let bad_pair = hgq(&["family", "graph", "3", "1,2,3", "fpoly"], None);
    assert_eq!(bad_pair.status.code(), Some(1));
    assert!(stderr_of(&bad_pair).contains("exactly two vertices"));

    let bad_family = hgq(&["family", "uniform", "3", "9", "fpoly"], None);
    assert_eq!(bad_family.status.code(), Some(1));

    let usage = hgq(&["no-such-command"], None);
    assert_eq!(usage.status.code(), Some(1));
}

#[test]
fn strict_mode_requires_listed_singletons() {
    let bare = r#"{"n":2,"edges":[[1,2]]}"#;
    let flagged = hgq(&["psi", "--strict"], Some(bare));
    assert_eq!(flagged.status.code(), Some(1));
    assert!(stderr_of(&flagged).contains("singleton"));

    let in_document = hgq(&["psi"], Some(r#"{"n":2,"edges":[[1,2]],"strict":true}"#));
    assert_eq!(in_document.status.code(), Some(1));

    let complete_doc = r#"{"n":2,"edges":[[1],[2],[1,2]]}"#;
    let ok = hgq(&["psi", "--strict"], Some(complete_doc));
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn guards_exit_three_and_can_be_raised() {
    let doc = r#"{"n":8,"edges":[]}"#;
    let blocked = hgq(&["vertices"], Some(doc));
    assert_eq!(blocked.status.code(), Some(3));
    assert!(stderr_of(&blocked).contains("guard"));

    let raised = hgq(&["vertices", "--guard-n", "8"], Some(doc));
    assert_eq!(raised.status.code(), Some(0));
    assert_eq!(stdout_of(&raised), "{\"vertices\":[[1,1,1,1,1,1,1,1]]}\n");

    let psi_blocked = hgq(&["psi"], Some(r#"{"n":9,"edges":[]}"#));
    assert_eq!(psi_blocked.status.code(), Some(3));
}

#[test]
fn output_flag_writes_the_document_to_a_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("segment-f.json");
    let path_str = path.to_str().expect("tmpdir path is UTF-8");
    let out = hgq(
        &["fpoly", "--output", path_str],
        Some(r#"{"n":2,"edges":[[1,2]]}"#),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "");
    assert_eq!(
        std::fs::read_to_string(&path).expect("output file exists"),
        "{\"f\":[2,1]}\n"
    );
}

#[test]
fn help_and_version_exit_zero() {
    let help = hgq(&["--help"], None);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout_of(&help).contains("hgq"));
    let version = hgq(&["--version"], None);
    assert_eq!(version.status.code(), Some(0));
}
