//! End-to-end tests of the command-line interface: exit codes, file
//! parsing, JSON round-trips, and deterministic generation.

use std::process::{Command, Output};

fn polyskel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyskel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_file(content: &str, f: impl FnOnce(&str)) {
    let dir = std::env::temp_dir().join(format!("polyskel-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!(
        "input-{:x}.txt",
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::write(&path, content).unwrap();
    f(path.to_str().unwrap());
    let _ = std::fs::remove_file(path);
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn order_command_passes_on_v_poset() {
    with_file("poset 3\n1 3\n2 3\n", |path| {
        let out = polyskel(&["order", path]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr_str(&out));
        let text = stdout_str(&out);
        assert!(text.contains("vertices: 5"));
        assert!(text.contains("skeleton edges: 8"));
        assert!(text.contains("verdict: PASS"));
    });
}

#[test]
fn order_command_handles_chains() {
    // Chain on 4 elements: the polytope is a simplex with K5 skeleton.
    with_file("poset 4\n1 2\n2 3\n3 4\n", |path| {
        let out = polyskel(&["order", path]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout_str(&out);
        assert!(text.contains("vertices: 5"));
        assert!(text.contains("skeleton edges: 10"));
        assert!(text.contains("verdict: PASS"));
    });
}

#[test]
fn json_report_round_trips_byte_identically() {
    with_file("poset 3\n1 3\n2 3\n", |path| {
        let out = polyskel(&["order", path, "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let json = stdout_str(&out);
        let report = polyskel::report::InstanceReport::from_json(json.trim()).unwrap();
        assert_eq!(report.to_json(), json.trim());
        assert!(report.all_faces);
        assert!(report.counterexample.is_none());
    });
}

#[test]
fn parse_errors_exit_2_with_line_number() {
    with_file("poset 3\n1 2\n2 3\n3 1\n", |path| {
        let out = polyskel(&["order", path]);
        assert_eq!(out.status.code(), Some(2));
        let err = stderr_str(&out);
        assert!(err.contains("line 4"), "stderr: {err}");
        assert!(err.contains("cycle"));
    });
    with_file("poset 2\n1 2\n1 2\n", |path| {
        let out = polyskel(&["order", path]);
        assert_eq!(out.status.code(), Some(2));
        assert!(stderr_str(&out).contains("line 3"));
    });
    let out = polyskel(&["order", "/nonexistent/file.poset"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn imperfect_graph_exits_3_without_unchecked() {
    with_file("graph 5\n1 2\n2 3\n3 4\n4 5\n1 5\n", |path| {
        let out = polyskel(&["stab", path]);
        assert_eq!(out.status.code(), Some(3));
        assert!(stderr_str(&out).contains("not perfect"));

        // Experiment mode runs and reports; findings outside the
        // hypothesis are not verdict failures.
        let out = polyskel(&["stab", path, "--unchecked"]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr_str(&out));
        let text = stdout_str(&out);
        assert!(text.contains("perfect: false"));
    });
}

#[test]
fn stab_command_verifies_perfect_graphs() {
    with_file("graph 2\n1 2\n", |path| {
        let out = polyskel(&["stab", path]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout_str(&out);
        assert!(text.contains("perfect: true"));
        assert!(text.contains("vertices: 3"));
        assert!(text.contains("skeleton edges: 3"));
        assert!(text.contains("verdict: PASS"));
    });
}

#[test]
fn chain_polytope_command_cross_checks_antichains() {
    with_file("poset 3\n1 2\n2 3\n", |path| {
        let out = polyskel(&["chain-polytope", path]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout_str(&out);
        assert!(text.contains("antichain cross-check"));
        assert!(text.contains("verdict: PASS"));
    });
    // Antichain d=3: Stab(empty graph) is the cube.
    with_file("poset 3\n", |path| {
        let out = polyskel(&["chain-polytope", path]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout_str(&out).contains("vertices: 8"));
    });
}

#[test]
fn oracle_can_be_turned_off() {
    with_file("poset 3\n1 3\n2 3\n", |path| {
        let out = polyskel(&["order", path, "--verify-oracle", "false"]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout_str(&out);
        assert!(text.contains("oracle: off"));
        assert!(text.contains("verdict: PASS"));
    });
}

#[test]
fn random_outputs_are_deterministic_and_valid() {
    let a = polyskel(&["random", "--posets", "--max-d", "6", "--seed", "11"]);
    let b = polyskel(&["random", "--posets", "--max-d", "6", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    let poset = polyskel::io::parse_poset(&stdout_str(&a)).expect("emitted poset parses");
    assert_eq!(poset.size(), 6);

    let g1 = polyskel(&["random", "--graphs", "--max-n", "7", "--seed", "5"]);
    let g2 = polyskel(&["random", "--graphs", "--max-n", "7", "--seed", "5"]);
    assert_eq!(g1.stdout, g2.stdout);
    let graph = polyskel::io::parse_graph(&stdout_str(&g1)).expect("emitted graph parses");
    assert_eq!(graph.size(), 7);
    assert!(
        graph.is_perfect(),
        "emitted graphs are comparability graphs"
    );

    // Different seeds give different instances (with these particular seeds).
    let c = polyskel(&["random", "--posets", "--max-d", "6", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sweep_reports_counts_and_zero_failures() {
    let out = polyskel(&["sweep", "--posets", "--max-d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("d=1: 1 posets, 0 failures"));
    assert!(text.contains("d=2: 3 posets, 0 failures"));
    assert!(text.contains("d=3: 19 posets, 0 failures"));
    assert!(text.contains("total: 23 instances, 0 failures"));
    // Wall time goes to stderr, never stdout.
    assert!(!text.contains("elapsed"));
    assert!(stderr_str(&out).contains("elapsed"));

    let out = polyskel(&["sweep", "--graphs", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("total: 75 instances, 0 failures"));
}

#[test]
fn sweep_guards_exhaustive_blowups() {
    let out = polyskel(&["sweep", "--posets", "--max-d", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("--sample"));
}

#[test]
fn usage_errors_exit_2() {
    let out = polyskel(&["sweep"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polyskel(&["random", "--posets"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polyskel(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2)); // clap usage error
}
