//! Contract tests for the command-line surface: exit codes, diagnostics,
//! and byte-identical reports for identical (command, seed, caps).

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spancolor"))
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("spancolor-test-{name}-{}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_reports_the_cycle_invariants() {
    let path = write_temp("c5", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let out = bin().arg("compute").arg(&path).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sp=2"), "{text}");
    assert!(text.contains("nu=2"), "{text}");
    assert!(text.contains("chromatic_index=3"), "{text}");
    assert!(text.contains("bound name=degree_gap value=2 holds=true tight=true"), "{text}");
    std::fs::remove_file(path).ok();
}

#[test]
fn compute_emits_witnesses_on_request() {
    let path = write_temp("star", "4 3\n0 1\n0 2\n0 3\n");
    let out = bin().arg("compute").arg(&path).arg("--witnesses").output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sp=3"), "{text}");
    assert!(text.contains("witness factor bound=3 edges=0,1,2"), "{text}");
    assert!(text.contains("witness spanning_maximum k=3"), "{text}");
    std::fs::remove_file(path).ok();
}

#[test]
fn malformed_files_exit_2_with_a_line_number() {
    let path = write_temp("loop", "2 1\n0 0\n");
    let out = bin().arg("compute").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    std::fs::remove_file(path).ok();
}

#[test]
fn cap_overflow_exits_3() {
    let edges: Vec<String> = (0..8)
        .flat_map(|a| (a + 1..8).map(move |b| format!("{a} {b}")))
        .collect();
    let content = format!("8 {}\n{}\n", edges.len(), edges.join("\n"));
    let path = write_temp("k8", &content);
    let out = bin()
        .arg("compute")
        .arg(&path)
        .arg("--cap-subset-edges")
        .arg("10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_is_deterministic_across_parallelism() {
    let run = |jobs: &str| {
        let out = bin()
            .args(["verify", "--family", "exhaustive", "--max-n", "5", "--seed", "9"])
            .args(["--jobs", jobs])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        stdout(&out)
    };
    let a = run("1");
    let b = run("4");
    assert_eq!(a, b);
    assert!(a.contains("summary"));
    assert!(a.contains("fail=0"));
}

#[test]
fn verify_filters_theorems_and_rejects_unknown_names() {
    let out = bin()
        .args(["verify", "--family", "trees", "--max-n", "7", "--theorems", "tree_recognizer"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("check=tree_recognizer"));
    assert!(!text.contains("check=bounds"));

    let out = bin()
        .args(["verify", "--family", "trees", "--theorems", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_random_campaign_passes() {
    let out = bin()
        .args(["verify", "--family", "random", "--max-n", "6", "--max-edges", "8"])
        .args(["--seed", "11", "--count", "40"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("fail=0"));
}

#[test]
fn generate_writes_parseable_canonical_files() {
    let out = bin()
        .args(["generate", "--family", "ratio-tree", "--a", "1", "--b", "1", "--n", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# generator: ratio-tree a=1 b=1 n=4\n"));
    let g = spancolor::format::parse(&text).unwrap();
    assert_eq!(g.vertex_count(), 13);
    assert!(g.is_tree());

    let out = bin().args(["generate", "--family", "cycle", "--n", "5"]).output().unwrap();
    let g = spancolor::format::parse(&stdout(&out)).unwrap();
    assert!(g.is_odd_cycle());

    let out = bin().args(["generate", "--family", "tightness", "--r", "3"]).output().unwrap();
    let g = spancolor::format::parse(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 6);

    // even r above 2 has no perfect matching in the complete-graph host
    let out = bin().args(["generate", "--family", "tightness", "--r", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_writes_the_same_bytes_as_stdout() {
    let args = ["verify", "--family", "trees", "--max-n", "6", "--theorems", "star_decomposition"];
    let stdout_run = bin().args(args).output().unwrap();
    assert!(stdout_run.status.success());
    let path = std::env::temp_dir().join(format!("spancolor-report-{}", std::process::id()));
    let file_run = bin().args(args).arg("--output").arg(&path).output().unwrap();
    assert!(file_run.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&stdout_run));
    std::fs::remove_file(path).ok();
}

#[test]
fn generate_round_trips_through_compute() {
    let out = bin().args(["generate", "--family", "star", "--n", "3"]).output().unwrap();
    let path = write_temp("gen-star", &stdout(&out));
    let out = bin().arg("compute").arg(&path).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("sp=3"));
    std::fs::remove_file(path).ok();
}
