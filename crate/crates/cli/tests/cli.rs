use std::io::Write;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use cathedral::{algorithm1, Graph};
use cathedral_cli::report::{from_json, AnalysisReport, NOT_FACTORIZABLE_NOTE};
use cathedral_cli::verify::{self, VerifyOptions};

const PAW: &str = "4 4\n0 1\n0 2\n0 3\n1 2\n";
const P3: &str = "3 2\n0 1\n1 2\n";
const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cathedral"))
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn analyze_json(text: &str, extra: &[&str]) -> AnalysisReport {
    let f = file(text);
    let mut args = vec!["analyze", f.path().to_str().unwrap(), "--json"];
    args.extend_from_slice(extra);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    from_json(&stdout(&o)).unwrap()
}

#[test]
fn analyze_paw() {
    let r = analyze_json(PAW, &[]);
    let s = r.structure.unwrap();
    assert_eq!(s.components, [vec![0, 3], vec![1, 2]]);
    assert_eq!(s.poset_cover_edges, [[0, 1]]);
}

#[test]
fn analyze_output_is_byte_identical_across_runs() {
    let f = file(PAW);
    let path = f.path().to_str().unwrap();
    let a = run(&["analyze", path, "--json", "--barrier", "0,1"]);
    let b = run(&["analyze", path, "--json", "--barrier", "0,1"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"schema\": 1"));
}

#[test]
fn analyze_p3_reports_atoms() {
    let r = analyze_json(P3, &[]);
    assert_eq!(r.gallai_edmonds.d, [0, 2]);
    assert_eq!(r.gallai_edmonds.a, [1]);
    assert_eq!(r.atoms.unwrap().note, NOT_FACTORIZABLE_NOTE);
}

#[test]
fn analyze_empty_graph() {
    let r = analyze_json("0 0\n", &[]);
    assert_eq!((r.n, r.m, r.nu), (0, 0, 0));
}

#[test]
fn analyze_dimacs_and_stdin() {
    let r = analyze_json(
        "c paw\np edge 4 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\n",
        &["--format", "dimacs"],
    );
    assert_eq!(r.structure.unwrap().components.len(), 2);

    let mut child = bin()
        .args(["analyze", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(PAW.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_eq!(from_json(&stdout(&o)).unwrap().m, 4);
}

#[test]
fn analyze_barrier_decomposition() {
    let r = analyze_json(PAW, &["--barrier", "0"]);
    let b = r.barrier.unwrap();
    assert!(b.is_barrier && b.is_odd_maximal);
    assert_eq!(b.d_x, [3]);
    let parts = b.decomposition.unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0].expansion, [0, 3]);
}

#[test]
fn parse_errors_exit_one_and_name_the_line() {
    let f = file("3 2\n0 1\n1 7\n");
    let o = run(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(run(&["analyze", "/nonexistent/graph.txt"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn random_graphs() {
    let o = run(&["random", "4", "3", "--seed", "9"]);
    assert!(o.status.success());
    let r = analyze_json(&stdout(&o), &[]);
    assert!(r.factorizable && r.m == 3);
    assert_eq!(o.stdout, run(&["random", "4", "3", "--seed", "9"]).stdout);
    assert_eq!(run(&["random", "5", "3"]).status.code(), Some(3));
    assert_eq!(run(&["random", "4", "1"]).status.code(), Some(3));
}

#[test]
fn export_dot_targets() {
    let paw = file(PAW);
    let path = paw.path().to_str().unwrap();
    let d = stdout(&run(&["export-dot", path, "--target", "condensation"]));
    assert_eq!(d.matches("[label=").count(), 2);
    assert_eq!(d.matches("->").count(), 1);

    let c6 = file(C6);
    let d = stdout(&run(&[
        "export-dot",
        c6.path().to_str().unwrap(),
        "--target",
        "condensation",
    ]));
    assert_eq!(d.matches("[label=").count(), 1);
    assert_eq!(d.matches("->").count(), 0);

    let d = stdout(&run(&["export-dot", path, "--target", "hx", "--barrier", "0,1"]));
    assert_eq!(d.matches("shape=circle").count(), 2);
    assert_eq!(d.matches("shape=box").count(), 2);

    assert_eq!(run(&["export-dot", path, "--target", "hx"]).status.code(), Some(1));
    assert_eq!(
        run(&["export-dot", path, "--target", "hx", "--barrier", "1"])
            .status
            .code(),
        Some(3)
    );
    let d = stdout(&run(&["export-dot", path, "--target", "partition"]));
    assert_eq!(d.matches("subgraph cluster_").count(), 4);
}

#[test]
fn small_verify_run_is_fast_and_passes() {
    let start = Instant::now();
    let o = run(&["verify", "--max-n", "6", "--samples", "10"]);
    assert!(start.elapsed() < Duration::from_secs(5));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS, 0 discrepancies"));
}

#[test]
fn injected_order_fault_fails_with_witness() {
    let faulty = |g: &Graph| {
        let mut s = algorithm1(g)?;
        if s.components().len() >= 2 {
            s.toggle_order_for_testing(1, 0);
        }
        Ok(s)
    };
    let r = verify::run(
        VerifyOptions {
            max_n: 4,
            samples: 0,
            seed: 1,
        },
        &faulty,
    );
    assert!(!r.passed());
    let text = verify::render(&r, 1);
    assert!(text.starts_with("FAIL"), "{text}");
    assert!(text.contains("[poset]") && text.contains("witness:\n"), "{text}");
}
