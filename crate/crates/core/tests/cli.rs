use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pathqubo"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pathqubo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_then_solve_fixture() {
    let q = scratch("g1.qubo");
    stdout(&[
        "build",
        "--graph",
        "fixture:one",
        "--start",
        "0",
        "--end",
        "7",
        "--out",
        q.to_str().unwrap(),
    ]);
    let exact = stdout(&[
        "solve",
        "exact",
        "--qubo",
        q.to_str().unwrap(),
        "--lowest",
        "2",
    ]);
    assert_eq!(
        exact,
        "energy,bitstring,occurrences\n-6,10000011,1\n-5,10000001,1\n"
    );
    let sa = stdout(&[
        "solve",
        "sa",
        "--qubo",
        q.to_str().unwrap(),
        "--seed",
        "3",
        "--reads",
        "50",
        "--sweeps",
        "200",
    ]);
    assert!(sa.lines().nth(1).unwrap().starts_with("-6,10000011,"));
    assert_eq!(
        sa,
        stdout(&[
            "solve",
            "sa",
            "--qubo",
            q.to_str().unwrap(),
            "--seed",
            "3",
            "--reads",
            "50",
            "--sweeps",
            "200"
        ])
    );
    let gap = stdout(&["gap", "--qubo", q.to_str().unwrap(), "--points", "5"]);
    assert!(gap.starts_with("s,gap\n") && gap.contains("min_gap,"));
}

#[test]
fn randomized_commands_require_seed() {
    assert!(!run(&["gen", "ba", "--vertices", "20"]).status.success());
    assert!(!run(&["gen", "er", "--vertices", "20", "--p", "0.2"])
        .status
        .success());
    assert!(!run(&["bench", "vertices", "--sizes", "10"])
        .status
        .success());
    let a = stdout(&[
        "gen",
        "ba",
        "--n0",
        "3",
        "--n",
        "2",
        "--vertices",
        "20",
        "--seed",
        "9",
    ]);
    assert_eq!(
        a,
        stdout(&[
            "gen",
            "ba",
            "--n0",
            "3",
            "--n",
            "2",
            "--vertices",
            "20",
            "--seed",
            "9"
        ])
    );
    assert_eq!(a.lines().count(), 1 + 3 + 2 * 17);
}

#[test]
fn graph_pipeline() {
    let g = scratch("er.txt");
    stdout(&[
        "gen",
        "er",
        "--vertices",
        "12",
        "--p",
        "0.4",
        "--seed",
        "2",
        "--out",
        g.to_str().unwrap(),
    ]);
    let w = scratch("er_w.txt");
    stdout(&[
        "reweight",
        "--graph",
        g.to_str().unwrap(),
        "--seed",
        "5",
        "--out",
        w.to_str().unwrap(),
    ]);
    let w = w.to_str().unwrap();
    let d = stdout(&["baseline", "dijkstra", "--graph", w]);
    let b = stdout(&["baseline", "bellman", "--graph", w]);
    assert_eq!(d, b);
    let fw = stdout(&["baseline", "floyd", "--graph", w]);
    assert_eq!(fw, stdout(&["baseline", "minplus", "--graph", w]));
    assert!(stdout(&["feas", "--graph", w]).contains("required_qubits=36"));
    assert!(stdout(&["degrees", "--graph", w]).starts_with("k,p\n"));
    let json = stdout(&["analyze", "--graph", w, "--start", "0", "--end", "11"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["decodes_to_shortest_path"].is_boolean());
}

#[test]
fn decode_and_sweep() {
    let ok = stdout(&[
        "decode",
        "--graph",
        "fixture:one",
        "--start",
        "0",
        "--end",
        "7",
        "--state",
        "10000011",
    ]);
    assert_eq!(ok, "valid path=0-6-7 weight=2\n");
    let bad = stdout(&[
        "decode",
        "--graph",
        "fixture:one",
        "--start",
        "0",
        "--end",
        "7",
        "--state",
        "10000001",
    ]);
    assert!(bad.starts_with("invalid"));
    let sweep = stdout(&[
        "sweep-coeffs",
        "--graph",
        "fixture:one",
        "--start",
        "0",
        "--end",
        "7",
        "--delta",
        "2,3",
    ]);
    assert_eq!(sweep.lines().count(), 3);
}

#[test]
fn bench_fit_plot() {
    let recs = scratch("recs.csv");
    let r = recs.to_str().unwrap();
    stdout(&[
        "bench",
        "vertices",
        "--sizes",
        "10,20,30",
        "--algorithms",
        "dijkstra,sa",
        "--seed",
        "1,2",
        "--sweeps",
        "5",
        "--out",
        r,
    ]);
    let text = std::fs::read_to_string(&recs).unwrap();
    assert!(text.starts_with("algorithm,input_size,probability,seed,graph_hash,wall_seconds\n"));
    assert_eq!(text.lines().count(), 1 + 3 * 2 * 2);
    let fits = stdout(&["fit", "--records", r]);
    assert_eq!(fits.lines().count(), 1 + 2 * 3);
    let svg = stdout(&["plot", "--records", r]);
    assert!(svg.starts_with("<svg") && svg.matches("<polyline").count() == 2);
    let table = stdout(&[
        "bench",
        "edges",
        "--vertices",
        "15",
        "--probs",
        "0.2,0.6",
        "--algorithms",
        "dijkstra",
        "--seed",
        "4",
        "--format",
        "text",
    ]);
    assert_eq!(table.lines().next(), Some("probability,dijkstra"));
}

#[test]
fn errors_exit_nonzero() {
    let out = run(&["baseline", "dijkstra", "--graph", "/nonexistent/graph.txt"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert!(!run(&["baseline", "astar", "--graph", "fixture:one"])
        .status
        .success());
}
