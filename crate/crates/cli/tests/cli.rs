//! End-to-end checks of the binary: output determinism across reruns
//! and thread counts, report contents on inputs with known statistics,
//! and error behavior on bad invocations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_ok(args: &[&str]) {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn path_str(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Size and weight inputs for generator runs: 120 edges of sizes 2..=4
/// over 32 nodes with varied degree weights.
fn number_files(dir: &Path) -> (PathBuf, PathBuf) {
    let sizes = dir.join("sizes.txt");
    let degrees = dir.join("degrees.txt");
    let size_lines: Vec<String> = (0..120).map(|i| (2 + i % 3).to_string()).collect();
    let degree_lines: Vec<String> = (0..32).map(|v| (1 + v % 7).to_string()).collect();
    fs::write(&sizes, size_lines.join("\n") + "\n").unwrap();
    fs::write(&degrees, degree_lines.join("\n") + "\n").unwrap();
    (sizes, degrees)
}

fn nested_exemplar(dir: &Path) -> PathBuf {
    let path = dir.join("nested.txt");
    fs::write(&path, "0 1 2\n0 1 2 3\n0 1 2 3 4\n").unwrap();
    path
}

#[test]
fn generate_is_deterministic_across_reruns_and_thread_counts() {
    let tmp = TempDir::new().unwrap();
    let (sizes, degrees) = number_files(tmp.path());
    let dirs: Vec<PathBuf> = (0..4).map(|i| tmp.path().join(format!("out{i}"))).collect();
    for (dir, threads, seed) in [
        (&dirs[0], "1", "7"),
        (&dirs[1], "2", "7"),
        (&dirs[2], "1", "7"),
        (&dirs[3], "1", "8"),
    ] {
        run_ok(&[
            "generate",
            "hyperlap",
            "--sizes-file",
            path_str(&sizes),
            "--degrees-file",
            path_str(&degrees),
            "--levels",
            "3",
            "--emit-levels",
            "--seed",
            seed,
            "--threads",
            threads,
            "--out",
            path_str(dir),
        ]);
    }
    let edges = |d: &Path| fs::read(d.join("generated-edges.txt")).unwrap();
    let levels = |d: &Path| fs::read(d.join("generated-edges.levels")).unwrap();
    assert_eq!(edges(&dirs[0]), edges(&dirs[1]), "thread count must not change output");
    assert_eq!(edges(&dirs[0]), edges(&dirs[2]), "rerun must reproduce output");
    assert_eq!(levels(&dirs[0]), levels(&dirs[1]));
    assert_ne!(edges(&dirs[0]), edges(&dirs[3]), "seed must change output");

    let hypercl: Vec<PathBuf> = (0..2).map(|i| tmp.path().join(format!("cl{i}"))).collect();
    for dir in &hypercl {
        run_ok(&[
            "generate",
            "hypercl",
            "--sizes-file",
            path_str(&sizes),
            "--degrees-file",
            path_str(&degrees),
            "--seed",
            "7",
            "--out",
            path_str(dir),
        ]);
    }
    assert_eq!(edges(&hypercl[0]), edges(&hypercl[1]));
}

#[test]
fn stats_reports_exact_whole_graph_measures() {
    let tmp = TempDir::new().unwrap();
    let input = nested_exemplar(tmp.path());
    let out = tmp.path().join("stats");
    run_ok(&["stats", "--input", path_str(&input), "--out", path_str(&out)]);

    let summary = read_json(&out.join("summary.json"));
    assert_eq!(summary["data"]["num_nodes"], 5);
    assert_eq!(summary["data"]["num_edges"], 3);
    assert_eq!(summary["data"]["density"], 0.6);
    assert_eq!(summary["data"]["overlapness"], 2.4);

    let egonets = fs::read_to_string(out.join("egonets.csv")).unwrap();
    let mut lines = egonets.lines();
    assert_eq!(
        lines.next().unwrap(),
        "node,num_edges,num_distinct_nodes,sum_sizes,density,overlapness"
    );
    assert_eq!(lines.count(), 5, "one row per node");
    assert!(out.join("pair-degrees.csv").exists());
    assert!(out.join("homogeneity.csv").exists());
}

#[test]
fn nverts_format_loads_like_the_edge_list() {
    let tmp = TempDir::new().unwrap();
    let nverts = tmp.path().join("ex-nverts.txt");
    let simplices = tmp.path().join("ex-simplices.txt");
    fs::write(&nverts, "3\n4\n5\n").unwrap();
    fs::write(&simplices, "0\n1\n2\n0\n1\n2\n3\n0\n1\n2\n3\n4\n").unwrap();
    let out = tmp.path().join("stats");
    run_ok(&[
        "stats",
        "--input",
        path_str(&nverts),
        "--format",
        "nverts",
        "--out",
        path_str(&out),
    ]);
    let summary = read_json(&out.join("summary.json"));
    assert_eq!(summary["data"]["num_nodes"], 5);
    assert_eq!(summary["data"]["num_edges"], 3);
    assert_eq!(summary["data"]["density"], 0.6);
    assert_eq!(summary["data"]["overlapness"], 2.4);
}

#[test]
fn compare_of_a_graph_with_itself_is_all_zero() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("graph.txt");
    fs::write(&input, "0 1 2\n0 1 3\n2 3\n1 2 3 4\n0 4\n").unwrap();
    let out = tmp.path().join("cmp");
    run_ok(&[
        "compare",
        "--input",
        path_str(&input),
        "--against",
        path_str(&input),
        "--out",
        path_str(&out),
    ]);
    let report = read_json(&out.join("compare.json"));
    let d = &report["data"]["d_statistics"];
    for key in [
        "egonet_density",
        "egonet_overlapness",
        "pair_degrees",
        "triple_degrees",
        "homogeneity",
    ] {
        assert_eq!(d[key], 0.0, "{key} of identical graphs");
    }
    assert_eq!(report["data"]["significance"]["density"], 0.0);
    assert_eq!(report["data"]["significance"]["overlapness"], 0.0);
}

#[test]
fn fit_writes_report_and_fitted_edges() {
    let tmp = TempDir::new().unwrap();
    let (sizes, degrees) = number_files(tmp.path());
    let gen_dir = tmp.path().join("gen");
    run_ok(&[
        "generate",
        "hyperlap",
        "--sizes-file",
        path_str(&sizes),
        "--degrees-file",
        path_str(&degrees),
        "--levels",
        "3",
        "--weights",
        "0.2,0.3,0.5",
        "--seed",
        "5",
        "--out",
        path_str(&gen_dir),
    ]);

    let out = tmp.path().join("fit");
    run_ok(&[
        "fit",
        "--input",
        path_str(&gen_dir.join("generated-edges.txt")),
        "--resolution",
        "0.25",
        "--seed",
        "3",
        "--out",
        path_str(&out),
    ]);
    let report = read_json(&out.join("fit.json"));
    let initial = report["data"]["initial_hhd"].as_f64().unwrap();
    let final_hhd = report["data"]["final_hhd"].as_f64().unwrap();
    assert!(final_hhd <= initial, "fitting must never end worse than it started");
    let weights: Vec<f64> = report["data"]["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w.as_f64().unwrap())
        .collect();
    assert!((weights.iter().sum::<f64>() - 1.0).abs() < 1e-9);

    let fitted = fs::read_to_string(out.join("fitted-edges.txt")).unwrap();
    assert_eq!(
        fitted.lines().count() as u64,
        report["data"]["num_edges"].as_u64().unwrap()
    );
}

#[test]
fn tailfit_reports_ratios_and_optimality() {
    let tmp = TempDir::new().unwrap();
    let (sizes, degrees) = number_files(tmp.path());
    let gen_dir = tmp.path().join("gen");
    run_ok(&[
        "generate",
        "hypercl",
        "--sizes-file",
        path_str(&sizes),
        "--degrees-file",
        path_str(&degrees),
        "--seed",
        "5",
        "--out",
        path_str(&gen_dir),
    ]);

    let out = tmp.path().join("tail");
    run_ok(&[
        "tailfit",
        "--input",
        path_str(&gen_dir.join("generated-edges.txt")),
        "--what",
        "degrees",
        "--out",
        path_str(&out),
    ]);
    let report = read_json(&out.join("tailfit.json"));
    assert_eq!(report["data"]["fit"]["kind"], "discrete");
    assert!(report["data"]["fit"]["ratios"].is_object());
    assert!(report["data"]["evidence"]["best_model"].is_string());
    assert_eq!(report["data"]["local_optimality"]["checked"], true);
}

#[test]
fn upscale_scales_nodes_and_edges_by_the_factor() {
    let tmp = TempDir::new().unwrap();
    let input = nested_exemplar(tmp.path());
    let out = tmp.path().join("up");
    run_ok(&[
        "upscale",
        "--input",
        path_str(&input),
        "--factor",
        "4",
        "--levels",
        "2",
        "--seed",
        "1",
        "--out",
        path_str(&out),
    ]);
    let report = read_json(&out.join("upscale.json"));
    assert_eq!(report["data"]["num_nodes"], 20);
    assert_eq!(report["data"]["num_edges"], 12);
    let edges = fs::read_to_string(out.join("upscaled-edges.txt")).unwrap();
    assert_eq!(edges.lines().count(), 12);
}

#[test]
fn missing_input_is_a_clean_error() {
    let tmp = TempDir::new().unwrap();
    let out = run(&[
        "stats",
        "--input",
        "/nonexistent/nope.txt",
        "--out",
        path_str(&tmp.path().join("x")),
    ]);
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.starts_with("error:"), "stderr was: {stderr}");
    assert!(stderr.contains("nope.txt"));
}

#[test]
fn conflicting_generator_inputs_are_rejected() {
    let tmp = TempDir::new().unwrap();
    let (sizes, _) = number_files(tmp.path());
    let input = nested_exemplar(tmp.path());
    let out = run(&[
        "generate",
        "hypercl",
        "--input",
        path_str(&input),
        "--sizes-file",
        path_str(&sizes),
        "--out",
        path_str(&tmp.path().join("x")),
    ]);
    assert!(!out.status.success());
}
