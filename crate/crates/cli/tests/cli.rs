use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use critset::bigraph::{degree_stats, load_edge_list};
use tempfile::TempDir;

const TOY: &str = "a x\na y\nb y\n";

fn critset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = critset(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    critset(args).status.code().unwrap()
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_owned()
    }

    fn path(&self, name: &str) -> String {
        self.0.path().join(name).to_str().unwrap().to_owned()
    }
}

fn read(p: impl AsRef<Path>) -> String {
    fs::read_to_string(p).unwrap()
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn stats_toy() {
    let d = Dir::new();
    let g = d.file("toy.el", TOY);
    let v = json(&ok(&["stats", "--input", &g]));
    assert_eq!(v["|C|"], 2);
    assert_eq!(v["|I|"], 2);
    assert_eq!(v["|E|"], 3);
    assert_eq!(v["dataset"], "toy");
}

#[test]
fn stats_match_library() {
    let d = Dir::new();
    let g = d.path("er.el");
    ok(&["synth", "er", "--nc", "300", "--ni", "200", "--p", "0.02", "--seed", "4", "--out", &g]);
    let v = json(&ok(&["stats", "--input", &g]));
    let (graph, _) = load_edge_list(fs::read(&g).unwrap().as_slice()).unwrap();
    let s = degree_stats(&graph);
    assert_eq!(v["|C|"], s.num_contributors);
    assert_eq!(v["|E|"], s.num_edges);
    assert_eq!(v["k̄_I"].as_f64().unwrap(), s.mean_item_degree);
    assert_eq!(v["γ_C"].as_f64().unwrap(), s.gamma_c);
}

#[test]
fn rank_mincov_toy() {
    let d = Dir::new();
    let g = d.file("toy.el", TOY);
    let out = d.path("r.csv");
    ok(&["rank", "--input", &g, "--method", "mincov", "--out", &out]);
    let text = read(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("rank,contributor,score\n"));
    ok(&["rank", "--input", &g, "--method", "mincov", "--out", &d.path("again.csv")]);
    assert_eq!(text, read(d.path("again.csv")));
    let m = json(&read(format!("{out}.manifest.json")));
    assert_eq!(m["command"], "rank");
    assert_eq!(m["method"], "mincov");
    assert_eq!(m["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(m["outputs"][0], out.as_str());
}

#[test]
fn shc_is_reproducible_and_needs_a_seed() {
    let d = Dir::new();
    let g = d.path("pl.el");
    ok(&[
        "synth", "pl", "--nc", "200", "--ni", "200", "--alpha-c", "0.5", "--alpha-i", "0.5",
        "--dc", "20", "--di", "20", "--seed", "1", "--out", &g,
    ]);
    let run = |name: &str| {
        let out = d.path(name);
        ok(&["rank", "--input", &g, "--method", "shc", "--seed", "7", "--restarts", "4",
            "--max-moves", "2000", "--patience", "500", "--out", &out]);
        read(out)
    };
    assert_eq!(run("a.csv"), run("b.csv"));
    assert_eq!(code(&["rank", "--input", &g, "--method", "shc"]), 1);
}

#[test]
fn greedy_plateau_keeps_id_order() {
    let d = Dir::new();
    let g = d.file("one.el", "p item\nq item\nr item\n");
    let text = ok(&["rank", "--input", &g, "--method", "greedy"]);
    let labels: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(labels, ["p", "q", "r"]);
}

#[test]
fn eval_toy_and_determinism() {
    let d = Dir::new();
    let g = d.file("toy.el", TOY);
    let r = d.path("mincov.csv");
    ok(&["rank", "--input", &g, "--method", "mincov", "--out", &r]);
    let curve = d.path("curve.csv");
    let summary = json(&ok(&["eval", "--input", &g, "--ranking", &r, "--out", &curve]));
    let auc = summary["auc"].as_f64().unwrap();
    assert!(auc > 0.0 && auc <= 1.0);
    assert_eq!(summary["method"], "mincov");
    let text = read(&curve);
    assert!(text.lines().last().unwrap().starts_with("2,2,"));
    let again = d.path("curve2.csv");
    ok(&["eval", "--input", &g, "--ranking", &r, "--out", &again]);
    assert_eq!(text, read(again));
}

#[test]
fn eval_reports_unknown_label() {
    let d = Dir::new();
    let g = d.file("toy.el", TOY);
    let r = d.file("bad.txt", "a\nzed\n");
    let out = critset(&["eval", "--input", &g, "--ranking", &r]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zed"));
}

#[test]
fn eval_on_regenerated_config_c() {
    let d = Dir::new();
    let g = d.path("c.el");
    ok(&[
        "synth", "pl", "--nc", "5000", "--ni", "5000", "--alpha-c", "0.5", "--alpha-i", "0.5",
        "--dc", "100", "--di", "100", "--seed", "3", "--out", &g,
    ]);
    let r = d.path("m.csv");
    ok(&["rank", "--input", &g, "--method", "mincov", "--out", &r]);
    let auc = json(&ok(&["eval", "--input", &g, "--ranking", &r]))["auc"].as_f64().unwrap();
    assert!((0.26..=0.36).contains(&auc), "{auc}");
}

#[test]
fn synth_er_complete() {
    let text = ok(&["synth", "er", "--nc", "3", "--ni", "3", "--p", "1", "--seed", "0"]);
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn synth_pl_row_a() {
    let d = Dir::new();
    let g = d.path("a.el");
    ok(&[
        "synth", "pl", "--nc", "5000", "--ni", "5000", "--alpha-c", "0.5", "--alpha-i", "0.5",
        "--dc", "20", "--di", "100", "--seed", "11", "--out", &g,
    ]);
    let (graph, _) = load_edge_list(fs::read(&g).unwrap().as_slice()).unwrap();
    assert_eq!(graph.num_contributors() + graph.num_items(), 10_000);
    assert!(graph.max_contributor_degree() <= 20);
    assert!(graph.max_item_degree() <= 100);
    let m = json(&read(format!("{g}.manifest.json")));
    assert_eq!(m["seed"], 11);
    assert_eq!(m["parameters"]["dc"], 20);
}

#[test]
fn synth_config_file_and_override() {
    let d = Dir::new();
    let cfg = d.file("er.cfg", "# tiny\nnc = 3\nni = 3\np = 1\nseed = 5\n");
    assert_eq!(ok(&["synth", "er", "--config", &cfg]).lines().count(), 9);
    let text = ok(&["synth", "er", "--config", &cfg, "--nc", "2"]);
    assert_eq!(text.lines().count(), 6);
    let bad = d.file("bad.cfg", "nc = 3\nwhat\n");
    assert_eq!(code(&["synth", "er", "--config", &bad]), 2);
    assert_eq!(code(&["synth", "er", "--nc", "3", "--ni", "3", "--p", "1"]), 1);
}

#[test]
fn synth_reduce_writes_incidence_graph() {
    let d = Dir::new();
    let sg = d.file("tri.txt", "0 1\n1 2\n0 2\n");
    let out = d.path("inc.el");
    ok(&["synth", "reduce", "--input", &sg, "--k", "3", "--out", &out]);
    let (g, _) = load_edge_list(fs::read(&out).unwrap().as_slice()).unwrap();
    assert_eq!((g.num_contributors(), g.num_items(), g.num_edges()), (3, 3, 6));
    assert_eq!(json(&read(format!("{out}.manifest.json")))["parameters"]["k"], 3);
    let lp = d.file("loop.txt", "0 0\n");
    assert_eq!(code(&["synth", "reduce", "--input", &lp, "--k", "1"]), 2);
}

#[test]
fn thread_count_does_not_change_output() {
    let d = Dir::new();
    let g = d.path("er.el");
    ok(&["synth", "er", "--nc", "2000", "--ni", "2000", "--p", "0.003", "--seed", "9", "--out", &g]);
    for method in ["shapley", "pagerank", "betweenness", "shc"] {
        let mut base = vec!["rank", "--input", g.as_str(), "--method", method, "--seed", "3"];
        if method == "betweenness" {
            base.extend(["--size-guard", "100000"]);
        }
        if method == "shc" {
            base.extend(["--max-moves", "1000", "--patience", "100"]);
        }
        let one = ok(&[base.as_slice(), &["--threads", "1"]].concat());
        let four = ok(&[base.as_slice(), &["--threads", "4"]].concat());
        assert_eq!(one, four, "{method}");
    }
}

#[test]
fn oracles() {
    let d = Dir::new();
    let g = d.file("toy.el", TOY);
    let v = json(&ok(&["oracle", "best-k", "--input", &g, "--k", "1"]));
    assert_eq!(v["best_cov"], 1);
    assert_eq!(v["best_set"][0], "a");
    let v = json(&ok(&["oracle", "shapley", "--input", &g]));
    assert_eq!(v[0]["shapley"], 1.5);
    let v = json(&ok(&["oracle", "supermodular", "--input", &g]));
    assert_eq!(v["pass"], true);
    let v = json(&ok(&["oracle", "supermodular", "--input", &g, "--sampled", "50", "--seed", "1"]));
    assert_eq!(v["chains"], 50);
}

#[test]
fn exit_codes() {
    let d = Dir::new();
    let g = d.file("toy.el", TOY);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["rank", "--input", &g, "--method", "magic"]), 1);
    assert_eq!(code(&["rank", "--input", &g, "--method", "pagerank", "--damping", "1.5"]), 1);
    assert_eq!(code(&["stats", "--input", &d.path("missing.el")]), 2);
    let broken = d.file("broken.el", "a x\nlonely\n");
    let out = critset(&["stats", "--input", &broken]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("broken.el") && err.contains("line 2"), "{err}");
    assert_eq!(
        code(&["rank", "--input", &g, "--method", "betweenness", "--size-guard", "2"]),
        3
    );
    assert_eq!(code(&["oracle", "best-k", "--input", &g, "--k", "1", "--limit", "1"]), 3);
}

