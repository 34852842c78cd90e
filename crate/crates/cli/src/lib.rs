//! The `critset` command-line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 resource guard.

mod args;
mod manifest;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::json;

use critset::baselines::{
    betweenness_rank, degree_rank, dspeel_rank, forward_greedy_rank, pagerank_rank,
    PageRankParams,
};
use critset::bench::{run_bench, write_timing_csv};
use critset::bigraph::{degree_stats, load_edge_list, write_edge_list, BipartiteGraph, SimpleGraph};
use critset::eval::coverage_curve;
use critset::rankcore::{mincov, shapley_rank, Ranking};
use critset::search::{
    brute_force_best_k, brute_force_shapley, check_supermodular, shc_rank, ChainCheck, ShcParams,
    SupermodularityOutcome,
};
use critset::synth::{dks_to_criticalset, generate_er, generate_powerlaw, ConfigMap};

pub use args::{Cli, Command, Method};
use args::*;
use manifest::{HashingReader, RunManifest};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Guard(_) => EXIT_GUARD,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Guard(m) => m,
        }
    }

    /// Wraps a library error, prefixing `context` (usually a path).
    fn lib(e: critset::Error, context: Option<&Path>) -> Self {
        let msg = match context {
            Some(p) => format!("{}: {e}", p.display()),
            None => e.to_string(),
        };
        match e {
            critset::Error::ResourceGuard { .. } => CliError::Guard(msg),
            critset::Error::InvalidParams(_) => CliError::Usage(msg),
            _ => CliError::Data(msg),
        }
    }

    fn io(e: io::Error, path: &Path) -> Self {
        CliError::Data(format!("{}: {e}", path.display()))
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code. Errors are reported on stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("critset: {}", e.message());
            e.exit_code()
        }
    }
}

pub fn execute(cli: Cli) -> CliResult<()> {
    let threads = cli.threads;
    let job = move || match cli.command {
        Command::Stats(a) => cmd_stats(&a),
        Command::Rank(a) => cmd_rank(&a),
        Command::Eval(a) => cmd_eval(&a),
        Command::Synth(s) => match s {
            SynthCommand::Pl(a) => cmd_synth_pl(&a),
            SynthCommand::Er(a) => cmd_synth_er(&a),
            SynthCommand::Reduce(a) => cmd_synth_reduce(&a),
        },
        Command::Bench(a) => cmd_bench(&a),
        Command::Oracle(o) => match o {
            OracleCommand::BestK(a) => cmd_oracle_best_k(&a),
            OracleCommand::Shapley(a) => cmd_oracle_shapley(&a),
            OracleCommand::Supermodular(a) => cmd_oracle_supermodular(&a),
        },
    };
    match threads {
        None => job(),
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(job),
    }
}

struct Loaded<T> {
    value: T,
    digest: String,
}

fn open(path: &Path) -> CliResult<HashingReader<File>> {
    let f = File::open(path).map_err(|e| CliError::io(e, path))?;
    Ok(HashingReader::new(f))
}

fn load_graph(path: &Path) -> CliResult<Loaded<BipartiteGraph>> {
    let mut reader = BufReader::new(open(path)?);
    let (g, report) = load_edge_list(&mut reader).map_err(|e| CliError::lib(e, Some(path)))?;
    if report.duplicates_dropped > 0 {
        eprintln!(
            "critset: {}: collapsed {} duplicate edges",
            path.display(),
            report.duplicates_dropped
        );
    }
    Ok(Loaded {
        value: g,
        digest: reader.into_inner().finish(),
    })
}

/// `--out` when given, stdout otherwise.
fn output(out: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::io(e, p))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> CliResult<()> {
    let mut w = output(out)?;
    let path = out.unwrap_or(Path::new("<stdout>"));
    serde_json::to_writer_pretty(&mut w, value)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    writeln!(w).and_then(|_| w.flush()).map_err(|e| CliError::io(e, path))
}

fn finish_io(r: io::Result<()>, out: Option<&Path>) -> CliResult<()> {
    r.map_err(|e| CliError::io(e, out.unwrap_or(Path::new("<stdout>"))))
}

/// Manifests sit next to the primary output as `<out>.manifest.json`; a run
/// writing to stdout gets none unless `--manifest` names a path.
fn manifest_path(out: Option<&Path>, explicit: Option<&Path>) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| {
        out.map(|p| {
            let mut s = p.as_os_str().to_owned();
            s.push(".manifest.json");
            PathBuf::from(s)
        })
    })
}

fn save_manifest(m: RunManifest, out: Option<&Path>, explicit: Option<&Path>) -> CliResult<()> {
    match manifest_path(out, explicit) {
        Some(p) => write_json(&m, Some(&p)),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct StatsRow<'a> {
    dataset: &'a str,
    #[serde(rename = "|C|")]
    c: usize,
    #[serde(rename = "|I|")]
    i: usize,
    #[serde(rename = "|E|")]
    e: usize,
    #[serde(rename = "k̄_C")]
    k_c: f64,
    #[serde(rename = "k̄_I")]
    k_i: f64,
    #[serde(rename = "ϕ_C")]
    phi_c: f64,
    #[serde(rename = "ϕ_I")]
    phi_i: f64,
    #[serde(rename = "γ_C")]
    gamma_c: f64,
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn cmd_stats(a: &StatsArgs) -> CliResult<()> {
    let g = load_graph(&a.input)?.value;
    let s = degree_stats(&g);
    let name = dataset_name(&a.input);
    let row = StatsRow {
        dataset: &name,
        c: s.num_contributors,
        i: s.num_items,
        e: s.num_edges,
        k_c: s.mean_contributor_degree,
        k_i: s.mean_item_degree,
        phi_c: s.phi_c,
        phi_i: s.phi_i,
        gamma_c: s.gamma_c,
    };
    write_json(&row, a.out.as_deref())
}

fn cmd_rank(a: &RankArgs) -> CliResult<()> {
    let start = Instant::now();
    let loaded = load_graph(&a.input)?;
    let g = &loaded.value;
    let lib = |e| CliError::lib(e, None);
    let mut params = json!({});
    let ranking = match a.method {
        Method::Mincov => mincov(g),
        Method::Shapley => shapley_rank(g),
        Method::Degree => degree_rank(g),
        Method::Pagerank => {
            let p = PageRankParams {
                damping: a.damping,
                tol: a.tol,
                max_iters: a.max_iters,
            };
            let (r, res) = pagerank_rank(g, &p).map_err(lib)?;
            if !res.converged {
                eprintln!(
                    "critset: pagerank stopped after {} iterations with residual {:e}",
                    res.iterations, res.residual
                );
            }
            params = json!({
                "damping": p.damping, "tol": p.tol, "max_iters": p.max_iters,
                "iterations": res.iterations, "converged": res.converged,
            });
            r
        }
        Method::Betweenness => {
            params = json!({ "size_guard": a.size_guard });
            betweenness_rank(g, a.size_guard).map_err(lib)?
        }
        Method::Dspeel => dspeel_rank(g),
        Method::Greedy => forward_greedy_rank(g),
        Method::Shc => {
            let seed = a
                .seed
                .ok_or_else(|| CliError::Usage("--seed is required for --method shc".into()))?;
            let mut p = ShcParams::new(seed);
            p.restarts = a.restarts;
            p.patience = a.patience;
            p.max_moves_per_restart = a.max_moves;
            let outcome = shc_rank(g, &p).map_err(lib)?;
            params = json!({
                "restarts": p.restarts, "patience": p.patience,
                "max_moves": p.max_moves_per_restart, "init": "mincov",
                "auc": outcome.auc,
            });
            outcome.ranking
        }
    };
    let out = a.out.as_deref();
    ranking
        .write_csv(g, output(out)?)
        .map_err(|e| CliError::lib(e, out))?;
    let seed = if a.method == Method::Shc { a.seed } else { None };
    let m = RunManifest::new("rank", start)
        .input(&a.input, &loaded.digest)
        .method(a.method.name())
        .parameters(params)
        .seed(seed)
        .output(out);
    save_manifest(m, out, a.manifest.as_deref())
}

fn read_ranking(g: &BipartiteGraph, path: &Path) -> CliResult<Loaded<Ranking>> {
    let mut reader = open(path)?;
    let mut bytes = Vec::new();
    reader
        .read_to_end(&mut bytes)
        .map_err(|e| CliError::io(e, path))?;
    let r = Ranking::read(g, bytes.as_slice()).map_err(|e| CliError::lib(e, Some(path)))?;
    Ok(Loaded {
        value: r,
        digest: reader.finish(),
    })
}

fn cmd_eval(a: &EvalArgs) -> CliResult<()> {
    let start = Instant::now();
    let loaded = load_graph(&a.input)?;
    let g = &loaded.value;
    let ranking = read_ranking(g, &a.ranking)?;
    let curve = coverage_curve(g, &ranking.value).map_err(|e| CliError::lib(e, Some(&a.ranking)))?;
    let label = a.method.clone().unwrap_or_else(|| dataset_name(&a.ranking));
    let out = a.out.as_deref();
    if let Some(p) = out {
        finish_io(curve.write_csv(output(Some(p))?), out)?;
    }
    write_json(&curve.summary(&label), a.summary.as_deref())?;
    let m = RunManifest::new("eval", start)
        .input(&a.input, &loaded.digest)
        .input(&a.ranking, &ranking.digest)
        .method(&label)
        .parameters(json!({ "auc": curve.auc() }))
        .output(out)
        .output(a.summary.as_deref());
    save_manifest(m, out.or(a.summary.as_deref()), a.manifest.as_deref())
}

/// Config file entries first, then any flags given on the command line.
fn synth_config(config: Option<&Path>, flags: &[(&str, Option<String>)]) -> CliResult<(ConfigMap, Option<String>)> {
    let (mut map, digest) = match config {
        Some(p) => {
            let mut r = open(p)?;
            let mut text = String::new();
            r.read_to_string(&mut text).map_err(|e| CliError::io(e, p))?;
            let map = ConfigMap::parse(&text).map_err(|e| CliError::lib(e, Some(p)))?;
            (map, Some(r.finish()))
        }
        None => (ConfigMap::default(), None),
    };
    for (k, v) in flags {
        if let Some(v) = v {
            map.insert(k, v);
        }
    }
    Ok((map, digest))
}

fn write_graph(g: &BipartiteGraph, out: Option<&Path>) -> CliResult<()> {
    finish_io(write_edge_list(g, output(out)?), out)
}

fn cmd_synth_pl(a: &PowerLawArgs) -> CliResult<()> {
    let start = Instant::now();
    let (map, digest) = synth_config(
        a.config.as_deref(),
        &[
            ("nc", a.nc.map(|v| v.to_string())),
            ("ni", a.ni.map(|v| v.to_string())),
            ("alpha_c", a.alpha_c.map(|v| v.to_string())),
            ("alpha_i", a.alpha_i.map(|v| v.to_string())),
            ("dc", a.dc.map(|v| v.to_string())),
            ("di", a.di.map(|v| v.to_string())),
            ("min_di", a.min_di.map(|v| v.to_string())),
            ("seed", a.seed.map(|v| v.to_string())),
        ],
    )?;
    let cfg = map.power_law().map_err(|e| CliError::lib(e, None))?;
    let (g, report) = generate_powerlaw(&cfg).map_err(|e| CliError::lib(e, None))?;
    eprintln!("{}", serde_json::to_string(&report).unwrap());
    let out = a.out.as_deref();
    write_graph(&g, out)?;
    let mut m = RunManifest::new("synth pl", start)
        .method("powerlaw")
        .parameters(json!({
            "nc": cfg.n_contributors, "ni": cfg.n_items,
            "alpha_c": cfg.alpha_c, "alpha_i": cfg.alpha_i,
            "dc": cfg.max_degree_c, "di": cfg.max_degree_i, "min_di": cfg.min_degree_i,
            "report": report,
        }))
        .seed(Some(cfg.seed))
        .output(out);
    if let (Some(p), Some(d)) = (a.config.as_deref(), digest) {
        m = m.input(p, &d);
    }
    save_manifest(m, out, a.manifest.as_deref())
}

fn cmd_synth_er(a: &ErArgs) -> CliResult<()> {
    let start = Instant::now();
    let (map, digest) = synth_config(
        a.config.as_deref(),
        &[
            ("nc", a.nc.map(|v| v.to_string())),
            ("ni", a.ni.map(|v| v.to_string())),
            ("p", a.p.map(|v| v.to_string())),
            ("seed", a.seed.map(|v| v.to_string())),
        ],
    )?;
    let cfg = map.er().map_err(|e| CliError::lib(e, None))?;
    let (g, report) = generate_er(&cfg).map_err(|e| CliError::lib(e, None))?;
    eprintln!("{}", serde_json::to_string(&report).unwrap());
    let out = a.out.as_deref();
    write_graph(&g, out)?;
    let mut m = RunManifest::new("synth er", start)
        .method("er")
        .parameters(json!({
            "nc": cfg.n_contributors, "ni": cfg.n_items, "p": cfg.p, "report": report,
        }))
        .seed(Some(cfg.seed))
        .output(out);
    if let (Some(p), Some(d)) = (a.config.as_deref(), digest) {
        m = m.input(p, &d);
    }
    save_manifest(m, out, a.manifest.as_deref())
}

fn cmd_synth_reduce(a: &ReduceArgs) -> CliResult<()> {
    let start = Instant::now();
    let mut reader = BufReader::new(open(&a.input)?);
    let sg = SimpleGraph::parse(&mut reader).map_err(|e| CliError::lib(e, Some(&a.input)))?;
    let digest = reader.into_inner().finish();
    let (g, k) = dks_to_criticalset(&sg, a.k).map_err(|e| CliError::lib(e, Some(&a.input)))?;
    let out = a.out.as_deref();
    write_graph(&g, out)?;
    let m = RunManifest::new("synth reduce", start)
        .input(&a.input, &digest)
        .method("incidence")
        .parameters(json!({ "k": k, "vertices": sg.num_vertices(), "edges": sg.num_edges() }))
        .output(out);
    save_manifest(m, out, a.manifest.as_deref())
}

fn cmd_bench(a: &BenchArgs) -> CliResult<()> {
    let start = Instant::now();
    let rows = run_bench(&a.edges, a.seed, a.repeats).map_err(|e| CliError::lib(e, None))?;
    let out = a.out.as_deref();
    finish_io(write_timing_csv(&rows, output(out)?), out)?;
    let m = RunManifest::new("bench", start)
        .parameters(json!({ "edges": a.edges, "repeats": a.repeats, "rows": rows }))
        .seed(Some(a.seed))
        .output(out);
    save_manifest(m, out, a.manifest.as_deref())
}

fn cmd_oracle_best_k(a: &BestKArgs) -> CliResult<()> {
    let g = load_graph(&a.input)?.value;
    let r = brute_force_best_k(&g, a.k, a.limit).map_err(|e| CliError::lib(e, None))?;
    write_json(&r.to_json(&g), a.out.as_deref())
}

fn cmd_oracle_shapley(a: &ShapleyOracleArgs) -> CliResult<()> {
    let g = load_graph(&a.input)?.value;
    let s = brute_force_shapley(&g, a.max_contributors).map_err(|e| CliError::lib(e, None))?;
    let rows: Vec<_> = g
        .contributors()
        .map(|c| json!({ "contributor": g.contributor_label(c), "shapley": s.values()[c as usize] }))
        .collect();
    write_json(&rows, a.out.as_deref())
}

fn cmd_oracle_supermodular(a: &SupermodularArgs) -> CliResult<()> {
    let g = load_graph(&a.input)?.value;
    let mode = match a.sampled {
        Some(trials) => {
            let seed = a
                .seed
                .ok_or_else(|| CliError::Usage("--seed is required with --sampled".into()))?;
            ChainCheck::Sampled { trials, seed }
        }
        None => ChainCheck::Exhaustive,
    };
    let outcome = check_supermodular(&g, mode).map_err(|e| CliError::lib(e, None))?;
    let labels = |s: &[u32]| -> Vec<&str> { s.iter().map(|&c| g.contributor_label(c)).collect() };
    let value = match &outcome {
        SupermodularityOutcome::Pass { chains } => json!({ "pass": true, "chains": chains }),
        SupermodularityOutcome::Violation(v) => json!({
            "pass": false,
            "kind": format!("{:?}", v.kind).to_lowercase(),
            "a": labels(&v.a),
            "b": labels(&v.b),
            "v": v.v.map(|c| g.contributor_label(c)),
        }),
    };
    write_json(&value, a.out.as_deref())?;
    if outcome.is_pass() {
        Ok(())
    } else {
        Err(CliError::Data("coverage violated monotonicity or supermodularity".into()))
    }
}
