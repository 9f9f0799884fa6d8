// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Each test prints one `criterion N ...: PASS|FAIL` line.
//!
//! The real-network criteria read from `NETFRAC_DATA_DIR` (default: `data/`
//! at the workspace root) and are ignored by default; fetch the files with
//! `scripts/fetch_datasets.sh` and run `cargo test --test acceptance -- --include-ignored`.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use netfrac::dimension::entropy_of_box_sizes;
use netfrac::{
    all_pairs_distances, compute_series, default_box_sizes, estimate_dimensions, exact_min_cover, fit_loglog,
    generate, greedy_cover, information_entropy, random_permutation, BoxCover, DistanceMatrix, EstimateConfig,
    Graph, GraphKind, PermutationMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn report(criterion: u32, name: &str, ok: bool, detail: &str) {
    println!("criterion {criterion} ({name}): {} | {detail}", verdict(ok));
}

fn distances(kind: GraphKind, params: &[usize]) -> DistanceMatrix {
    all_pairs_distances(&generate(kind, params).unwrap()).unwrap()
}

// ---------------------------------------------------------------------------
// Real networks

struct Network {
    name: &'static str,
    files: &'static [&'static str],
    n: usize,
    m: usize,
    runs: u64,
    d_i: (f64, f64),
    d_b: (f64, f64),
    limit: Duration,
}

const NETWORKS: [Network; 4] = [
    Network {
        name: "dolphins",
        files: &["dolphins.gml"],
        n: 62,
        m: 159,
        runs: 1000,
        d_i: (2.061, 0.30),
        d_b: (1.888, 0.30),
        limit: Duration::from_secs(60),
    },
    Network {
        name: "football",
        files: &["football.gml"],
        n: 115,
        m: 615,
        runs: 1000,
        d_i: (2.766, 0.40),
        d_b: (2.688, 0.40),
        limit: Duration::from_secs(120),
    },
    Network {
        name: "email",
        files: &["email.txt", "email.net", "out.arenas-email"],
        n: 1133,
        m: 10902,
        runs: 200,
        d_i: (4.838, 0.70),
        d_b: (3.833, 0.60),
        limit: Duration::from_secs(600),
    },
    Network {
        name: "power",
        files: &["power.gml"],
        n: 4941,
        m: 6594,
        runs: 20,
        d_i: (2.694, 0.40),
        d_b: (2.411, 0.40),
        limit: Duration::from_secs(1800),
    },
];

struct Measured {
    n: usize,
    m: usize,
    d_i: f64,
    d_b: f64,
    q_i: f64,
    q_b: f64,
    elapsed: Duration,
}

fn data_dir() -> PathBuf {
    std::env::var_os("NETFRAC_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

fn analyze_file(path: &Path, runs: u64) -> Measured {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_netfrac"))
        .arg("analyze")
        .arg(path)
        .args(["--runs", &runs.to_string(), "--seed", "42"])
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let f = |k: &str| v[k].as_f64().unwrap();
    let u = |k: &str| v[k].as_u64().unwrap() as usize;
    Measured {
        n: u("n"),
        m: u("m"),
        d_i: f("d_i"),
        d_b: f("d_b"),
        q_i: f("Q_i"),
        q_b: f("Q_b"),
        elapsed,
    }
}

fn measured_networks() -> &'static [Measured] {
    static CELL: OnceLock<Vec<Measured>> = OnceLock::new();
    CELL.get_or_init(|| {
        let dir = data_dir();
        NETWORKS
            .iter()
            .map(|net| {
                let path = net
                    .files
                    .iter()
                    .map(|f| dir.join(f))
                    .find(|p| p.exists())
                    .unwrap_or_else(|| panic!("{} not found in {}", net.name, dir.display()));
                analyze_file(&path, net.runs)
            })
            .collect()
    })
}

#[test]
#[ignore = "needs the four datasets; see scripts/fetch_datasets.sh"]
fn criterion_1_table_reproduction() {
    let mut all = true;
    for (net, got) in NETWORKS.iter().zip(measured_networks()) {
        let ok = got.n == net.n
            && (got.d_i - net.d_i.0).abs() <= net.d_i.1
            && (got.d_b - net.d_b.0).abs() <= net.d_b.1
            && got.d_i > got.d_b
            && got.elapsed < net.limit;
        all &= ok;
        println!(
            "  {}: n={} (want {}), m={} (listed {}), d_i={:.3} (want {}±{}), d_b={:.3} (want {}±{}), {:.1}s (limit {}s), R={}: {}",
            net.name,
            got.n,
            net.n,
            got.m,
            net.m,
            got.d_i,
            net.d_i.0,
            net.d_i.1,
            got.d_b,
            net.d_b.0,
            net.d_b.1,
            got.elapsed.as_secs_f64(),
            net.limit.as_secs(),
            net.runs,
            verdict(ok)
        );
    }
    report(1, "real-network dimensions", all, "four networks, d_i > d_b on each");
    assert!(all);
}

#[test]
#[ignore = "needs the four datasets; see scripts/fetch_datasets.sh"]
fn criterion_2_information_fit_is_tighter() {
    let got = measured_networks();
    let tighter: Vec<&str> = NETWORKS
        .iter()
        .zip(got)
        .filter(|(_, g)| g.q_i < g.q_b)
        .map(|(net, _)| net.name)
        .collect();
    for (net, g) in NETWORKS.iter().zip(got) {
        println!("  {}: Q_i={:.4} Q_b={:.4}", net.name, g.q_i, g.q_b);
    }
    let ok = tighter.len() >= 3;
    report(2, "Q_i < Q_b", ok, &format!("{} of 4 networks: {tighter:?}", tighter.len()));
    assert!(ok);
}

// ---------------------------------------------------------------------------
// Exact oracle

/// Every connected labeled graph on `n` nodes.
fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Graph::with_node_count(n, edges.collect::<Vec<_>>())
        })
        .filter(Graph::is_connected)
        .collect()
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p = rng.random_range(0.2..0.6);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::with_node_count(n, edges);
        if g.is_connected() {
            return g;
        }
    }
}

#[derive(Default)]
struct OracleTally {
    cases: usize,
    optimal: usize,
    violations: usize,
}

fn check_against_exact(g: &Graph, rng: &mut ChaCha8Rng, tally: &mut OracleTally) {
    let d = all_pairs_distances(g).unwrap();
    let n = d.node_count();
    for l in 1..=d.diameter() + 1 {
        let exact = exact_min_cover(&d, l).unwrap();
        let mut best = usize::MAX;
        for _ in 0..100 {
            let cover = greedy_cover(&d, l, &random_permutation(rng, n)).unwrap();
            if !cover.is_valid_for(&d) || cover.box_count() < exact {
                tally.violations += 1;
            }
            best = best.min(cover.box_count());
        }
        tally.cases += 1;
        tally.optimal += usize::from(best == exact);
    }
}

#[test]
fn criterion_3_greedy_against_exact_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut tally = OracleTally::default();
    let mut graphs = 0;
    for n in 1..=6 {
        for g in connected_graphs(n) {
            check_against_exact(&g, &mut rng, &mut tally);
            graphs += 1;
        }
    }
    for n in [7, 8] {
        for _ in 0..200 {
            check_against_exact(&random_connected(&mut rng, n), &mut rng, &mut tally);
            graphs += 1;
        }
    }
    let rate = tally.optimal as f64 / tally.cases as f64;
    let ok = tally.violations == 0 && rate >= 0.90;
    report(
        3,
        "greedy vs exact",
        ok,
        &format!(
            "{graphs} graphs, {} (graph, l) cases, {} violations, min-of-100 optimal on {:.2}%",
            tally.cases,
            tally.violations,
            100.0 * rate
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// Entropy identities

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> BoxCover {
    let k = rng.random_range(1..=n);
    let mut boxes = vec![Vec::new(); k];
    for node in 0..n {
        let b = if node < k { node } else { rng.random_range(0..k) };
        boxes[b].push(node);
    }
    BoxCover { box_size: 2, boxes, seed: None }
}

#[test]
fn criterion_4_entropy_identities() {
    let fixtures = [
        ("path(16)", distances(GraphKind::Path, &[16])),
        ("cycle(11)", distances(GraphKind::Cycle, &[11])),
        ("star(7)", distances(GraphKind::Star, &[7])),
        ("complete(6)", distances(GraphKind::Complete, &[6])),
        ("grid(6,7)", distances(GraphKind::Grid, &[6, 7])),
        ("path(256)", distances(GraphKind::Path, &[256])),
    ];
    let mut endpoints_ok = true;
    for (name, d) in &fixtures {
        let n = d.node_count();
        let sizes = default_box_sizes(d);
        let s = compute_series(d, 20, 4, &sizes, PermutationMode::Independent).unwrap();
        let exact = (0..s.runs).all(|r| {
            s.information[r][0] == (n as f64).ln() && *s.information[r].last().unwrap() == 0.0
        });
        if !exact {
            println!("  {name}: endpoint mismatch");
        }
        endpoints_ok &= exact;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = rng.random_range(1..=500);
        let cover = random_partition(&mut rng, n);
        let direct: f64 = cover
            .boxes
            .iter()
            .map(|b| {
                let p = b.len() as f64 / n as f64;
                -p * p.ln()
            })
            .sum();
        worst = worst.max((information_entropy(&cover, n) - direct).abs());
    }
    let oracle_ok = worst <= 1e-12;
    let frozen_ok = (entropy_of_box_sizes([3, 1], 4) - 0.562_335_144_618_808_3).abs() < 1e-15;
    let ok = endpoints_ok && oracle_ok && frozen_ok;
    report(
        4,
        "entropy identities",
        ok,
        &format!(
            "I(1) = ln n and I(diam+1) = 0 on {} fixtures: {}; max oracle error {worst:.2e} over 1000 partitions",
            fixtures.len(),
            verdict(endpoints_ok)
        ),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// Regression

#[test]
fn criterion_5_planted_power_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let (mut worst_dim, mut worst_sse) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let c = rng.random_range(0.01..100.0);
        let dim = rng.random_range(0.1..6.0);
        let count = rng.random_range(3..60);
        let xs: Vec<f64> = (1..=count).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| c * x.powf(-dim)).collect();
        let fit = fit_loglog(&xs, &ys).unwrap();
        worst_dim = worst_dim.max((fit.dimension - dim).abs());
        worst_sse = worst_sse.max(fit.sse);
    }
    let ok = worst_dim <= 1e-9 && worst_sse <= 1e-18;
    report(
        5,
        "planted power law",
        ok,
        &format!("1000 fits, max |d - d*| = {worst_dim:.2e}, max Q = {worst_sse:.2e}"),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// Analytic fixtures

#[test]
fn criterion_6_analytic_fixture_dimensions() {
    let config = EstimateConfig { runs: 50, seed: 42, ..EstimateConfig::default() };
    let path = estimate_dimensions(&distances(GraphKind::Path, &[256]), &config).unwrap();
    let grid = estimate_dimensions(&distances(GraphKind::Grid, &[30, 30]), &config).unwrap();
    let path_ok = (0.85..=1.15).contains(&path.box_fit.dimension);
    let grid_ok = (1.6..=2.2).contains(&grid.box_fit.dimension);

    // Optimal path covers need ceil(256 / l) boxes; fitted over the same range.
    let xs: Vec<f64> = (1..=256).map(f64::from).collect();
    let ys: Vec<f64> = (1..=256u32).map(|l| f64::from(256u32.div_ceil(l))).collect();
    let optimal = fit_loglog(&xs, &ys).unwrap().dimension;

    println!("  path(256): d_b = {:.4} (want [0.85, 1.15]), optimal covers give {optimal:.4}", path.box_fit.dimension);
    println!("  grid(30,30): d_b = {:.4} (want [1.6, 2.2])", grid.box_fit.dimension);
    let ok = path_ok && grid_ok;
    report(
        6,
        "analytic fixtures",
        ok,
        &format!("R=50, default full fit range; path {}, grid {}", verdict(path_ok), verdict(grid_ok)),
    );
    assert!(ok);
}

// ---------------------------------------------------------------------------
// Determinism

fn run_cli(input: &Path, dir: &Path, tag: &str, threads: u32) -> (Vec<u8>, Vec<u8>) {
    let series = dir.join(format!("{tag}.csv"));
    let out = Command::new(env!("CARGO_BIN_EXE_netfrac"))
        .arg("analyze")
        .arg(input)
        .args(["--runs", "60", "--seed", "9", "--threads", &threads.to_string(), "--series"])
        .arg(&series)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    (out.stdout, std::fs::read(series).unwrap())
}

#[test]
fn criterion_7_byte_identical_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("grid.txt");
    let mut text = Vec::new();
    netfrac::write_edgelist(&generate(GraphKind::Grid, &[9, 11]).unwrap(), &mut text).unwrap();
    std::fs::write(&input, text).unwrap();

    let runs = [("a1", 1), ("a8", 8), ("b1", 1), ("b8", 8)].map(|(tag, t)| run_cli(&input, dir.path(), tag, t));
    let ok = runs.iter().all(|r| *r == runs[0]) && !runs[0].0.is_empty() && !runs[0].1.is_empty();
    report(
        7,
        "determinism",
        ok,
        &format!("JSON and CSV from two invocations each at 1 and 8 workers ({} + {} bytes)", runs[0].0.len(), runs[0].1.len()),
    );
    assert!(ok);
}
