use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use conic_solver::SolverConfig;
use exact_combinatorics::{alpha_exact, chi_exact, chi_via_projection, Guards};
use graph_core::{random_gnp, Family, Graph};
use moment_extension::{hat_theta_prime, MomentError};
use theta_models::{eval_bound, BoundKind, BoundValue};

use crate::input::GraphSource;
use crate::report::{
    round3, trunc3, BoundEntry, BoundsReport, ExactValues, GraphDescriptor, SolverSettings,
};
use crate::{CliError, TOOL_VERSION};

#[derive(Clone, Debug)]
pub struct BoundsOptions {
    pub kinds: Vec<BoundKind>,
    pub complement: bool,
    pub exact: bool,
    pub config: SolverConfig,
    /// When set, each model is also dumped as JSON next to this stem.
    pub dump_model: Option<PathBuf>,
}

fn solve_kind(kind: BoundKind, g: &Graph, cfg: &SolverConfig) -> Result<BoundValue, CliError> {
    match kind {
        BoundKind::ThetaHatPrime => hat_theta_prime(g, cfg).map_err(|e| match e {
            MomentError::GuardExceeded { .. } => CliError::Input(e.to_string()),
            MomentError::Bound(b) => CliError::Runtime(b.to_string()),
        }),
        other => eval_bound(other, g, cfg).map_err(|e| CliError::Runtime(e.to_string())),
    }
}

pub fn cmd_bounds(source: &GraphSource, opts: &BoundsOptions) -> Result<BoundsReport, CliError> {
    let loaded = source.load()?;
    let eval_graph = if opts.complement { loaded.complement() } else { loaded.clone() };

    let mut bounds = Vec::new();
    for &kind in &opts.kinds {
        if let Some(stem) = &opts.dump_model {
            dump_model(kind, &eval_graph, stem)?;
        }
        let bound = solve_kind(kind, &eval_graph, &opts.config)?;
        bounds.push(BoundEntry::from_bound(&bound));
    }

    let exact = if opts.exact {
        let guards = Guards::default();
        let alpha = alpha_exact(&loaded, &guards).map_err(|e| CliError::Input(e.to_string()))?;
        let omega = alpha_exact(&loaded.complement(), &guards)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let chi = chi_exact(&loaded, &guards).map_err(|e| CliError::Input(e.to_string()))?;
        Some(ExactValues {
            chi: chi.chi,
            omega: omega.alpha,
            alpha: alpha.alpha,
            coloring: chi.witness.parts().to_vec(),
            max_stable_set: alpha.witness,
            chi_via_projection: None,
        })
    } else {
        None
    };

    Ok(BoundsReport {
        tool_version: TOOL_VERSION.to_string(),
        graph: GraphDescriptor {
            n: loaded.n(),
            m: loaded.edge_count(),
            source: source.describe(),
            fingerprint: loaded.fingerprint(),
            complemented: opts.complement,
        },
        bounds,
        exact,
        solver: SolverSettings::from(&opts.config),
    })
}

fn dump_model(kind: BoundKind, g: &Graph, stem: &Path) -> Result<(), CliError> {
    let program = match kind {
        BoundKind::Theta => theta_models::build_theta_primal(g),
        BoundKind::ThetaMinus => theta_models::build_theta_minus(g),
        BoundKind::ThetaPlus => theta_models::build_theta_plus(g),
        BoundKind::ThetaHat => theta_models::build_hat_theta(g),
        BoundKind::ThetaHatPrime => moment_extension::build_hat_theta_prime(g).program,
    };
    let path = stem.with_extension(format!("{}.json", kind.as_str().replace('\'', "p")));
    let json = serde_json::to_string_pretty(&program.to_debug_json())
        .expect("program dump serializes");
    std::fs::write(&path, json)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

pub fn render_bounds_text(report: &BoundsReport) -> String {
    let mut out = String::new();
    let g = &report.graph;
    out.push_str(&format!(
        "graph {} (n={}, m={}){}\n",
        g.source,
        g.n,
        g.m,
        if g.complemented { ", bounds evaluated at the complement" } else { "" }
    ));
    for b in &report.bounds {
        out.push_str(&format!(
            "  {:<7} {:>12.6}   gap {:.2e}  pres {:.2e}  dres {:.2e}  iters {}\n",
            b.kind,
            b.value,
            b.certificate.relative_gap,
            b.certificate.primal_residual,
            b.certificate.dual_residual,
            b.iterations
        ));
    }
    if let Some(e) = &report.exact {
        out.push_str(&format!("  exact: chi={} omega={} alpha={}\n", e.chi, e.omega, e.alpha));
    }
    out
}

pub fn render_bounds_csv(report: &BoundsReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "source",
        "n",
        "m",
        "complemented",
        "kind",
        "value",
        "value_trunc3",
        "status",
        "iterations",
        "primal_residual",
        "dual_residual",
        "relative_gap",
        "min_psd_eigenvalue",
        "min_orthant_entry",
    ])
    .map_err(csv_err)?;
    let g = &report.graph;
    for b in &report.bounds {
        w.write_record([
            g.source.clone(),
            g.n.to_string(),
            g.m.to_string(),
            g.complemented.to_string(),
            b.kind.clone(),
            b.value.to_string(),
            format!("{:.3}", trunc3(b.value)),
            b.status.clone(),
            b.iterations.to_string(),
            b.certificate.primal_residual.to_string(),
            b.certificate.dual_residual.to_string(),
            b.certificate.relative_gap.to_string(),
            b.certificate.min_psd_eigenvalue.to_string(),
            b.certificate
                .min_orthant_entry
                .map(|v| v.to_string())
                .unwrap_or_default(),
        ])
        .map_err(csv_err)?;
    }
    String::from_utf8(w.into_inner().map_err(|e| CliError::Runtime(e.to_string()))?)
        .map_err(|e| CliError::Runtime(e.to_string()))
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Runtime(format!("csv write failed: {e}"))
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactReport {
    pub n: usize,
    pub m: usize,
    pub source: String,
    #[serde(flatten)]
    pub values: ExactValues,
}

pub fn cmd_exact(source: &GraphSource, guards: &Guards) -> Result<ExactReport, CliError> {
    let g = source.load()?;
    let input_err = |e: exact_combinatorics::ExactError| CliError::Input(e.to_string());
    let alpha = alpha_exact(&g, guards).map_err(input_err)?;
    let omega = alpha_exact(&g.complement(), guards).map_err(input_err)?;
    let chi = chi_exact(&g, guards).map_err(input_err)?;
    let projection = if g.n() <= guards.partitions {
        Some(chi_via_projection(&g, guards).map_err(input_err)?.chi)
    } else {
        None
    };
    Ok(ExactReport {
        n: g.n(),
        m: g.edge_count(),
        source: source.describe(),
        values: ExactValues {
            chi: chi.chi,
            omega: omega.alpha,
            alpha: alpha.alpha,
            coloring: chi.witness.parts().to_vec(),
            max_stable_set: alpha.witness,
            chi_via_projection: projection,
        },
    })
}

pub fn render_exact_text(report: &ExactReport) -> String {
    let v = &report.values;
    let mut out = format!(
        "graph {} (n={}, m={})\n  chi   = {}\n  omega = {}\n  alpha = {}\n",
        report.source, report.n, report.m, v.chi, v.omega, v.alpha
    );
    if let Some(p) = v.chi_via_projection {
        out.push_str(&format!("  chi via projection matrices = {p}\n"));
    }
    out.push_str(&format!("  colouring: {:?}\n", v.coloring));
    out.push_str(&format!("  max stable set: {:?}\n", v.max_stable_set));
    out
}

/// One reproduced table row: family parameters and the three bounds,
/// all evaluated at the complement of the generated family.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub params: Vec<usize>,
    pub that: f64,
    pub that_prime: f64,
    pub theta: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TablesSummary {
    pub table1: Vec<TableRow>,
    pub table2: Vec<TableRow>,
    pub table1_path: String,
    pub table2_path: String,
}

pub const TABLE1_ROWS: [[usize; 3]; 7] = [
    [3, 3, 3],
    [4, 3, 2],
    [4, 4, 1],
    [5, 2, 2],
    [5, 3, 1],
    [6, 2, 1],
    [7, 1, 1],
];

pub const TABLE2_ROWS: [[usize; 2]; 7] = [
    [2, 7],
    [3, 6],
    [4, 5],
    [5, 4],
    [6, 3],
    [7, 2],
    [8, 1],
];

fn table_row(family: &Family, cfg: &SolverConfig, params: Vec<usize>) -> Result<TableRow, CliError> {
    let g = family
        .generate()
        .map_err(|e| CliError::Input(e.to_string()))?
        .complement();
    let that = solve_kind(BoundKind::ThetaHat, &g, cfg)?.value;
    let that_prime = solve_kind(BoundKind::ThetaHatPrime, &g, cfg)?.value;
    let theta = solve_kind(BoundKind::Theta, &g, cfg)?.value;
    Ok(TableRow { params, that, that_prime, theta })
}

fn write_table_csv(
    path: &Path,
    param_names: &[&str],
    rows: &[TableRow],
    incomplete: bool,
) -> Result<(), CliError> {
    let file = std::fs::File::create(path)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", path.display())))?;
    let mut w = csv::Writer::from_writer(file);
    let mut header: Vec<String> = param_names.iter().map(|s| s.to_string()).collect();
    for value in ["that", "that_prime", "theta"] {
        header.push(value.to_string());
        header.push(format!("{value}_trunc3"));
        header.push(format!("{value}_round3"));
    }
    w.write_record(&header).map_err(csv_err)?;
    for row in rows {
        let mut record: Vec<String> = row.params.iter().map(|p| p.to_string()).collect();
        for value in [row.that, row.that_prime, row.theta] {
            record.push(value.to_string());
            record.push(format!("{:.3}", trunc3(value)));
            record.push(format!("{:.3}", round3(value)));
        }
        w.write_record(&record).map_err(csv_err)?;
    }
    if incomplete {
        let mut flag: Vec<String> = vec!["INCOMPLETE".into(); param_names.len() + 9];
        flag.truncate(param_names.len() + 9);
        w.write_record(&flag).map_err(csv_err)?;
    }
    w.flush().map_err(|e| CliError::Runtime(e.to_string()))?;
    Ok(())
}

/// Reproduces both published tables into `outdir/table1.csv` and
/// `outdir/table2.csv`. On a solver failure the partial table is still
/// written, flagged with a trailing INCOMPLETE record, and the error is
/// propagated.
pub fn cmd_reproduce_tables(outdir: &Path, cfg: &SolverConfig) -> Result<TablesSummary, CliError> {
    std::fs::create_dir_all(outdir)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", outdir.display())))?;
    let t1_path = outdir.join("table1.csv");
    let t2_path = outdir.join("table2.csv");

    let mut table1 = Vec::new();
    for params in TABLE1_ROWS {
        let family = Family::CliqueUnion(params.to_vec());
        match table_row(&family, cfg, params.to_vec()) {
            Ok(row) => table1.push(row),
            Err(e) => {
                write_table_csv(&t1_path, &["n1", "n2", "n3"], &table1, true)?;
                return Err(CliError::Runtime(format!(
                    "table1 row {params:?} failed ({e}); partial output in {}",
                    t1_path.display()
                )));
            }
        }
    }
    write_table_csv(&t1_path, &["n1", "n2", "n3"], &table1, false)?;

    let mut table2 = Vec::new();
    for params in TABLE2_ROWS {
        let family = Family::CliquePlusIsolated(params[0], params[1]);
        match table_row(&family, cfg, params.to_vec()) {
            Ok(row) => table2.push(row),
            Err(e) => {
                write_table_csv(&t2_path, &["n1", "m"], &table2, true)?;
                return Err(CliError::Runtime(format!(
                    "table2 row {params:?} failed ({e}); partial output in {}",
                    t2_path.display()
                )));
            }
        }
    }
    write_table_csv(&t2_path, &["n1", "m"], &table2, false)?;

    Ok(TablesSummary {
        table1,
        table2,
        table1_path: t1_path.display().to_string(),
        table2_path: t2_path.display().to_string(),
    })
}

/// A non-monotonicity witness: an induced subgraph whose projection
/// theta number exceeds the host graph's.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub candidate: String,
    pub candidate_n: usize,
    pub candidate_value: f64,
    /// 1-based vertices of the induced subgraph within the candidate.
    pub subgraph_vertices: Vec<usize>,
    pub subgraph_value: f64,
}

/// Searches complements of clique unions plus seeded random graphs for
/// connected induced subgraphs H with θ̂(H) > θ̂(G) + 1e-4. For each
/// candidate the subgraph maximizing θ̂ is reported (first such in
/// vertex-mask order); absence of witnesses is a normal outcome.
pub fn cmd_search_nonmonotone(
    max_vertices: usize,
    cfg: &SolverConfig,
) -> Result<Vec<Witness>, CliError> {
    if max_vertices > 9 {
        return Err(CliError::Input(format!(
            "search is limited to 9 vertices, got {max_vertices}"
        )));
    }
    if max_vertices < 2 {
        return Ok(Vec::new());
    }

    let mut candidates: Vec<(String, Graph)> = Vec::new();
    for parts in partitions_desc(max_vertices) {
        if parts.len() < 2 {
            continue;
        }
        let family = Family::CliqueUnion(parts.clone());
        let g = family
            .generate()
            .expect("partition parts are positive")
            .complement();
        candidates.push((format!("complement({family})"), g));
    }
    for seed in 0..5u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let g = random_gnp(max_vertices, 0.5, &mut rng);
        candidates.push((format!("gnp:{max_vertices},seed={seed}"), g));
    }

    let mut cache: HashMap<String, f64> = HashMap::new();
    let mut witnesses = Vec::new();
    for (name, g) in candidates {
        let host = cached_hat_theta(&g, cfg, &mut cache)?;
        let n = g.n();
        let mut best: Option<(f64, Vec<usize>)> = None;
        for mask in 1u32..(1 << n) - 1 {
            if mask.count_ones() < 2 {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
            let h = g.induced_subgraph(&keep).expect("mask vertices are valid");
            if !h.is_connected() {
                continue;
            }
            let value = cached_hat_theta(&h, cfg, &mut cache)?;
            if best.as_ref().is_none_or(|(v, _)| value > *v) {
                best = Some((value, keep));
            }
        }
        if let Some((value, keep)) = best {
            if value > host + 1e-4 {
                witnesses.push(Witness {
                    candidate: name,
                    candidate_n: n,
                    candidate_value: host,
                    subgraph_vertices: keep,
                    subgraph_value: value,
                });
            }
        }
    }
    Ok(witnesses)
}

fn cached_hat_theta(
    g: &Graph,
    cfg: &SolverConfig,
    cache: &mut HashMap<String, f64>,
) -> Result<f64, CliError> {
    let key = g.fingerprint();
    if let Some(&v) = cache.get(&key) {
        return Ok(v);
    }
    let v = solve_kind(BoundKind::ThetaHat, g, cfg)?.value;
    cache.insert(key, v);
    Ok(v)
}

/// Partitions of n into weakly decreasing positive parts.
fn partitions_desc(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn render_witnesses_text(witnesses: &[Witness]) -> String {
    if witnesses.is_empty() {
        return "none found\n".to_string();
    }
    let mut out = String::new();
    for w in witnesses {
        out.push_str(&format!(
            "{}: theta_hat = {:.6}; induced subgraph {:?} has theta_hat = {:.6}\n",
            w.candidate, w.candidate_value, w.subgraph_vertices, w.subgraph_value
        ));
    }
    out
}

pub fn write_json<T: Serialize>(value: &T, mut sink: impl Write) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Runtime(e.to_string()))?;
    writeln!(sink, "{text}").map_err(|e| CliError::Runtime(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_are_complete_and_sorted() {
        let parts = partitions_desc(5);
        assert_eq!(parts.len(), 7);
        assert!(parts.contains(&vec![2, 2, 1]));
        for p in &parts {
            assert_eq!(p.iter().sum::<usize>(), 5);
            assert!(p.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn tiny_search_finds_nothing() {
        let witnesses = cmd_search_nonmonotone(2, &SolverConfig::default()).unwrap();
        assert!(witnesses.is_empty());
    }
}
