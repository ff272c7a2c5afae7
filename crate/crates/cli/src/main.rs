use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use conic_solver::SolverConfig;
use exact_combinatorics::Guards;
use theta_bounds::commands::{
    cmd_bounds, cmd_exact, cmd_reproduce_tables, cmd_search_nonmonotone, render_bounds_csv,
    render_bounds_text, render_exact_text, render_witnesses_text, write_json, BoundsOptions,
};
use theta_bounds::input::GraphSource;
use theta_bounds::{CliError, TOL_ENV_VAR};
use theta_models::BoundKind;

/// Graph-colouring bounds: exact oracles and theta-variant SDP
/// relaxations (theta, theta-, theta+, that, that').
#[derive(Parser)]
#[command(name = "theta-bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute bounds for a graph file or a generated family.
    ///
    /// Family specs use family:params syntax: complete:5, empty:3,
    /// cycle:7, path:4, petersen, circulant:8,1,2 (n then offsets),
    /// clique_union:4,3,2, clique_plus_isolated:2,7.
    Bounds {
        /// DIMACS .col file ("p edge n m" header, "e i j" lines).
        graph: Option<PathBuf>,
        /// Generate the graph instead of reading a file.
        #[arg(long)]
        family: Option<String>,
        /// Comma list from {theta, theta-, theta+, that, that'};
        /// default: all five.
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<String>,
        /// Evaluate the bounds at the complement graph (the chromatic
        /// lower bound convention).
        #[arg(long)]
        complement: bool,
        /// Also compute exact chi/omega/alpha (enumeration guards
        /// apply).
        #[arg(long)]
        exact: bool,
        /// Solver tolerance (gap and feasibility); overrides the
        /// THETA_BOUNDS_TOL environment variable and the 1e-8 default.
        #[arg(long)]
        tol: Option<f64>,
        /// Emit the report as JSON.
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit the report as CSV.
        #[arg(long)]
        csv: bool,
        /// Dump each model as <stem>.<kind>.json for external
        /// cross-checking.
        #[arg(long)]
        dump_model: Option<PathBuf>,
    },
    /// Exact chi, omega, alpha with witnesses, plus the
    /// projection-matrix cross-check on small graphs.
    Exact {
        graph: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        /// Vertex limit for the exact chromatic search (default 12).
        #[arg(long)]
        chi_limit: Option<usize>,
        /// Vertex limit for stable-set enumeration (default 20).
        #[arg(long)]
        stable_limit: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the published relaxation tables into
    /// <outdir>/table1.csv and <outdir>/table2.csv.
    ReproduceTables {
        outdir: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Search induced subgraphs of clique-union complements and seeded
    /// random graphs for non-monotone behaviour of that.
    SearchNonmonotone {
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
}

fn solver_config(tol: Option<f64>) -> Result<SolverConfig, CliError> {
    let mut cfg = SolverConfig::default();
    let tol = match tol {
        Some(t) => Some(t),
        None => match std::env::var(TOL_ENV_VAR) {
            Ok(text) => Some(text.parse::<f64>().map_err(|_| {
                CliError::Input(format!("{TOL_ENV_VAR} must be a number, got '{text}'"))
            })?),
            Err(_) => None,
        },
    };
    if let Some(t) = tol {
        if !(t > 0.0 && t < 1.0) {
            return Err(CliError::Input(format!("tolerance must be in (0, 1), got {t}")));
        }
        cfg.gap_tol = t;
        cfg.feas_tol = t;
    }
    Ok(cfg)
}

fn parse_kinds(raw: &[String]) -> Result<Vec<BoundKind>, CliError> {
    if raw.is_empty() {
        return Ok(vec![
            BoundKind::Theta,
            BoundKind::ThetaMinus,
            BoundKind::ThetaPlus,
            BoundKind::ThetaHat,
            BoundKind::ThetaHatPrime,
        ]);
    }
    raw.iter()
        .map(|s| {
            BoundKind::parse(s.trim()).ok_or_else(|| {
                CliError::Input(format!(
                    "unknown bound '{s}'; expected theta, theta-, theta+, that, or that'"
                ))
            })
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    match cli.command {
        Command::Bounds {
            graph,
            family,
            bounds,
            complement,
            exact,
            tol,
            json,
            csv,
            dump_model,
        } => {
            let source = GraphSource::from_cli(graph, family)?;
            let opts = BoundsOptions {
                kinds: parse_kinds(&bounds)?,
                complement,
                exact,
                config: solver_config(tol)?,
                dump_model,
            };
            let report = cmd_bounds(&source, &opts)?;
            if json {
                write_json(&report, stdout.lock())?;
            } else if csv {
                print!("{}", render_bounds_csv(&report)?);
            } else {
                print!("{}", render_bounds_text(&report));
            }
            Ok(())
        }
        Command::Exact { graph, family, chi_limit, stable_limit, json } => {
            let source = GraphSource::from_cli(graph, family)?;
            let mut guards = Guards::default();
            if let Some(limit) = chi_limit {
                guards.chromatic = limit;
            }
            if let Some(limit) = stable_limit {
                guards.stable_sets = limit;
            }
            let report = cmd_exact(&source, &guards)?;
            if json {
                write_json(&report, stdout.lock())?;
            } else {
                print!("{}", render_exact_text(&report));
            }
            Ok(())
        }
        Command::ReproduceTables { outdir, tol } => {
            let cfg = solver_config(tol)?;
            let summary = cmd_reproduce_tables(&outdir, &cfg)?;
            println!("wrote {}", summary.table1_path);
            println!("wrote {}", summary.table2_path);
            Ok(())
        }
        Command::SearchNonmonotone { max_vertices, tol, json } => {
            let cfg = solver_config(tol)?;
            let witnesses = cmd_search_nonmonotone(max_vertices, &cfg)?;
            if json {
                write_json(&witnesses, stdout.lock())?;
            } else {
                print!("{}", render_witnesses_text(&witnesses));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
