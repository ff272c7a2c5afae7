use std::path::{Path, PathBuf};

use graph_core::{parse_dimacs, Family, Graph};

use crate::CliError;

/// Where a graph comes from: a DIMACS file or a family spec string.
#[derive(Clone, Debug)]
pub enum GraphSource {
    File(PathBuf),
    Family(String),
}

impl GraphSource {
    pub fn from_cli(path: Option<PathBuf>, family: Option<String>) -> Result<GraphSource, CliError> {
        match (path, family) {
            (Some(p), None) => Ok(GraphSource::File(p)),
            (None, Some(f)) => Ok(GraphSource::Family(f)),
            (Some(_), Some(_)) => Err(CliError::Input(
                "give either a graph file or --family, not both".into(),
            )),
            (None, None) => Err(CliError::Input("a graph file or --family is required".into())),
        }
    }

    /// Loads the graph; DIMACS warnings go to stderr.
    pub fn load(&self) -> Result<Graph, CliError> {
        match self {
            GraphSource::File(path) => load_dimacs_file(path),
            GraphSource::Family(spec) => {
                let family: Family = spec
                    .parse()
                    .map_err(|e| CliError::Input(format!("bad family spec '{spec}': {e}")))?;
                family
                    .generate()
                    .map_err(|e| CliError::Input(format!("cannot generate '{spec}': {e}")))
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GraphSource::File(p) => format!("file:{}", p.display()),
            GraphSource::Family(f) => format!("family:{f}"),
        }
    }
}

fn load_dimacs_file(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let parsed = parse_dimacs(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    for warning in &parsed.warnings {
        eprintln!("warning: {}: {warning}", path.display());
    }
    Ok(parsed.graph)
}
