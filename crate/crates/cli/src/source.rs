//! Reading graphs from files or family specs, and the error type shared by
//! the commands.

use std::fmt;
use std::path::Path;

use forestprob::graph::{parse_edge_list, parse_graph6};
use forestprob::{FamilySpec, Graph};
use serde_json::{json, Value};

use crate::{Format, InputArgs};

#[derive(Debug)]
pub enum CliError {
    Core(forestprob::Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_guard() => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(msg) | CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<forestprob::Error> for CliError {
    fn from(e: forestprob::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A graph together with where it came from.
pub struct Loaded {
    pub graph: Graph,
    /// Set when the graph was given as a family spec.
    pub spec: Option<FamilySpec>,
    pub echo: Value,
}

pub fn load(input: &InputArgs) -> CliResult<Loaded> {
    if let Some(text) = &input.source.family {
        let spec: FamilySpec = text.parse()?;
        let graph = spec.construct()?;
        return Ok(Loaded { graph, spec: Some(spec), echo: json!({ "family": spec.to_string() }) });
    }
    let path = input.source.file.as_deref().expect("clap requires a source");
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let format = match input.format {
        Format::Auto if is_graph6_path(path) => Format::Graph6,
        Format::Auto => Format::Edges,
        f => f,
    };
    let graph = match format {
        Format::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(line)?
        }
        _ => parse_edge_list(&text)?,
    };
    let format_name = if format == Format::Graph6 { "graph6" } else { "edges" };
    Ok(Loaded {
        graph,
        spec: None,
        echo: json!({ "file": path.display().to_string(), "format": format_name }),
    })
}

fn is_graph6_path(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()).map(|e| e.to_ascii_lowercase()).as_deref(),
        Some("g6" | "graph6")
    )
}
