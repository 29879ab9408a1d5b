//! Loading graphs, presentations, and representations from files and flags.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use qgs_core::graph::{builtin_graph, parse_graph, Graph, GraphFamily};
use qgs_core::presentation::{
    b0_presentation, graph_presentation, quantum_perm_presentation, Presentation,
};
use qgs_core::reps::MatrixRep;

use crate::formats::{GraphDto, PresentationDto, RepDto};

/// Errors surfaced to the user; every variant maps to exit code 1.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

fn err<T>(msg: String) -> Result<T, InputError> {
    Err(InputError(msg))
}

fn read_file(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {}", path.display(), e)))
}

/// Reads a graph file; a leading `{` selects JSON, anything else the text
/// format (vertex count line, then one `s t` edge per line).
pub fn load_graph_file(path: &Path) -> Result<Graph, InputError> {
    let content = read_file(path)?;
    if content.trim_start().starts_with('{') {
        let dto: GraphDto = serde_json::from_str(&content)
            .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
        Graph::new(dto.vertices, dto.edges)
            .map_err(|e| InputError(format!("{}: {}", path.display(), e)))
    } else {
        parse_graph(&content).map_err(|e| InputError(format!("{}: {}", path.display(), e)))
    }
}

pub fn parse_family(name: &str) -> Result<GraphFamily, InputError> {
    match name.to_ascii_lowercase().as_str() {
        "empty" => Ok(GraphFamily::Empty),
        "loops" => Ok(GraphFamily::Loops),
        "complete" => Ok(GraphFamily::Complete),
        "complete-noloops" => Ok(GraphFamily::CompleteNoLoops),
        "cycle" => Ok(GraphFamily::Cycle),
        "d4" => Ok(GraphFamily::D4),
        other => err(format!(
            "unknown family `{}` (expected empty, loops, complete, complete-noloops, cycle, d4)",
            other
        )),
    }
}

/// Resolves `--graph` / `--family --n` into a graph.
pub fn resolve_graph(
    graph: Option<&Path>,
    family: Option<&str>,
    n: Option<u16>,
) -> Result<Graph, InputError> {
    match (graph, family) {
        (Some(_), Some(_)) => err("give either --graph or --family, not both".into()),
        (Some(path), None) => load_graph_file(path),
        (None, Some(fam)) => {
            let family = parse_family(fam)?;
            let n = n.unwrap_or(0);
            builtin_graph(family, n).map_err(|e| InputError(e.to_string()))
        }
        (None, None) => err("a graph is required: pass --graph <file> or --family <name>".into()),
    }
}

/// Loads a presentation from a JSON file: generator labels plus relation
/// polynomials in the same grammar the `--poly` flag uses.
pub fn load_presentation_file(path: &Path) -> Result<Presentation, InputError> {
    let content = read_file(path)?;
    let dto: PresentationDto = serde_json::from_str(&content)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
    let scratch = Presentation::custom(dto.generators.clone(), Vec::new())
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
    let mut relations = Vec::with_capacity(dto.relations.len());
    for (i, text) in dto.relations.iter().enumerate() {
        let poly = scratch
            .parse_poly(text)
            .map_err(|e| InputError(format!("{}: relation {}: {}", path.display(), i, e)))?;
        relations.push(poly);
    }
    Presentation::custom(dto.generators, relations)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))
}

/// Resolves the presentation selector: a keyword, or a path to JSON.
///
/// - `b0`: the fixed eight-projection presentation
/// - `quantum-perm`: magic-unitary presentation, size from `--n`
/// - `graph`: graph presentation from `--graph`/`--family`
/// - anything else: a presentation JSON file
///
/// With no selector, graph arguments choose `graph`.
pub fn resolve_presentation(
    spec: Option<&str>,
    graph: Option<&Path>,
    family: Option<&str>,
    n: Option<u16>,
) -> Result<Presentation, InputError> {
    match spec {
        None => {
            if graph.is_some() || family.is_some() {
                Ok(graph_presentation(&resolve_graph(graph, family, n)?))
            } else {
                err("a presentation is required: pass --presentation or a graph".into())
            }
        }
        Some("b0") => Ok(b0_presentation()),
        Some("quantum-perm") => match n {
            Some(n) if n >= 1 => Ok(quantum_perm_presentation(n)),
            _ => err("--presentation quantum-perm needs --n <size> with n >= 1".into()),
        },
        Some("graph") => Ok(graph_presentation(&resolve_graph(graph, family, n)?)),
        Some(path) => load_presentation_file(Path::new(path)),
    }
}

/// Loads a representation JSON file over the given presentation.
pub fn load_rep_file(
    path: &Path,
    presentation: Arc<Presentation>,
) -> Result<MatrixRep, InputError> {
    let content = read_file(path)?;
    let dto: RepDto = serde_json::from_str(&content)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))?;
    dto.to_rep(presentation)
        .map_err(|e| InputError(format!("{}: {}", path.display(), e)))
}
