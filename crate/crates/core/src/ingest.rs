//! Loading and writing hypergraph datasets.
//!
//! Two on-disk formats are supported:
//!
//! * **Edge-list lines**: one hyperedge per line, node labels separated
//!   by commas and/or whitespace. Empty lines and lines starting with
//!   `#` are skipped.
//! * **Nverts/simplices**: a `<name>-nverts.txt` file with one integer
//!   per line (hyperedge sizes) and a `<name>-simplices.txt` file with
//!   one node label per line, consumed in order. Companion timestamp
//!   files are ignored.
//!
//! Labels are remapped to dense ids (`0..num_nodes`) in order of first
//! appearance across the hyperedges that survive preprocessing. Within
//! each hyperedge duplicate labels collapse first; optionally size-1
//! hyperedges are dropped and duplicate hyperedges (set equality) are
//! reduced to their first occurrence.

use crate::error::{Error, Result};
use crate::hypergraph::{build_incidence, Hypergraph, HyperedgeRecord};
use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

/// On-disk dataset format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeListLines,
    NVertsSimplices,
}

/// Preprocessing switches applied while loading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoadOptions {
    /// Keep only the first occurrence of each hyperedge (set equality).
    pub dedupe: bool,
    /// Drop hyperedges with a single node (after within-edge collapse).
    pub drop_singletons: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            dedupe: true,
            drop_singletons: true,
        }
    }
}

/// A loaded hypergraph plus the original node labels, indexed by dense id.
#[derive(Debug, Clone)]
pub struct LoadedHypergraph {
    pub graph: Hypergraph,
    pub labels: Vec<String>,
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        source,
    }
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

/// Reads raw label edges in edge-list format. Duplicate labels within a
/// line collapse, keeping first-occurrence order.
fn read_edge_list(path: &Path) -> Result<Vec<Vec<String>>> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    let reader = BufReader::new(file);
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| io_err(path, e))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens: Vec<String> = Vec::new();
        let mut seen: HashSet<&str> = HashSet::new();
        for tok in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            if seen.insert(tok) {
                tokens.push(tok.to_string());
            }
        }
        if tokens.is_empty() {
            return Err(parse_err(path, i + 1, "line has no node labels"));
        }
        edges.push(tokens);
    }
    Ok(edges)
}

/// Reads raw label edges from an nverts/simplices file pair.
fn read_nverts(nverts_path: &Path, simplices_path: &Path) -> Result<Vec<Vec<String>>> {
    let nverts_file = File::open(nverts_path).map_err(|e| io_err(nverts_path, e))?;
    let mut sizes = Vec::new();
    for (i, line) in BufReader::new(nverts_file).lines().enumerate() {
        let line = line.map_err(|e| io_err(nverts_path, e))?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let size: usize = trimmed
            .parse()
            .map_err(|_| parse_err(nverts_path, i + 1, format!("invalid size {trimmed:?}")))?;
        if size == 0 {
            return Err(parse_err(nverts_path, i + 1, "hyperedge size 0"));
        }
        sizes.push(size);
    }

    let simplices_file = File::open(simplices_path).map_err(|e| io_err(simplices_path, e))?;
    let mut labels: Vec<String> = Vec::new();
    let mut last_line = 0usize;
    for (i, line) in BufReader::new(simplices_file).lines().enumerate() {
        let line = line.map_err(|e| io_err(simplices_path, e))?;
        let trimmed = line.trim();
        if !trimmed.is_empty() {
            labels.push(trimmed.to_string());
            last_line = i + 1;
        }
    }
    let needed: usize = sizes.iter().sum();
    if labels.len() < needed {
        return Err(parse_err(
            simplices_path,
            last_line,
            format!(
                "simplices file has {} labels but the nverts file requires {needed}",
                labels.len()
            ),
        ));
    }
    if labels.len() > needed {
        return Err(parse_err(
            simplices_path,
            last_line,
            format!(
                "simplices file has {} trailing labels beyond the {needed} required",
                labels.len() - needed
            ),
        ));
    }

    let mut edges = Vec::with_capacity(sizes.len());
    let mut cursor = labels.into_iter();
    for size in sizes {
        let mut tokens: Vec<String> = Vec::with_capacity(size);
        let mut seen: HashSet<String> = HashSet::new();
        for _ in 0..size {
            let label = cursor.next().expect("label count checked above");
            if seen.insert(label.clone()) {
                tokens.push(label);
            }
        }
        edges.push(tokens);
    }
    Ok(edges)
}

/// Resolves the nverts/simplices pair from either file's path or their
/// common prefix (`<name>` or `<name>-nverts.txt` or `<name>-simplices.txt`).
fn nverts_paths(path: &Path) -> (std::path::PathBuf, std::path::PathBuf) {
    let s = path.display().to_string();
    let prefix = s
        .strip_suffix("-nverts.txt")
        .or_else(|| s.strip_suffix("-simplices.txt"))
        .unwrap_or(&s);
    (
        format!("{prefix}-nverts.txt").into(),
        format!("{prefix}-simplices.txt").into(),
    )
}

fn preprocess(mut raw: Vec<Vec<String>>, options: LoadOptions) -> Vec<Vec<String>> {
    if options.drop_singletons {
        raw.retain(|edge| edge.len() > 1);
    }
    if options.dedupe {
        let mut seen: HashSet<Vec<String>> = HashSet::new();
        raw.retain(|edge| {
            let mut key = edge.clone();
            key.sort_unstable();
            seen.insert(key)
        });
    }
    raw
}

fn densify(raw: Vec<Vec<String>>, path: &Path) -> Result<LoadedHypergraph> {
    if raw.is_empty() {
        return Err(Error::EmptyDataset {
            path: path.display().to_string(),
        });
    }
    let mut ids: HashMap<String, u32> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut records = Vec::with_capacity(raw.len());
    for edge in raw {
        let mut nodes = Vec::with_capacity(edge.len());
        for label in edge {
            let next = labels.len() as u32;
            let id = *ids.entry(label.clone()).or_insert_with(|| {
                labels.push(label);
                next
            });
            nodes.push(id);
        }
        records.push(HyperedgeRecord::new(nodes));
    }
    let graph = build_incidence(labels.len(), records)?;
    Ok(LoadedHypergraph { graph, labels })
}

/// Loads a hypergraph and its label table.
pub fn load_hypergraph_with_labels(
    path: impl AsRef<Path>,
    format: InputFormat,
    options: LoadOptions,
) -> Result<LoadedHypergraph> {
    let path = path.as_ref();
    let raw = match format {
        InputFormat::EdgeListLines => read_edge_list(path)?,
        InputFormat::NVertsSimplices => {
            let (nverts, simplices) = nverts_paths(path);
            read_nverts(&nverts, &simplices)?
        }
    };
    densify(preprocess(raw, options), path)
}

/// Loads a hypergraph, discarding the label table.
pub fn load_hypergraph(
    path: impl AsRef<Path>,
    format: InputFormat,
    options: LoadOptions,
) -> Result<Hypergraph> {
    Ok(load_hypergraph_with_labels(path, format, options)?.graph)
}

/// Writes a hypergraph as edge-list lines over dense ids. Loading the
/// result reproduces the hypergraph up to node relabeling.
pub fn write_hypergraph(g: &Hypergraph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| io_err(path, e))?;
    let mut out = BufWriter::new(file);
    for edge in g.edges() {
        let mut first = true;
        for &v in &edge.nodes {
            if !first {
                write!(out, " ").map_err(|e| io_err(path, e))?;
            }
            write!(out, "{v}").map_err(|e| io_err(path, e))?;
            first = false;
        }
        writeln!(out).map_err(|e| io_err(path, e))?;
    }
    out.flush().map_err(|e| io_err(path, e))
}

/// Writes the edge list plus a parallel file of provenance levels (one
/// per line, same order; 0 for hyperedges without a recorded level).
pub fn write_hypergraph_with_levels(
    g: &Hypergraph,
    path: impl AsRef<Path>,
    levels_path: impl AsRef<Path>,
) -> Result<()> {
    write_hypergraph(g, &path)?;
    let levels_path = levels_path.as_ref();
    let file = File::create(levels_path).map_err(|e| io_err(levels_path, e))?;
    let mut out = BufWriter::new(file);
    for edge in g.edges() {
        writeln!(out, "{}", edge.level.unwrap_or(0)).map_err(|e| io_err(levels_path, e))?;
    }
    out.flush().map_err(|e| io_err(levels_path, e))
}
