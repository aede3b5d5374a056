//! JSON graph documents and counterexample corpora.
//!
//! ```json
//! {"vertices": [{"id": "a", "sigma": "1/2"}],
//!  "edges":    [{"u": "a", "v": "b", "mu": "1/4"}]}
//! ```
//!
//! Memberships are strings, either `p/q` or a decimal. Output is canonical:
//! vertices sorted by id, edges by endpoint pair, values as `p/q`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::audit::{CounterexampleRecord, Measured};
use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::value::{format_rational, parse_rational, MembershipValue};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexEntry {
    id: String,
    sigma: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeEntry {
    u: String,
    v: String,
    mu: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<VertexEntry>,
    #[serde(default)]
    edges: Vec<EdgeEntry>,
}

fn field<T>(result: Result<T>, path: impl FnOnce() -> String) -> Result<T> {
    result.map_err(|e| e.context(path()))
}

impl GraphDocument {
    fn into_graph(self) -> Result<FuzzyGraph> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, entry) in self.vertices.into_iter().enumerate() {
            let id = field(VertexId::new(entry.id), || format!("vertices[{i}].id"))?;
            let sigma = field(entry.sigma.parse::<MembershipValue>(), || {
                format!("vertices[{i}].sigma")
            })?;
            vertices.push((id, sigma));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, entry) in self.edges.into_iter().enumerate() {
            let u = field(VertexId::new(entry.u), || format!("edges[{i}].u"))?;
            let v = field(VertexId::new(entry.v), || format!("edges[{i}].v"))?;
            let mu = field(entry.mu.parse::<MembershipValue>(), || format!("edges[{i}].mu"))?;
            edges.push((u, v, mu));
        }
        let vertex_ids: Vec<String> = vertices.iter().map(|(id, _)| id.to_string()).collect();
        let endpoints: Vec<(String, String)> = edges
            .iter()
            .map(|(u, v, _)| (u.to_string(), v.to_string()))
            .collect();
        FuzzyGraph::build(vertices, edges).map_err(|e| match locate(&e, &vertex_ids, &endpoints) {
            Some(path) => e.context(path),
            None => e,
        })
    }

    fn from_graph(g: &FuzzyGraph) -> Self {
        GraphDocument {
            vertices: g
                .vertices()
                .map(|(id, s)| VertexEntry {
                    id: id.to_string(),
                    sigma: s.to_string(),
                })
                .collect(),
            edges: g
                .edges()
                .map(|(u, v, m)| EdgeEntry {
                    u: u.to_string(),
                    v: v.to_string(),
                    mu: m.to_string(),
                })
                .collect(),
        }
    }
}

/// Finds the document entry a build error refers to.
fn locate(e: &Error, vertices: &[String], edges: &[(String, String)]) -> Option<String> {
    let same_pair = |(u, v): &(String, String), a: &str, b: &str| {
        (u == a && v == b) || (u == b && v == a)
    };
    let last_vertex = |id: &str| vertices.iter().rposition(|v| v == id);
    match e {
        Error::ZeroSigmaVertex(id) => last_vertex(id).map(|i| format!("vertices[{i}].sigma")),
        Error::DuplicateVertex(id) => last_vertex(id).map(|i| format!("vertices[{i}].id")),
        Error::SelfLoop(id) => edges
            .iter()
            .position(|(u, v)| u == id && v == id)
            .map(|i| format!("edges[{i}]")),
        Error::UnknownEndpoint(id) => edges.iter().enumerate().find_map(|(i, (u, v))| {
            if u == id {
                Some(format!("edges[{i}].u"))
            } else if v == id {
                Some(format!("edges[{i}].v"))
            } else {
                None
            }
        }),
        Error::DuplicateEdge(a, b) => edges
            .iter()
            .rposition(|e| same_pair(e, a, b))
            .map(|i| format!("edges[{i}]")),
        Error::MembershipBound { u, v, .. } => edges
            .iter()
            .position(|e| same_pair(e, u, v))
            .map(|i| format!("edges[{i}].mu")),
        _ => None,
    }
}

fn syntax(e: serde_json::Error) -> Error {
    Error::Syntax(e.to_string())
}

pub fn parse_graph(text: &str) -> Result<FuzzyGraph> {
    serde_json::from_str::<GraphDocument>(text)
        .map_err(syntax)?
        .into_graph()
}

pub fn serialize_graph(g: &FuzzyGraph) -> String {
    let mut out = serde_json::to_string_pretty(&GraphDocument::from_graph(g))
        .expect("graph documents always serialize");
    out.push('\n');
    out
}

pub fn read_graph(path: &Path) -> Result<FuzzyGraph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| e.context(path.display().to_string()))
}

pub fn write_graph(g: &FuzzyGraph, path: &Path) -> Result<()> {
    fs::write(path, serialize_graph(g)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordSidecar {
    claim_id: String,
    seed: u64,
    graphs: Vec<String>,
    measured: BTreeMap<String, String>,
}

/// File-name stem for a claim id: `N-OP-NOT-PRESERVE(join)` becomes
/// `n-op-not-preserve-join`.
pub fn slug(claim_id: &str) -> String {
    let mut out = String::with_capacity(claim_id.len());
    for ch in claim_id.chars() {
        if ch.is_ascii_alphanumeric() {
            out.push(ch.to_ascii_lowercase());
        } else if !out.ends_with('-') {
            out.push('-');
        }
    }
    out.trim_end_matches('-').to_string()
}

/// Writes `<slug>.g0.json`, `<slug>.g1.json`, … and `<slug>.record.json`
/// into `dir`, returning the sidecar path.
pub fn write_record(record: &CounterexampleRecord, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let stem = slug(&record.claim_id);
    let mut names = Vec::with_capacity(record.graphs.len());
    for (i, g) in record.graphs.iter().enumerate() {
        let name = format!("{stem}.g{i}.json");
        write_graph(g, &dir.join(&name))?;
        names.push(name);
    }
    let sidecar = RecordSidecar {
        claim_id: record.claim_id.clone(),
        seed: record.seed,
        graphs: names,
        measured: record
            .measured
            .iter()
            .map(|(k, v)| (k.clone(), format_rational(v)))
            .collect(),
    };
    let path = dir.join(format!("{stem}.record.json"));
    let mut text = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
    text.push('\n');
    fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Loads a sidecar and the graph files it names, relative to its directory.
pub fn read_record(path: &Path) -> Result<CounterexampleRecord> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let sidecar: RecordSidecar = serde_json::from_str(&text).map_err(syntax)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let graphs = sidecar
        .graphs
        .iter()
        .map(|name| read_graph(&dir.join(name)))
        .collect::<Result<Vec<_>>>()?;
    let measured = sidecar
        .measured
        .into_iter()
        .map(|(k, v)| {
            let value = parse_rational(&v).map_err(|e| e.context(format!("measured.{k}")))?;
            Ok((k, value))
        })
        .collect::<Result<Measured>>()?;
    Ok(CounterexampleRecord {
        claim_id: sidecar.claim_id,
        graphs,
        measured,
        seed: sidecar.seed,
    })
}
