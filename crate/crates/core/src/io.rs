//! Instance, certificate and DIMACS-style graph files.
//!
//! Instance files are JSON documents written in a fixed layout (one edge per
//! line) so that writing a parsed file reproduces it byte for byte.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Vertex};
use crate::instance::{Certificate, Instance, Label, LabelError, LabeledInstance};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid labels: {0}")]
    Label(#[from] LabelError),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceFile {
            n: inst.graph.vertex_count(),
            k: inst.k,
            d: inst.d,
            edges: inst.graph.edges().iter().map(|&e| e.into()).collect(),
            labels: None,
            metadata: None,
        }
    }

    pub fn from_labeled(li: &LabeledInstance) -> Self {
        InstanceFile {
            labels: Some(li.labels()),
            ..Self::from_instance(&li.unlabeled())
        }
    }

    pub fn with_metadata(mut self, metadata: serde_json::Value) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    fn graph(&self) -> Result<Graph, IoError> {
        Ok(Graph::new(self.n, self.edges.iter().copied())?)
    }

    /// The instance with any labels ignored.
    pub fn to_instance(&self) -> Result<Instance, IoError> {
        Ok(Instance::new(self.graph()?, self.k, self.d))
    }

    /// `None` when the file carries no labels.
    pub fn to_labeled(&self) -> Result<Option<LabeledInstance>, IoError> {
        match &self.labels {
            None => Ok(None),
            Some(labels) => Ok(Some(LabeledInstance::new(self.graph()?, labels, self.k, self.d)?)),
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{{").unwrap();
        writeln!(out, "  \"n\": {},", self.n).unwrap();
        writeln!(out, "  \"k\": {},", self.k).unwrap();
        writeln!(out, "  \"d\": {},", self.d).unwrap();
        if self.edges.is_empty() {
            write!(out, "  \"edges\": []").unwrap();
        } else {
            writeln!(out, "  \"edges\": [").unwrap();
            let lines: Vec<String> = self
                .edges
                .iter()
                .map(|(u, v)| format!("    [{u}, {v}]"))
                .collect();
            writeln!(out, "{}", lines.join(",\n")).unwrap();
            write!(out, "  ]").unwrap();
        }
        if let Some(labels) = &self.labels {
            let text = serde_json::to_string(labels).expect("labels serialize");
            write!(out, ",\n  \"labels\": {text}").unwrap();
        }
        if let Some(meta) = &self.metadata {
            let text = serde_json::to_string(meta).expect("metadata serializes");
            write!(out, ",\n  \"metadata\": {text}").unwrap();
        }
        out.push_str("\n}\n");
        out
    }

    pub fn read(path: &Path) -> Result<Self, IoError> {
        Self::parse(&read_text(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<(), IoError> {
        write_text(path, &self.to_json_string())
    }
}

fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CertificateDoc {
    Bare(Vec<(Vertex, Vertex)>),
    Keyed { certificate: Vec<(Vertex, Vertex)> },
}

/// Writes a certificate as a JSON array of `[u, v]` pairs.
pub fn certificate_to_json(cert: &Certificate) -> String {
    serde_json::to_string(cert).expect("certificate serializes") + "\n"
}

/// Accepts either a bare array of pairs or an object with a `certificate`
/// field (such as the report printed by the solver).
pub fn parse_certificate(text: &str) -> Result<Certificate, IoError> {
    let pairs = match serde_json::from_str(text)? {
        CertificateDoc::Bare(p) => p,
        CertificateDoc::Keyed { certificate } => certificate,
    };
    Ok(Certificate::new(pairs.into_iter().map(Edge::from)))
}

pub fn read_certificate(path: &Path) -> Result<Certificate, IoError> {
    parse_certificate(&read_text(path)?)
}

pub fn write_certificate(path: &Path, cert: &Certificate) -> Result<(), IoError> {
    write_text(path, &certificate_to_json(cert))
}

/// `p edge n m` followed by `e u v` lines with 1-based endpoints.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "e {} {}", e.lo() + 1, e.hi() + 1).unwrap();
    }
    out
}

/// Parses the DIMACS edge format. Lines starting with `c` and blank lines are
/// skipped; repeated edges collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph, IoError> {
    let mut header = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| IoError::Format { line, message };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("expected a non-negative integer, found {s:?}")))
        };
        match fields.as_slice() {
            [] | ["c", ..] => {}
            [tag, ..] if tag.starts_with('c') => {}
            ["p", "edge", n, m] => {
                if header.is_some() {
                    return Err(err("second problem line".into()));
                }
                header = Some((number(n)?, number(m)?));
            }
            ["e", u, v] => {
                let Some((n, _)) = header else {
                    return Err(err("edge before the problem line".into()));
                };
                let (u, v) = (number(u)?, number(v)?);
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(format!("endpoint {x} outside 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err(format!("unrecognised line {raw:?}"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(IoError::Format {
            line: 0,
            message: "missing `p edge` line".into(),
        });
    };
    if edges.len() != m {
        return Err(IoError::Format {
            line: 0,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new_tolerant(n, edges)?)
}

pub fn read_dimacs(path: &Path) -> Result<Graph, IoError> {
    parse_dimacs(&read_text(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn star() -> Instance {
        Instance::new(Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap(), 1, 2)
    }

    #[test]
    fn instance_round_trip_is_exact() {
        let file = InstanceFile::from_instance(&star());
        let text = file.to_json_string();
        let back = InstanceFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_json_string(), text);
        assert_eq!(back.to_instance().unwrap(), star());
    }

    #[test]
    fn labels_and_metadata_round_trip() {
        let li = LabeledInstance::from_red_set(star().graph, &[0, 1], 1, 2);
        let file = InstanceFile::from_labeled(&li).with_metadata(json!({"p": 0.3, "seed": 7}));
        let text = file.to_json_string();
        let back = InstanceFile::parse(&text).unwrap();
        assert_eq!(back.to_json_string(), text);
        assert_eq!(back.to_labeled().unwrap(), Some(li));
    }

    #[test]
    fn empty_graph_round_trip() {
        let file = InstanceFile::from_instance(&Instance::new(Graph::empty(3), 0, 0));
        let text = file.to_json_string();
        assert_eq!(InstanceFile::parse(&text).unwrap().to_json_string(), text);
    }

    #[test]
    fn malformed_instances_are_rejected() {
        assert!(InstanceFile::parse("{\"n\": 2}").is_err());
        let loop_file = "{\"n\": 2, \"k\": 0, \"d\": 0, \"edges\": [[1, 1]]}";
        assert!(InstanceFile::parse(loop_file).unwrap().to_instance().is_err());
        let short = "{\"n\": 2, \"k\": 0, \"d\": 0, \"edges\": [], \"labels\": [\"r\"]}";
        assert!(InstanceFile::parse(short).unwrap().to_labeled().is_err());
    }

    #[test]
    fn certificate_formats() {
        let cert = Certificate::new([Edge::new(1, 0)]);
        assert_eq!(certificate_to_json(&cert), "[[0,1]]\n");
        assert_eq!(parse_certificate("[[1,0]]").unwrap(), cert);
        let report = "{\"answer\":\"yes\",\"certificate\":[[0,1]]}";
        assert_eq!(parse_certificate(report).unwrap(), cert);
    }

    #[test]
    fn dimacs_round_trip() {
        let g = star().graph;
        let text = write_dimacs(&g);
        assert_eq!(text, "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
        assert_eq!(parse_dimacs(&text).unwrap(), g);
        assert_eq!(write_dimacs(&parse_dimacs(&text).unwrap()), text);
    }

    #[test]
    fn dimacs_errors() {
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("c hello\np edge 2 1\ne 2 1\n").is_ok());
    }
}
