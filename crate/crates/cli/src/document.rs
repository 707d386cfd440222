//! Output documents: JSON realization/rejection documents, DOT, TSV.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use trimulti_core::{
    replay, ConstructionCertificate, GraphError, Multigraph, Realization, ValidationReport,
};

/// A realized sequence as written by `trimulti realize --format json`.
///
/// `edges` holds `[u, v, m]` triples with `u < v`, sorted, `m >= 1`. The
/// certificate always refers to the descending vertex order; `degrees` and
/// `edges` use the input order unless the document was produced with
/// `--sorted`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationDocument {
    pub n: usize,
    pub degrees: Vec<i64>,
    pub edges: Vec<(usize, usize, u64)>,
    pub certificate: ConstructionCertificate,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotRealizableDocument {
    pub status: String,
    pub reason: String,
    pub violations: Vec<String>,
    pub degrees: Vec<i64>,
    pub report: ValidationReport,
}

impl NotRealizableDocument {
    pub fn new(degrees: Vec<i64>, report: ValidationReport) -> Self {
        let violations: Vec<String> = report.violations().iter().map(|s| s.to_string()).collect();
        NotRealizableDocument {
            status: "not_realizable".into(),
            reason: violations.first().cloned().unwrap_or_default(),
            violations,
            degrees,
            report,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("edge list is not canonical at entry {0}")]
    NonCanonicalEdges(usize),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("declared n = {declared} but {got} degrees")]
    LengthMismatch { declared: usize, got: usize },
    #[error("vertex {0} has the wrong degree")]
    DegreeMismatch(usize),
    #[error("edge {{{0},{1}}} is in no triangle")]
    NotTriangular(usize, usize),
    #[error("certificate does not replay to this graph")]
    Replay,
}

impl RealizationDocument {
    pub fn from_realization(r: &Realization, sorted: bool) -> Self {
        let (graph, degrees) = if sorted {
            (r.sorted_graph(), r.sequence.degrees().to_vec())
        } else {
            (r.graph.clone(), r.sequence.original_order())
        };
        RealizationDocument {
            n: graph.n(),
            degrees,
            edges: graph.edges().to_vec(),
            certificate: r.certificate.clone(),
            verified: true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Single-line form, used for batch output.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn graph(&self) -> Result<Multigraph, DocumentError> {
        for (i, w) in self.edges.windows(2).enumerate() {
            if (w[0].0, w[0].1) >= (w[1].0, w[1].1) {
                return Err(DocumentError::NonCanonicalEdges(i + 1));
            }
        }
        if let Some(i) = self.edges.iter().position(|e| e.0 >= e.1 || e.2 == 0) {
            return Err(DocumentError::NonCanonicalEdges(i));
        }
        Ok(Multigraph::from_edges(self.n, self.edges.iter().copied())?)
    }

    /// Runs the independent verifiers over the document: canonical edges,
    /// exact degrees, triangularity, and a certificate that replays to an
    /// isomorphic relabelling (same degree multiset, same edge count and
    /// total multiplicity).
    pub fn reverify(&self) -> Result<(), DocumentError> {
        if self.degrees.len() != self.n {
            return Err(DocumentError::LengthMismatch {
                declared: self.n,
                got: self.degrees.len(),
            });
        }
        let g = self.graph()?;
        if let Some(i) = g
            .degree_sequence()
            .iter()
            .zip(&self.degrees)
            .position(|(a, b)| a != b)
        {
            return Err(DocumentError::DegreeMismatch(i + 1));
        }
        if let Some((u, v)) = g.check_triangular().uncovered_edge {
            return Err(DocumentError::NotTriangular(u, v));
        }
        let replayed = replay(&self.certificate).map_err(|_| DocumentError::Replay)?;
        let mut a = replayed.degree_sequence();
        let mut b = self.degrees.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b
            || replayed.edge_count() != g.edge_count()
            || replayed.total_multiplicity() != g.total_multiplicity()
        {
            return Err(DocumentError::Replay);
        }
        Ok(())
    }

    /// Undirected DOT graph, vertices `v1..vn`, one edge statement per pair
    /// with the multiplicity as integer attribute `m`.
    pub fn to_dot(&self) -> String {
        let mut out = String::with_capacity(32 + 24 * self.edges.len());
        writeln!(out, "graph G {{").unwrap();
        writeln!(out, "  // n={} branch={}", self.n, self.certificate.branch).unwrap();
        for &(u, v, m) in &self.edges {
            writeln!(out, "  v{u} -- v{v} [m={m}];").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `# n=<n> branch=<branch>` then one `u\tv\tm` line per pair.
    pub fn to_tsv(&self) -> String {
        let mut out = String::with_capacity(32 + 16 * self.edges.len());
        writeln!(out, "# n={} branch={}", self.n, self.certificate.branch).unwrap();
        for &(u, v, m) in &self.edges {
            writeln!(out, "{u}\t{v}\t{m}").unwrap();
        }
        out
    }
}
