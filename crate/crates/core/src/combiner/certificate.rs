use serde::{Deserialize, Serialize};

use crate::connectivity::is_2ec;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::rational::{parse_rational, seven_ninths, to_fraction_string, Rational};

use super::combination::{is_uniform_pattern, vertex_patterns, ConvexCombination, Entry};
use super::support_bound;

/// A uniform 7/9 combination for a specific graph, plus the reduction steps
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub graph: Graph,
    pub combination: ConvexCombination,
    pub target: Rational,
    /// One record per distinct graph met during the construction, the input
    /// graph first. Graphs other than the input are in canonical form and
    /// identified by their graph6 string.
    pub trace: Vec<TraceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub graph: String,
    #[serde(flatten)]
    pub step: Step,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// Solved directly.
    Base,
    /// Averaged over every pivot edge.
    Case1 { pivots: Vec<PivotRecord> },
    /// Split along an essential 3-edge cut.
    Case2 {
        shore: Vec<VertexId>,
        cut_edges: Vec<EdgeId>,
        children: [String; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PivotRecord {
    pub pivot: EdgeId,
    pub orientation: String,
    pub removed: [[EdgeId; 2]; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_shore: Option<Vec<VertexId>>,
    pub children: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    n: usize,
    edges: Vec<[VertexId; 2]>,
    target: String,
    entries: Vec<EntryJson>,
    trace: Vec<TraceRecord>,
    min_support_size: usize,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    weight: String,
    edges: Vec<EdgeId>,
}

impl Certificate {
    pub fn min_support(&self) -> Option<EdgeSet> {
        min_support_subgraph(self)
    }

    pub fn to_json(&self) -> String {
        let doc = CertificateJson {
            n: self.graph.n(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            target: to_fraction_string(&self.target),
            entries: self
                .combination
                .entries()
                .iter()
                .map(|e| EntryJson {
                    weight: to_fraction_string(&e.weight),
                    edges: e.edges.to_vec(),
                })
                .collect(),
            trace: self.trace.clone(),
            min_support_size: self.min_support().map_or(0, EdgeSet::len),
        };
        let mut text = serde_json::to_string(&doc).expect("certificate serializes");
        text.push('\n');
        text
    }

    /// Parses a certificate without checking it; pass the result to
    /// [`verify_certificate`].
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertificateJson = serde_json::from_str(text)
            .map_err(|e| Error::Precondition(format!("certificate JSON: {e}")))?;
        let graph = Graph::new(doc.n, doc.edges.iter().map(|&[u, v]| (u, v)))?;
        let target = parse_rational(&doc.target)
            .ok_or_else(|| Error::Precondition(format!("bad target `{}`", doc.target)))?;
        let mut entries = Vec::with_capacity(doc.entries.len());
        for entry in doc.entries {
            let weight = parse_rational(&entry.weight)
                .ok_or_else(|| Error::Precondition(format!("bad weight `{}`", entry.weight)))?;
            if let Some(&e) = entry.edges.iter().find(|&&e| e >= EdgeSet::CAPACITY) {
                return Err(Error::Precondition(format!("edge id {e} out of range")));
            }
            entries.push(Entry {
                weight,
                edges: entry.edges.into_iter().collect(),
            });
        }
        Ok(Certificate {
            combination: ConvexCombination::from_entries_unchecked(graph.m(), entries),
            graph,
            target,
            trace: doc.trace,
        })
    }
}

/// The member with the fewest edges; ties go to the lexicographically
/// smallest edge list.
pub fn min_support_subgraph(cert: &Certificate) -> Option<EdgeSet> {
    cert.combination
        .entries()
        .iter()
        .map(|e| e.edges)
        .min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure.unwrap_or_else(|| "ok".to_string()),
        });
    }
}

/// Re-checks a certificate against `g` from scratch.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> VerificationReport {
    let mut report = VerificationReport::default();
    let entries = cert.combination.entries();
    let m = g.m();

    report.push(
        "graph_matches",
        (cert.graph.n() != g.n() || cert.graph.edges() != g.edges()).then(|| {
            format!(
                "certificate graph has n={} m={}, expected n={} m={} with the same edge list",
                cert.graph.n(),
                cert.graph.m(),
                g.n(),
                m
            )
        }),
    );
    report.push(
        "target",
        (cert.target != seven_ninths())
            .then(|| format!("target is {}", to_fraction_string(&cert.target))),
    );
    report.push(
        "weights_positive",
        if entries.is_empty() {
            Some("no entries".to_string())
        } else {
            entries
                .iter()
                .position(|e| e.weight <= Rational::from_integer(0.into()))
                .map(|i| format!("entry {i} has weight {}", to_fraction_string(&entries[i].weight)))
        },
    );
    let total: Rational = entries.iter().map(|e| e.weight.clone()).sum();
    report.push(
        "weights_sum_to_one",
        (total != Rational::from_integer(1.into()))
            .then(|| format!("weights sum to {}", to_fraction_string(&total))),
    );
    let host = EdgeSet::full(m);
    report.push(
        "edge_ids_in_range",
        entries
            .iter()
            .position(|e| !e.edges.is_subset(host))
            .map(|i| format!("entry {i} uses an edge id >= {m}")),
    );
    report.push(
        "subgraphs_2ec_spanning",
        entries
            .iter()
            .position(|e| !e.edges.is_subset(host) || !is_2ec(g, e.edges))
            .map(|i| format!("entry {i} {:?} is not a 2EC spanning subgraph", entries[i].edges)),
    );

    let mut occ = vec![Rational::from_integer(0.into()); m];
    for entry in entries {
        for e in entry.edges.iter().filter(|&e| e < m) {
            occ[e] += &entry.weight;
        }
    }
    let target = seven_ninths();
    report.push(
        "uniform_occurrence",
        occ.iter()
            .position(|o| *o != target)
            .map(|e| format!("edge {e} occurs {}", to_fraction_string(&occ[e]))),
    );

    let bound = support_bound(g.n());
    let min = min_support_subgraph(cert).map(EdgeSet::len);
    report.push(
        "min_support_bound",
        match min {
            Some(k) if k <= bound => None,
            Some(k) => Some(format!("lightest member has {k} edges > {bound}")),
            None => Some("no entries".to_string()),
        },
    );

    let patterns = if !g.is_cubic() {
        Some("graph is not cubic".to_string())
    } else {
        (0..g.n()).find_map(|v| {
            let inc = g.incident(v);
            let edges = [inc[0].1, inc[1].1, inc[2].1];
            match vertex_patterns(&cert.combination, edges) {
                Ok(p) if is_uniform_pattern(&p) => None,
                Ok(p) => Some(format!(
                    "vertex {v}: omit weights {:?}, all-present {}",
                    p.0.iter().map(to_fraction_string).collect::<Vec<_>>(),
                    to_fraction_string(&p.1)
                )),
                Err(e) => Some(format!("vertex {v}: {e}")),
            }
        })
    };
    report.push("degree3_patterns", patterns);
    report
}
