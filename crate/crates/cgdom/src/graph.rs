//! Undirected simple graphs over packed adjacency bit rows, with the
//! operations the proper-graph machinery needs: universal vertices, induced
//! subgraphs, strong products, components.

use crate::mask::SubsetMask;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Strong products above this many vertices are rejected.
pub const DEFAULT_GRAPH_CAP: usize = 20_000;

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("graph with {vertices} vertices exceeds cap {cap}")]
    SizeLimit { vertices: usize, cap: usize },
    #[error("malformed graph: {0}")]
    BadGraph(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Symmetric boolean adjacency with a false diagonal, stored as one bit row
/// per vertex. Immutable in spirit: mutate only while building.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<SubsetMask>,
    labels: Option<Vec<String>>,
    provenance: String,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimpleGraph({}, {} vertices, {} edges)",
            self.provenance,
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Export format: vertex count plus an edge list with u < v.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn edgeless(n: usize, provenance: impl Into<String>) -> Self {
        SimpleGraph {
            rows: (0..n).map(|_| SubsetMask::empty(n)).collect(),
            labels: None,
            provenance: provenance.into(),
        }
    }

    pub fn complete(n: usize, provenance: impl Into<String>) -> Self {
        let rows = (0..n)
            .map(|v| {
                let mut m = SubsetMask::full(n);
                m.remove(v);
                m
            })
            .collect();
        SimpleGraph {
            rows,
            labels: None,
            provenance: provenance.into(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)], provenance: impl Into<String>) -> Self {
        let mut g = Self::edgeless(n, provenance);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops in a simple graph");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(SubsetMask::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &SubsetMask {
        &self.rows[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: usize) -> SubsetMask {
        let mut m = self.rows[v].clone();
        m.insert(v);
        m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => format!("v{v}"),
        }
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn set_provenance(&mut self, provenance: impl Into<String>) {
        self.provenance = provenance.into();
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.rows.iter().all(|r| r.len() == n - 1)
    }

    pub fn isolated_vertices(&self) -> SubsetMask {
        SubsetMask::from_indices(
            self.vertex_count(),
            (0..self.vertex_count()).filter(|&v| self.rows[v].is_empty()),
        )
    }

    /// Dom(Γ): vertices whose closed neighborhood is all of V.
    pub fn dominating_vertices(&self) -> SubsetMask {
        let n = self.vertex_count();
        SubsetMask::from_indices(n, (0..n).filter(|&v| self.rows[v].len() == n - 1))
    }

    /// Induced subgraph on the kept vertices, re-indexed in ascending original
    /// order; labels follow their vertices.
    pub fn induced_subgraph(&self, keep: &SubsetMask) -> SimpleGraph {
        let kept: Vec<usize> = keep.iter().collect();
        let m = kept.len();
        let mut rows = vec![SubsetMask::empty(m); m];
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if i != j && self.rows[u].contains(v) {
                    rows[i].insert(j);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| kept.iter().map(|&u| l[u].clone()).collect());
        SimpleGraph {
            rows,
            labels,
            provenance: format!("induced({})", self.provenance),
        }
    }

    /// Γ minus Dom(Γ). Complete graphs (every vertex universal) reduce to the
    /// empty graph; the removed set tells the caller which case occurred.
    pub fn proper_graph(&self) -> ProperGraph {
        let dom = self.dominating_vertices();
        let graph = self.induced_subgraph(&dom.complement());
        ProperGraph { graph, removed: dom }
    }

    /// Strong product: pairs adjacent when each coordinate is equal or
    /// adjacent (and the pairs differ). Vertex (i,j) has index i*|b| + j.
    pub fn strong_product(a: &SimpleGraph, b: &SimpleGraph, cap: usize) -> Result<SimpleGraph, GraphError> {
        let na = a.vertex_count();
        let nb = b.vertex_count();
        let n = na
            .checked_mul(nb)
            .filter(|&n| n <= cap)
            .ok_or(GraphError::SizeLimit { vertices: na.saturating_mul(nb), cap })?;
        let mut rows = vec![SubsetMask::empty(n); n];
        for u1 in 0..na {
            for u2 in 0..nb {
                let u = u1 * nb + u2;
                for v1 in 0..na {
                    let row_ok = u1 == v1 || a.has_edge(u1, v1);
                    if !row_ok {
                        continue;
                    }
                    for v2 in 0..nb {
                        let v = v1 * nb + v2;
                        if u == v {
                            continue;
                        }
                        if u2 == v2 || b.has_edge(u2, v2) {
                            rows[u].insert(v);
                        }
                    }
                }
            }
        }
        let labels = match (&a.labels, &b.labels) {
            (Some(la), Some(lb)) => Some(
                la.iter()
                    .flat_map(|x| lb.iter().map(move |y| format!("({x},{y})")))
                    .collect(),
            ),
            _ => None,
        };
        Ok(SimpleGraph {
            rows,
            labels,
            provenance: format!("strong({},{})", a.provenance, b.provenance),
        })
    }

    /// Maximal connected vertex sets, ordered by least contained vertex.
    pub fn connected_components(&self) -> Vec<SubsetMask> {
        let n = self.vertex_count();
        let mut seen = SubsetMask::empty(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = SubsetMask::singleton(n, start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for w in self.rows[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        frontier.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// True iff all pairs inside the set are adjacent.
    pub fn is_clique(&self, set: &SubsetMask) -> bool {
        let members = set.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.rows[u].contains(v) {
                    return false;
                }
            }
        }
        true
    }

    /// Adjacency-only equality (ignores labels and provenance).
    pub fn same_adjacency(&self, other: &SimpleGraph) -> bool {
        self.rows == other.rows
    }

    pub fn to_json(&self) -> String {
        let mut edges = Vec::new();
        for u in 0..self.vertex_count() {
            for v in self.rows[u].iter() {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        serde_json::to_string_pretty(&GraphFile {
            n: self.vertex_count(),
            edges,
            labels: self.labels.clone(),
        })
        .expect("graph serialization")
    }

    pub fn from_json(text: &str) -> Result<SimpleGraph, GraphError> {
        let file: GraphFile = serde_json::from_str(text)?;
        for &(u, v) in &file.edges {
            if u >= file.n || v >= file.n {
                return Err(GraphError::BadGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(GraphError::BadGraph(format!("self-loop at {u}")));
            }
        }
        let mut g = SimpleGraph::from_edges(file.n, &file.edges, "file");
        if let Some(labels) = file.labels {
            if labels.len() != file.n {
                return Err(GraphError::BadGraph("label count mismatch".into()));
            }
            g.set_labels(labels);
        }
        Ok(g)
    }
}

/// Result of removing the dominating vertices.
pub struct ProperGraph {
    pub graph: SimpleGraph,
    /// The removed Dom(Γ); equal to the whole vertex set iff Γ was complete.
    pub removed: SubsetMask,
}
