//! Small explicit graphs and exact (t,r) broadcast domination on them.

mod domination;
mod expr;
mod vizing;

pub use domination::{
    gamma_exact, gamma_exact_with_budget, greedy_dominating_set, is_dominating_set, reception_map, CapReason,
    GammaOutcome, DEFAULT_WORK_BUDGET,
};
pub use expr::{parse_graph_expr, GraphExpr, MAX_VERTICES};
pub use vizing::{
    verify_cycle_lemma, verify_torus_counterexample, vizing_scan, CycleLemmaReport, PairGammas, PairReport,
    ReportStatus, TorusReport, VizingScanReport,
};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Marker for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Undirected simple graph with cached all-pairs distances.
///
/// Every vertex carries a coordinate label: `[i]` for paths and cycles, the
/// concatenation of the factor labels for box products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: Vec<Vec<usize>>,
    labels: Vec<Vec<usize>>,
    dist: Vec<Vec<u32>>,
}

impl FiniteGraph {
    /// Builds a graph from an edge list, ignoring loops and duplicate edges.
    pub fn from_edges(order: usize, edges: &[(usize, usize)], labels: Option<Vec<Vec<usize>>>) -> Result<Self> {
        let mut adj = vec![Vec::new(); order];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj.iter_mut().for_each(|l| l.sort_unstable());
        let labels = labels.unwrap_or_else(|| (0..order).map(|i| vec![i]).collect());
        let dist = all_pairs_bfs(&adj);
        Ok(FiniteGraph { adj, labels, dist })
    }

    pub fn path(k: usize) -> Self {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_edges(k, &edges, None).expect("path edges are in range")
    }

    /// Cycle on `k >= 3` vertices.
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::from_edges(k, &edges, None).expect("cycle edges are in range")
    }

    /// Box product: `(g1,h1) ~ (g2,h2)` iff one coordinate is equal and the other adjacent.
    /// Vertex `(a, b)` gets id `a * |H| + b`.
    pub fn box_product(g: &FiniteGraph, h: &FiniteGraph) -> Self {
        let (ng, nh) = (g.order(), h.order());
        let id = |a: usize, b: usize| a * nh + b;
        let mut edges = Vec::new();
        for a in 0..ng {
            for b in 0..nh {
                edges.extend(h.adj[b].iter().filter(|&&b2| b2 > b).map(|&b2| (id(a, b), id(a, b2))));
                edges.extend(g.adj[a].iter().filter(|&&a2| a2 > a).map(|&a2| (id(a, b), id(a2, b))));
            }
        }
        let labels = (0..ng)
            .flat_map(|a| (0..nh).map(move |b| (a, b)))
            .map(|(a, b)| g.labels[a].iter().chain(&h.labels[b]).copied().collect())
            .collect();
        Self::from_edges(ng * nh, &edges, Some(labels)).expect("product edges are in range")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Graph distance, `None` across components.
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u][v];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn label(&self, v: usize) -> &[usize] {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &[usize]) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.dist[0].iter().all(|&d| d != UNREACHABLE)
    }
}

fn all_pairs_bfs(adj: &[Vec<usize>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let mut out = vec![vec![UNREACHABLE; n]; n];
    let mut queue = VecDeque::new();
    for (s, row) in out.iter_mut().enumerate() {
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if row[w] == UNREACHABLE {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

/// A set of broadcast vertices, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BroadcastSet(Vec<usize>);

impl BroadcastSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        BroadcastSet(vertices)
    }

    pub fn all(g: &FiniteGraph) -> Self {
        BroadcastSet((0..g.order()).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &BroadcastSet) -> Self {
        BroadcastSet::new(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Looks vertices up by coordinate label.
    pub fn from_labels(g: &FiniteGraph, labels: &[Vec<usize>]) -> Option<Self> {
        labels.iter().map(|l| g.vertex_by_label(l)).collect::<Option<Vec<_>>>().map(BroadcastSet::new)
    }
}
