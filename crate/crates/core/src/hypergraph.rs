//! Core hypergraph data model: nodes, hyperedges, incidence.

use crate::error::{Error, Result};

/// Dense node identifier, `0..num_nodes`.
pub type NodeId = u32;

/// One hyperedge: a non-empty set of nodes, optionally tagged with the
/// partition level it was generated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperedgeRecord {
    /// Member nodes, sorted ascending, no duplicates.
    pub nodes: Vec<NodeId>,
    /// Provenance level (1-based), populated only for generated hypergraphs.
    pub level: Option<u32>,
}

impl HyperedgeRecord {
    /// Builds a record from nodes in any order; duplicates collapse.
    pub fn new(mut nodes: Vec<NodeId>) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        HyperedgeRecord { nodes, level: None }
    }

    /// Same as [`HyperedgeRecord::new`] with a provenance level attached.
    pub fn with_level(nodes: Vec<NodeId>, level: u32) -> Self {
        let mut rec = Self::new(nodes);
        rec.level = Some(level);
        rec
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Membership test via binary search over the sorted node list.
    pub fn contains(&self, v: NodeId) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }
}

/// An immutable hypergraph with precomputed degrees and incidence lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    num_nodes: usize,
    edges: Vec<HyperedgeRecord>,
    degrees: Vec<u32>,
    incidence: Vec<Vec<u32>>,
}

/// Validates edges against `num_nodes` and builds degrees and per-node
/// incidence lists (edge indices, ascending). Pure: identical inputs
/// produce identical hypergraphs.
pub fn build_incidence(num_nodes: usize, edges: Vec<HyperedgeRecord>) -> Result<Hypergraph> {
    for (index, edge) in edges.iter().enumerate() {
        if edge.nodes.is_empty() {
            return Err(Error::EmptyEdge { index });
        }
        debug_assert!(edge.nodes.windows(2).all(|w| w[0] < w[1]));
        for &v in &edge.nodes {
            if (v as usize) >= num_nodes {
                return Err(Error::NodeOutOfRange {
                    id: v as u64,
                    num_nodes,
                });
            }
        }
    }
    let mut degrees = vec![0u32; num_nodes];
    for edge in &edges {
        for &v in &edge.nodes {
            degrees[v as usize] += 1;
        }
    }
    let mut incidence: Vec<Vec<u32>> = degrees
        .iter()
        .map(|&d| Vec::with_capacity(d as usize))
        .collect();
    for (i, edge) in edges.iter().enumerate() {
        for &v in &edge.nodes {
            incidence[v as usize].push(i as u32);
        }
    }
    Ok(Hypergraph {
        num_nodes,
        edges,
        degrees,
        incidence,
    })
}

impl Hypergraph {
    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[HyperedgeRecord] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &HyperedgeRecord {
        &self.edges[index]
    }

    /// Node degree: the number of hyperedges containing the node.
    pub fn degree(&self, v: NodeId) -> u32 {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Indices of the hyperedges containing `v`, ascending.
    pub fn incident_edges(&self, v: NodeId) -> &[u32] {
        &self.incidence[v as usize]
    }

    /// Hyperedge sizes in edge order.
    pub fn size_sequence(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.size()).collect()
    }

    /// Total membership count over all hyperedges.
    pub fn sum_sizes(&self) -> u64 {
        self.edges.iter().map(|e| e.size() as u64).sum()
    }
}
