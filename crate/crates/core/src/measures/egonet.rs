//! Per-node egonet statistics.

use crate::hypergraph::{Hypergraph, NodeId};
use crate::Real;
use rayon::prelude::*;
use std::collections::HashSet;

/// Overlap statistics of one node's egonet: the set of hyperedges
/// containing the node.
#[derive(Debug, Clone, PartialEq)]
pub struct EgonetStat {
    pub node: NodeId,
    /// Number of hyperedges containing the node (its degree).
    pub num_edges: u32,
    /// Distinct nodes across those hyperedges (the node included).
    pub num_distinct_nodes: usize,
    /// Total membership count across those hyperedges.
    pub sum_sizes: u64,
    pub density: Real,
    pub overlapness: Real,
}

/// Computes egonet statistics for every node of nonzero degree, in
/// ascending node order.
pub fn egonet_stats(g: &Hypergraph) -> Vec<EgonetStat> {
    (0..g.num_nodes() as u32)
        .into_par_iter()
        .filter(|&v| g.degree(v) > 0)
        .map(|v| {
            let edges = g.incident_edges(v);
            let mut distinct: HashSet<NodeId> = HashSet::new();
            let mut sum_sizes = 0u64;
            for &e in edges {
                let nodes = &g.edge(e as usize).nodes;
                sum_sizes += nodes.len() as u64;
                distinct.extend(nodes.iter().copied());
            }
            EgonetStat {
                node: v,
                num_edges: edges.len() as u32,
                num_distinct_nodes: distinct.len(),
                sum_sizes,
                density: edges.len() as Real / distinct.len() as Real,
                overlapness: sum_sizes as Real / distinct.len() as Real,
            }
        })
        .collect()
}
