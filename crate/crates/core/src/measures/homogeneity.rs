//! Hyperedge homogeneity: the average pair degree over a hyperedge's
//! node pairs.

use super::pairs::PairDegreeTable;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, HyperedgeRecord};
use crate::sample::DistributionSample;
use crate::scalar::MeasureScalar;
use crate::Real;

/// Homogeneity of one hyperedge: the mean pair degree over its node
/// pairs, or 0 for a single-node hyperedge. Errors with `MissingPair`
/// if the table lacks one of the edge's pairs.
pub fn homogeneity<S: MeasureScalar>(
    edge: &HyperedgeRecord,
    pairs: &PairDegreeTable,
) -> Result<S> {
    let nodes = &edge.nodes;
    let s = nodes.len() as u64;
    if s < 2 {
        return Ok(S::from_count_ratio(0, 1));
    }
    let mut sum = 0u64;
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            let d = pairs
                .get(nodes[i], nodes[j])
                .ok_or(Error::MissingPair {
                    u: nodes[i],
                    v: nodes[j],
                })?;
            sum += d as u64;
        }
    }
    Ok(S::from_count_ratio(sum, s * (s - 1) / 2))
}

/// Homogeneity values of every hyperedge (size-1 hyperedges contribute
/// 0 when present).
pub fn homogeneity_distribution(
    g: &Hypergraph,
    pairs: &PairDegreeTable,
) -> Result<DistributionSample<Real>> {
    let mut values = Vec::with_capacity(g.num_edges());
    for edge in g.edges() {
        values.push(homogeneity::<Real>(edge, pairs)?);
    }
    DistributionSample::new(values)
}
