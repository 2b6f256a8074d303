//! Overlap measures for sets of hyperedges.
//!
//! All measures here are ratios of integer counts over a finite set of
//! hyperedges: how many edges there are, how many distinct nodes they
//! touch, how their sizes add up. They are generic over
//! [`MeasureScalar`](crate::scalar::MeasureScalar), so the same kernel
//! yields fast floats or exact rationals.

mod egonet;
mod homogeneity;
mod pairs;
mod significance;

pub use egonet::{egonet_stats, EgonetStat};
pub use homogeneity::{homogeneity, homogeneity_distribution};
pub use pairs::{
    pair_degrees, triple_degrees, PairDegreeTable, TripleDegreeResult, TripleMode, TripleOptions,
    DEFAULT_PAIR_CAPACITY,
};
pub use significance::{significance, EgonetMeasure};

use crate::error::{Error, Result};
use crate::hypergraph::NodeId;
use crate::scalar::MeasureScalar;
use std::collections::HashMap;

/// Closed-form baseline overlap measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineMeasure {
    /// Size of the common intersection of all hyperedges.
    Intersection,
    /// Reciprocal of the number of distinct nodes.
    UnionInverse,
    /// Intersection size over union size.
    Jaccard,
    /// Intersection size over the smallest hyperedge size.
    OverlapCoefficient,
}

/// Count summary of a hyperedge set: |E|, sizes, union, intersection.
struct SetCounts {
    num_edges: u64,
    sum_sizes: u64,
    min_size: u64,
    union: u64,
    intersection: u64,
}

fn set_counts<'a, I>(edges: I) -> Result<SetCounts>
where
    I: IntoIterator<Item = &'a [NodeId]>,
{
    let mut occurrences: HashMap<NodeId, u64> = HashMap::new();
    let mut num_edges = 0u64;
    let mut sum_sizes = 0u64;
    let mut min_size = u64::MAX;
    for edge in edges {
        debug_assert!(!edge.is_empty());
        num_edges += 1;
        sum_sizes += edge.len() as u64;
        min_size = min_size.min(edge.len() as u64);
        for &v in edge {
            *occurrences.entry(v).or_insert(0) += 1;
        }
    }
    if num_edges == 0 {
        return Err(Error::EmptyInput {
            what: "hyperedge set",
        });
    }
    let union = occurrences.len() as u64;
    let intersection = occurrences.values().filter(|&&c| c == num_edges).count() as u64;
    Ok(SetCounts {
        num_edges,
        sum_sizes,
        min_size,
        union,
        intersection,
    })
}

/// Density of a hyperedge set: number of hyperedges per distinct node.
pub fn density<'a, S, I>(edges: I) -> Result<S>
where
    S: MeasureScalar,
    I: IntoIterator<Item = &'a [NodeId]>,
{
    let c = set_counts(edges)?;
    Ok(S::from_count_ratio(c.num_edges, c.union))
}

/// Overlapness of a hyperedge set: total membership per distinct node,
/// i.e. the average degree of the distinct nodes within the set.
pub fn overlapness<'a, S, I>(edges: I) -> Result<S>
where
    S: MeasureScalar,
    I: IntoIterator<Item = &'a [NodeId]>,
{
    let c = set_counts(edges)?;
    Ok(S::from_count_ratio(c.sum_sizes, c.union))
}

/// One of the four baseline overlap measures.
pub fn baseline_measure<'a, S, I>(edges: I, which: BaselineMeasure) -> Result<S>
where
    S: MeasureScalar,
    I: IntoIterator<Item = &'a [NodeId]>,
{
    let c = set_counts(edges)?;
    let (num, den) = match which {
        BaselineMeasure::Intersection => (c.intersection, 1),
        BaselineMeasure::UnionInverse => (1, c.union),
        BaselineMeasure::Jaccard => (c.intersection, c.union),
        BaselineMeasure::OverlapCoefficient => (c.intersection, c.min_size),
    };
    Ok(S::from_count_ratio(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;
    use num_rational::Ratio;

    // Two exemplar hyperedge sets over five nodes each: one chain of
    // nested edges and one loose path.
    fn nested() -> Vec<Vec<NodeId>> {
        vec![vec![0, 1, 2], vec![0, 1, 2, 3], vec![0, 1, 2, 3, 4]]
    }

    fn path() -> Vec<Vec<NodeId>> {
        vec![vec![0, 1, 2], vec![2, 3], vec![3, 4]]
    }

    fn slices(edges: &[Vec<NodeId>]) -> impl Iterator<Item = &[NodeId]> {
        edges.iter().map(|e| e.as_slice())
    }

    #[test]
    fn density_is_edge_count_over_union_exactly() {
        let d1: Exact = density(slices(&nested())).unwrap();
        let d2: Exact = density(slices(&path())).unwrap();
        assert_eq!(d1, Ratio::new(3, 5));
        assert_eq!(d2, Ratio::new(3, 5));
        let f: f64 = density(slices(&nested())).unwrap();
        assert!((f - 0.6).abs() < 1e-15);
    }

    #[test]
    fn overlapness_separates_the_exemplars() {
        let o1: Exact = overlapness(slices(&nested())).unwrap();
        let o2: Exact = overlapness(slices(&path())).unwrap();
        assert_eq!(o1, Ratio::new(12, 5));
        assert_eq!(o2, Ratio::new(7, 5));
        assert!(o1 > o2);
    }

    #[test]
    fn baselines_on_the_nested_exemplar() {
        let e = nested();
        let i: Exact = baseline_measure(slices(&e), BaselineMeasure::Intersection).unwrap();
        let u: Exact = baseline_measure(slices(&e), BaselineMeasure::UnionInverse).unwrap();
        let j: Exact = baseline_measure(slices(&e), BaselineMeasure::Jaccard).unwrap();
        let o: Exact = baseline_measure(slices(&e), BaselineMeasure::OverlapCoefficient).unwrap();
        assert_eq!(i, Ratio::new(3, 1));
        assert_eq!(u, Ratio::new(1, 5));
        assert_eq!(j, Ratio::new(3, 5));
        assert_eq!(o, Ratio::new(1, 1));
    }

    #[test]
    fn identical_edges_fully_overlap() {
        let edges = vec![vec![0u32, 1], vec![0, 1]];
        let j: f64 = baseline_measure(slices(&edges), BaselineMeasure::Jaccard).unwrap();
        let o: f64 =
            baseline_measure(slices(&edges), BaselineMeasure::OverlapCoefficient).unwrap();
        assert_eq!(j, 1.0);
        assert_eq!(o, 1.0);
    }

    #[test]
    fn empty_set_is_rejected() {
        let err = density::<f64, _>(std::iter::empty::<&[NodeId]>()).unwrap_err();
        assert!(matches!(err, Error::EmptyInput { .. }));
    }

    #[test]
    fn overlapness_equals_average_degree_within_the_set() {
        // Independent recomputation: mean over distinct nodes of the
        // number of edges in the set containing each node.
        let edges = vec![vec![0u32, 1, 2], vec![1, 2, 3], vec![2, 3], vec![0, 2]];
        let mut per_node: HashMap<NodeId, u64> = HashMap::new();
        for e in &edges {
            for &v in e {
                *per_node.entry(v).or_insert(0) += 1;
            }
        }
        let avg_degree =
            per_node.values().sum::<u64>() as f64 / per_node.len() as f64;
        let o: f64 = overlapness(slices(&edges)).unwrap();
        assert!((o - avg_degree).abs() < 1e-15);
    }
}
