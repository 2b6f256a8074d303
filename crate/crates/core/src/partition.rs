//! Hierarchical node partitions.
//!
//! A partition with `L` levels assigns the node set to nested groups:
//! level `l` splits the nodes into `2^(l-1)` groups of near-equal size,
//! and each level-`l` group is the union of two adjacent level-`l+1`
//! groups. Nodes are placed by a seeded uniform shuffle; groups are
//! contiguous runs of the shuffled order, which makes group lookup and
//! membership slicing O(1).

use crate::error::{Error, Result};
use crate::hypergraph::NodeId;
use crate::rng::{substream, Domain};
use rand::seq::SliceRandom;

/// A hierarchical partition of `0..num_nodes` into `num_levels` levels.
///
/// Levels are 1-based (`1..=num_levels`); groups are 0-based
/// (`0..2^(level-1)`). Group `g` at level `l` spans positions
/// `floor(n*g / 2^(l-1)) .. floor(n*(g+1) / 2^(l-1))` of the shuffled
/// node order, so within each level groups are disjoint, cover all
/// nodes, have the mandated sizes, and each group is the union of its
/// two children one level down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPartition {
    num_nodes: usize,
    num_levels: u32,
    order: Vec<NodeId>,
    position: Vec<u32>,
}

/// Builds a uniform hierarchical partition.
///
/// `num_levels` must lie in `1..=floor(log2(num_nodes))`.
pub fn make_partition(num_nodes: usize, num_levels: u32, seed: u64) -> Result<LevelPartition> {
    let max = if num_nodes < 2 {
        0
    } else {
        (num_nodes as u64).ilog2()
    };
    if num_levels < 1 || num_levels > max {
        return Err(Error::InvalidLevelCount {
            levels: num_levels,
            num_nodes,
            max,
        });
    }
    let mut order: Vec<NodeId> = (0..num_nodes as u32).collect();
    let mut rng = substream(seed, Domain::Partition, 0);
    order.shuffle(&mut rng);
    let mut position = vec![0u32; num_nodes];
    for (pos, &v) in order.iter().enumerate() {
        position[v as usize] = pos as u32;
    }
    Ok(LevelPartition {
        num_nodes,
        num_levels,
        order,
        position,
    })
}

impl LevelPartition {
    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn num_levels(&self) -> u32 {
        self.num_levels
    }

    /// Number of groups at `level`: `2^(level-1)`.
    pub fn num_groups(&self, level: u32) -> u32 {
        debug_assert!(level >= 1 && level <= self.num_levels);
        1 << (level - 1)
    }

    /// Start position (inclusive) of group `g` at `level` in the
    /// shuffled order.
    pub fn group_start(&self, level: u32, group: u32) -> usize {
        let groups = self.num_groups(level) as u64;
        ((self.num_nodes as u64 * group as u64) / groups) as usize
    }

    /// Group index of `node` at `level`.
    pub fn group_of(&self, level: u32, node: NodeId) -> u32 {
        let groups = self.num_groups(level) as u64;
        let pos = self.position[node as usize] as u64;
        // Inverse of the floor boundaries: smallest g with
        // pos < floor(n*(g+1)/groups).
        ((groups * (pos + 1) - 1) / self.num_nodes as u64) as u32
    }

    /// Members of group `g` at `level` (a slice of the shuffled order).
    pub fn members(&self, level: u32, group: u32) -> &[NodeId] {
        let lo = self.group_start(level, group);
        let hi = self.group_start(level, group + 1);
        &self.order[lo..hi]
    }

    /// The shuffled node order underlying all levels.
    pub fn order(&self) -> &[NodeId] {
        &self.order
    }
}
