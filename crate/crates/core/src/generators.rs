//! Random hypergraph generators.
//!
//! [`hyper_cl`] draws each hyperedge's nodes independently with
//! probability proportional to degree, preserving the input size
//! sequence exactly and the degree sequence in expectation. For
//! [`hyper_lap`], nodes are additionally confined to one group of a
//! hierarchical partition: each edge first draws a level (by level
//! weight, among levels whose groups are large enough for the edge),
//! then a group uniformly within the level, then its nodes
//! degree-proportionally within the group. Smaller groups produce more
//! node sharing among the edges placed there, so the level weights
//! control how much hyperedge overlap the output exhibits.
//!
//! Generation is deterministic for a given seed: every edge uses its
//! own RNG substream keyed by (seed, edge index), so results are
//! identical regardless of thread count.

use crate::error::{Error, Result};
use crate::hypergraph::{build_incidence, Hypergraph, HyperedgeRecord, NodeId};
use crate::partition::LevelPartition;
use crate::rng::{substream, Domain};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Inputs shared by the generators: the hyperedge sizes to produce,
/// per-node degree weights, level weights (layered generation only,
/// `weights.len()` is the level count), and the RNG seed.
#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub sizes: Vec<usize>,
    pub degrees: Vec<f64>,
    pub weights: Vec<f64>,
    pub seed: u64,
}

impl GeneratorConfig {
    /// Configuration for flat (single-level) generation.
    pub fn flat(sizes: Vec<usize>, degrees: Vec<f64>, seed: u64) -> Self {
        GeneratorConfig {
            sizes,
            degrees,
            weights: vec![1.0],
            seed,
        }
    }

    /// Configuration for layered generation with the given level
    /// weights `w_1..w_L`.
    pub fn layered(sizes: Vec<usize>, degrees: Vec<f64>, weights: Vec<f64>, seed: u64) -> Self {
        GeneratorConfig {
            sizes,
            degrees,
            weights,
            seed,
        }
    }

    /// Takes size and degree sequences from an existing hypergraph.
    pub fn from_hypergraph(g: &Hypergraph, weights: Vec<f64>, seed: u64) -> Self {
        GeneratorConfig {
            sizes: g.size_sequence(),
            degrees: g.degrees().iter().map(|&d| d as f64).collect(),
            weights,
            seed,
        }
    }

    pub fn num_levels(&self) -> u32 {
        self.weights.len() as u32
    }

    fn validate_base(&self) -> Result<()> {
        if let Some(bad) = self.degrees.iter().find(|d| !d.is_finite() || **d < 0.0) {
            return Err(Error::InvalidWeights {
                message: format!("degree weights must be finite and non-negative, found {bad}"),
            });
        }
        let positive = self.degrees.iter().filter(|d| **d > 0.0).count();
        for (index, &s) in self.sizes.iter().enumerate() {
            if s == 0 {
                return Err(Error::EmptyEdge { index });
            }
            if s > self.degrees.len() {
                return Err(Error::InfeasibleSize {
                    size: s,
                    message: format!("only {} nodes exist", self.degrees.len()),
                });
            }
            if s > positive {
                return Err(Error::InfeasibleSize {
                    size: s,
                    message: format!("only {positive} nodes have positive degree weight"),
                });
            }
        }
        Ok(())
    }

    fn validate_layered(&self) -> Result<()> {
        self.validate_base()?;
        if self.weights.is_empty() {
            return Err(Error::InvalidWeights {
                message: "no level weights given".into(),
            });
        }
        if let Some(bad) = self.weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidWeights {
                message: format!("level weights must be finite and non-negative, found {bad}"),
            });
        }
        let total: f64 = self.weights.iter().sum();
        if (total - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidWeights {
                message: format!("level weights must sum to 1, got {total}"),
            });
        }
        Ok(())
    }
}

/// Draws nodes with probability exactly proportional to their weight,
/// from the whole population or any contiguous range of it, via a
/// prefix-sum table and binary search.
#[derive(Debug, Clone)]
pub struct WeightedSampler {
    order: Vec<NodeId>,
    /// cum[i] = total weight of order[0..i]; length n+1.
    cum: Vec<f64>,
    /// positive[i] = number of strictly positive weights in order[0..i].
    positive: Vec<u32>,
}

impl WeightedSampler {
    /// Sampler over nodes `0..weights.len()` in natural order.
    pub fn new(weights: &[f64]) -> Result<Self> {
        let order: Vec<NodeId> = (0..weights.len() as u32).collect();
        Self::with_order(weights, &order)
    }

    /// Sampler over the given node order; `weights` is indexed by node
    /// id. Ranges passed to [`draw`](Self::draw) refer to positions in
    /// `order`.
    pub fn with_order(weights: &[f64], order: &[NodeId]) -> Result<Self> {
        let mut cum = Vec::with_capacity(order.len() + 1);
        let mut positive = Vec::with_capacity(order.len() + 1);
        cum.push(0.0);
        positive.push(0u32);
        for &v in order {
            let w = weights[v as usize];
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidWeights {
                    message: format!("weight of node {v} is {w}"),
                });
            }
            cum.push(cum.last().unwrap() + w);
            positive.push(positive.last().unwrap() + u32::from(w > 0.0));
        }
        if *cum.last().unwrap() <= 0.0 {
            return Err(Error::InvalidWeights {
                message: "all weights are zero".into(),
            });
        }
        Ok(WeightedSampler {
            order: order.to_vec(),
            cum,
            positive,
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Total weight of positions `lo..hi`.
    pub fn total(&self, lo: usize, hi: usize) -> f64 {
        self.cum[hi] - self.cum[lo]
    }

    /// Number of positive-weight nodes among positions `lo..hi`.
    pub fn positive_in(&self, lo: usize, hi: usize) -> usize {
        (self.positive[hi] - self.positive[lo]) as usize
    }

    /// Draws one node from positions `lo..hi` with probability
    /// proportional to weight. The range must carry positive weight.
    pub fn draw(&self, lo: usize, hi: usize, rng: &mut ChaCha8Rng) -> NodeId {
        let base = self.cum[lo];
        let total = self.cum[hi] - base;
        assert!(total > 0.0, "draw from zero-weight range {lo}..{hi}");
        let target = base + rng.gen::<f64>() * total;
        // First position whose cumulative weight exceeds the target;
        // zero-weight nodes never satisfy the strict inequality.
        let mut idx = self.cum[lo + 1..=hi].partition_point(|&c| c <= target) + lo;
        // Floating rounding at the very top of the range.
        if idx == hi {
            idx -= 1;
        }
        while idx > lo && self.cum[idx + 1] == self.cum[idx] {
            idx -= 1;
        }
        self.order[idx]
    }
}

/// Draws `size` distinct nodes from positions `lo..hi`, redrawing on
/// duplicates, with a budget of `1000 * size` draws.
fn sample_distinct(
    sampler: &WeightedSampler,
    lo: usize,
    hi: usize,
    size: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<NodeId>> {
    if sampler.positive_in(lo, hi) < size {
        return Err(Error::InfeasibleSize {
            size,
            message: format!(
                "only {} positive-weight nodes in the sampled group",
                sampler.positive_in(lo, hi)
            ),
        });
    }
    let budget = 1000 * size as u64;
    let mut nodes: Vec<NodeId> = Vec::with_capacity(size);
    let mut draws = 0u64;
    while nodes.len() < size {
        if draws == budget {
            return Err(Error::NonConvergence {
                size,
                attempts: budget,
            });
        }
        draws += 1;
        let v = sampler.draw(lo, hi, rng);
        if !nodes.contains(&v) {
            nodes.push(v);
        }
    }
    Ok(nodes)
}

/// Per-level, per-group counts of positive-weight nodes, for O(1)
/// feasibility checks during level and group selection.
#[derive(Debug, Clone)]
pub(crate) struct LevelTables {
    /// pos[l-1][g] = positive-weight node count of group g at level l.
    pos: Vec<Vec<u32>>,
    min_pos: Vec<u32>,
    max_pos: Vec<u32>,
}

impl LevelTables {
    pub(crate) fn build(partition: &LevelPartition, sampler: &WeightedSampler) -> Self {
        let mut pos = Vec::new();
        let mut min_pos = Vec::new();
        let mut max_pos = Vec::new();
        for level in 1..=partition.num_levels() {
            let counts: Vec<u32> = (0..partition.num_groups(level))
                .map(|g| {
                    let lo = partition.group_start(level, g);
                    let hi = partition.group_start(level, g + 1);
                    sampler.positive_in(lo, hi) as u32
                })
                .collect();
            min_pos.push(counts.iter().copied().min().unwrap_or(0));
            max_pos.push(counts.iter().copied().max().unwrap_or(0));
            pos.push(counts);
        }
        LevelTables {
            pos,
            min_pos,
            max_pos,
        }
    }

    /// Does some group at `level` have at least `size` positive-weight
    /// nodes?
    pub(crate) fn level_feasible(&self, level: u32, size: usize) -> bool {
        self.max_pos[level as usize - 1] as usize >= size
    }

    fn all_groups_feasible(&self, level: u32, size: usize) -> bool {
        self.min_pos[level as usize - 1] as usize >= size
    }

    fn feasible_groups(&self, level: u32, size: usize) -> Vec<u32> {
        self.pos[level as usize - 1]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c as usize >= size)
            .map(|(g, _)| g as u32)
            .collect()
    }
}

/// Highest level whose groups are still large enough for an edge of
/// `size` nodes: floor(log2(num_nodes / size)) + 1, capped at `levels`.
fn max_suitable_level(num_nodes: usize, size: usize, levels: u32) -> u32 {
    ((num_nodes / size).ilog2() + 1).min(levels)
}

/// Draws a level for an edge of `size` nodes: proportional to weight
/// among suitable levels, restricted to levels with at least one group
/// that can host the edge.
fn choose_level(
    size: usize,
    weights: &[f64],
    partition: &LevelPartition,
    tables: &LevelTables,
    rng: &mut ChaCha8Rng,
) -> Result<u32> {
    let limit = max_suitable_level(partition.num_nodes(), size, weights.len() as u32);
    let suitable_total: f64 = weights[..limit as usize].iter().sum();
    if suitable_total <= 0.0 {
        return Err(Error::InvalidWeights {
            message: format!("all weights of levels 1..={limit} suitable for size {size} are zero"),
        });
    }
    let feasible: Vec<u32> = (1..=limit)
        .filter(|&l| tables.level_feasible(l, size))
        .collect();
    if feasible.is_empty() {
        return Err(Error::InfeasibleSize {
            size,
            message: format!("no group of any suitable level 1..={limit} can host the edge"),
        });
    }
    let total: f64 = feasible.iter().map(|&l| weights[l as usize - 1]).sum();
    if total <= 0.0 {
        return Err(Error::InvalidWeights {
            message: format!(
                "levels with capacity for size {size} all have zero weight (suitable 1..={limit})"
            ),
        });
    }
    let target = rng.gen::<f64>() * total;
    let mut acc = 0.0;
    for &l in &feasible {
        acc += weights[l as usize - 1];
        if target < acc {
            return Ok(l);
        }
    }
    Ok(*feasible.last().unwrap())
}

/// Places an edge of `size` nodes at the given level: one group drawn
/// uniformly among those that can host it, then degree-proportional
/// node draws within the group.
pub(crate) fn place_in_level(
    size: usize,
    level: u32,
    partition: &LevelPartition,
    sampler: &WeightedSampler,
    tables: &LevelTables,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<NodeId>> {
    let group = if tables.all_groups_feasible(level, size) {
        rng.gen_range(0..partition.num_groups(level))
    } else {
        let feasible = tables.feasible_groups(level, size);
        if feasible.is_empty() {
            return Err(Error::InfeasibleSize {
                size,
                message: format!("no group at level {level} can host the edge"),
            });
        }
        feasible[rng.gen_range(0..feasible.len())]
    };
    let lo = partition.group_start(level, group);
    let hi = partition.group_start(level, group + 1);
    sample_distinct(sampler, lo, hi, size, rng)
}

/// Generates a hypergraph with the configured sizes (exactly) and
/// degree weights (in expectation): every node of every edge is an
/// independent degree-proportional draw from the whole node set, with
/// duplicates rejected.
pub fn hyper_cl(cfg: &GeneratorConfig) -> Result<Hypergraph> {
    cfg.validate_base()?;
    let sampler = WeightedSampler::new(&cfg.degrees)?;
    let n = cfg.degrees.len();
    let edges = cfg
        .sizes
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let mut rng = substream(cfg.seed, Domain::Edge, i as u64);
            let nodes = sample_distinct(&sampler, 0, n, s, &mut rng)?;
            Ok(HyperedgeRecord::with_level(nodes, 1))
        })
        .collect::<Result<Vec<_>>>()?;
    build_incidence(n, edges)
}

/// Generates a hypergraph with hierarchical locality: each edge is
/// confined to one group of `partition`, with levels drawn by
/// `cfg.weights` and the edge's chosen level recorded on its record.
pub fn hyper_lap(cfg: &GeneratorConfig, partition: &LevelPartition) -> Result<Hypergraph> {
    cfg.validate_layered()?;
    if partition.num_nodes() != cfg.degrees.len() {
        return Err(Error::ConfigMismatch {
            message: format!(
                "partition covers {} nodes, config has {} degree weights",
                partition.num_nodes(),
                cfg.degrees.len()
            ),
        });
    }
    if partition.num_levels() != cfg.num_levels() {
        return Err(Error::ConfigMismatch {
            message: format!(
                "partition has {} levels, config has {} level weights",
                partition.num_levels(),
                cfg.num_levels()
            ),
        });
    }
    let sampler = WeightedSampler::with_order(&cfg.degrees, partition.order())?;
    let tables = LevelTables::build(partition, &sampler);
    let edges = cfg
        .sizes
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let mut rng = substream(cfg.seed, Domain::Edge, i as u64);
            let level = choose_level(s, &cfg.weights, partition, &tables, &mut rng)?;
            let nodes = place_in_level(s, level, partition, &sampler, &tables, &mut rng)?;
            Ok(HyperedgeRecord::with_level(nodes, level))
        })
        .collect::<Result<Vec<_>>>()?;
    build_incidence(partition.num_nodes(), edges)
}

/// Generates a hypergraph `factor` times larger than `g`: node degree
/// weights and edge sizes are tiled `factor` times and fed to
/// [`hyper_lap`] under a fresh partition with `weights.len()` levels.
pub fn upscale(g: &Hypergraph, factor: usize, weights: &[f64], seed: u64) -> Result<Hypergraph> {
    if factor == 0 {
        return Err(Error::ConfigMismatch {
            message: "upscale factor must be at least 1".into(),
        });
    }
    let mut sizes = Vec::with_capacity(g.num_edges() * factor);
    let mut degrees = Vec::with_capacity(g.num_nodes() * factor);
    for _ in 0..factor {
        sizes.extend(g.size_sequence());
        degrees.extend(g.degrees().iter().map(|&d| d as f64));
    }
    let cfg = GeneratorConfig::layered(sizes, degrees, weights.to_vec(), seed);
    let partition = crate::partition::make_partition(
        g.num_nodes() * factor,
        weights.len() as u32,
        seed,
    )?;
    hyper_lap(&cfg, &partition)
}
