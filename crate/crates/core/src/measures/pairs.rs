//! Pair and triple degrees: how many hyperedges contain a given pair or
//! triple of nodes.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId};
use crate::rng::{substream, Domain};
use rand::Rng;
use std::collections::{HashMap, HashSet};

/// Default cap on the number of enumerated pairs.
pub const DEFAULT_PAIR_CAPACITY: u64 = 1 << 31;

fn pair_key(u: NodeId, v: NodeId) -> u64 {
    debug_assert!(u < v);
    ((u as u64) << 32) | v as u64
}

/// Degree counts for every node pair that co-occurs in at least one
/// hyperedge.
#[derive(Debug, Clone, Default)]
pub struct PairDegreeTable {
    counts: HashMap<u64, u32>,
}

impl PairDegreeTable {
    /// Number of distinct co-occurring pairs.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Pair degree of `{u, v}`, if the pair co-occurs anywhere.
    pub fn get(&self, u: NodeId, v: NodeId) -> Option<u32> {
        if u == v {
            return None;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.counts.get(&pair_key(a, b)).copied()
    }

    /// All pair degrees, unordered.
    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.values().copied()
    }

    /// All `((u, v), degree)` entries sorted by pair, for deterministic dumps.
    pub fn sorted_entries(&self) -> Vec<((NodeId, NodeId), u32)> {
        let mut entries: Vec<_> = self
            .counts
            .iter()
            .map(|(&k, &c)| (((k >> 32) as u32, k as u32), c))
            .collect();
        entries.sort_unstable();
        entries
    }

    /// Sum of all pair degrees (= total pair enumerations).
    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| c as u64).sum()
    }

    pub(crate) fn add(&mut self, u: NodeId, v: NodeId, delta: i32) {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let key = pair_key(a, b);
        let current = self.counts.get(&key).copied().unwrap_or(0) as i64;
        let updated = current + delta as i64;
        debug_assert!(updated >= 0);
        if updated <= 0 {
            self.counts.remove(&key);
        } else {
            self.counts.insert(key, updated as u32);
        }
    }
}

fn choose2(s: u64) -> u64 {
    s * (s - 1) / 2
}

fn choose3(s: u64) -> u64 {
    s * (s - 1) * (s - 2) / 6
}

/// Counts, for every co-occurring node pair, the number of hyperedges
/// containing both nodes. `capacity` bounds the total enumeration work
/// (defaults to [`DEFAULT_PAIR_CAPACITY`]).
pub fn pair_degrees(g: &Hypergraph, capacity: Option<u64>) -> Result<PairDegreeTable> {
    let capacity = capacity.unwrap_or(DEFAULT_PAIR_CAPACITY);
    let required: u64 = g.edges().iter().map(|e| choose2(e.size() as u64)).sum();
    if required > capacity {
        return Err(Error::CapacityExceeded { required, capacity });
    }
    let mut counts: HashMap<u64, u32> = HashMap::with_capacity(required.min(1 << 22) as usize);
    for edge in g.edges() {
        let nodes = &edge.nodes;
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                *counts.entry(pair_key(nodes[i], nodes[j])).or_insert(0) += 1;
            }
        }
    }
    Ok(PairDegreeTable { counts })
}

/// Controls for triple-degree computation.
#[derive(Debug, Clone, Copy)]
pub struct TripleOptions {
    /// Hyperedges larger than this force sampled mode.
    pub max_enum_size: usize,
    /// Exact mode requires the total triple enumeration to fit this
    /// budget; in sampled mode it is the number of sampling attempts.
    pub sample_budget: u64,
    /// Seed for sampled mode.
    pub seed: u64,
}

impl Default for TripleOptions {
    fn default() -> Self {
        TripleOptions {
            max_enum_size: 100,
            sample_budget: 10_000_000,
            seed: 0,
        }
    }
}

/// How the triple degrees were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleMode {
    /// Every co-occurring triple was enumerated.
    Exact,
    /// Distinct triples were sampled uniformly; `accepted` of `attempts`
    /// draws survived the uniformity correction.
    Sampled { attempts: u64, accepted: u64 },
}

/// Triple degrees over distinct co-occurring triples.
#[derive(Debug, Clone)]
pub struct TripleDegreeResult {
    /// One degree per distinct triple (all triples in exact mode, the
    /// accepted sample otherwise). Unordered.
    pub values: Vec<u32>,
    pub mode: TripleMode,
}

/// Exact degree of one triple via incidence-list intersection.
fn triple_degree_of(g: &Hypergraph, t: [NodeId; 3]) -> u32 {
    let shortest = t
        .iter()
        .copied()
        .min_by_key(|&v| g.incident_edges(v).len())
        .unwrap();
    let mut count = 0;
    for &e in g.incident_edges(shortest) {
        let edge = g.edge(e as usize);
        if t.iter().all(|&v| edge.contains(v)) {
            count += 1;
        }
    }
    count
}

/// Computes the triple-degree distribution.
///
/// Exact mode enumerates every co-occurring triple when all hyperedges
/// are at most `max_enum_size` nodes and the total enumeration fits
/// `sample_budget`. Otherwise triples are sampled uniformly over the
/// *distinct* co-occurring triples: a draw proportional to per-edge
/// enumeration is accepted with probability `1/d3(triple)`, which
/// cancels the multiplicity bias; accepted triples are deduplicated and
/// carry their exact degree. The downgrade is reported in `mode`.
pub fn triple_degrees(g: &Hypergraph, options: TripleOptions) -> Result<TripleDegreeResult> {
    let totals: Vec<u64> = g
        .edges()
        .iter()
        .map(|e| choose3(e.size() as u64))
        .collect();
    let total: u64 = totals.iter().sum();
    if total == 0 {
        return Ok(TripleDegreeResult {
            values: Vec::new(),
            mode: TripleMode::Exact,
        });
    }

    let exact = g.edges().iter().all(|e| e.size() <= options.max_enum_size)
        && total <= options.sample_budget;
    if exact {
        let mut counts: HashMap<[NodeId; 3], u32> = HashMap::new();
        for edge in g.edges() {
            let nodes = &edge.nodes;
            for i in 0..nodes.len() {
                for j in (i + 1)..nodes.len() {
                    for k in (j + 1)..nodes.len() {
                        *counts
                            .entry([nodes[i], nodes[j], nodes[k]])
                            .or_insert(0) += 1;
                    }
                }
            }
        }
        return Ok(TripleDegreeResult {
            values: counts.into_values().collect(),
            mode: TripleMode::Exact,
        });
    }

    // Sampled mode.
    let cumulative: Vec<u64> = totals
        .iter()
        .scan(0u64, |acc, &t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    let mut rng = substream(options.seed, Domain::TripleSample, 0);
    let mut seen: HashSet<[NodeId; 3]> = HashSet::new();
    let mut values = Vec::new();
    let attempts = options.sample_budget;
    for _ in 0..attempts {
        let target = rng.gen_range(0..total);
        let e = cumulative.partition_point(|&c| c <= target);
        let nodes = &g.edge(e).nodes;
        let s = nodes.len();
        // Three distinct positions, uniform over in-edge triples.
        let i = rng.gen_range(0..s);
        let j = loop {
            let j = rng.gen_range(0..s);
            if j != i {
                break j;
            }
        };
        let k = loop {
            let k = rng.gen_range(0..s);
            if k != i && k != j {
                break k;
            }
        };
        let mut t = [nodes[i], nodes[j], nodes[k]];
        t.sort_unstable();
        let d3 = triple_degree_of(g, t);
        debug_assert!(d3 >= 1);
        if rng.gen::<f64>() < 1.0 / d3 as f64 && seen.insert(t) {
            values.push(d3);
        }
    }
    Ok(TripleDegreeResult {
        values,
        mode: TripleMode::Sampled {
            attempts,
            accepted: seen.len() as u64,
        },
    })
}
