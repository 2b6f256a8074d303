//! Premise-satisfying instance generators and premise checkers for the
//! three overlap axioms. Each generator returns a pair `(a, b)` where
//! the premises orient `b` as the more-overlapped set, so a measure
//! satisfying the axiom must give `f(a) < f(b)`.

use hyperlap_core::NodeId;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

pub type EdgeSet = Vec<Vec<NodeId>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn union_size(edges: &EdgeSet) -> usize {
    edges
        .iter()
        .flatten()
        .copied()
        .collect::<HashSet<_>>()
        .len()
}

fn all_distinct(edges: &EdgeSet) -> bool {
    let mut seen: HashSet<Vec<NodeId>> = HashSet::new();
    edges.iter().all(|e| {
        let mut sorted = e.clone();
        sorted.sort_unstable();
        seen.insert(sorted)
    })
}

/// Axiom 1 premise: one uniform hyperedge size across both sets, equal
/// distinct-node counts, and strictly fewer hyperedges in `a`.
pub fn axiom1_premise(a: &EdgeSet, b: &EdgeSet) -> bool {
    let size = a.first().map(Vec::len);
    a.iter().chain(b).all(|e| Some(e.len()) == size)
        && union_size(a) == union_size(b)
        && a.len() < b.len()
}

/// Axiom 2 premise: equal hyperedge counts, pointwise equal sizes, and
/// strictly more distinct nodes in `a`.
pub fn axiom2_premise(a: &EdgeSet, b: &EdgeSet) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| x.len() == y.len())
        && union_size(a) > union_size(b)
}

/// Axiom 3 premise: equal hyperedge counts, equal distinct-node counts,
/// and pointwise size domination of `a` by `b` with at least one strict
/// inequality.
pub fn axiom3_premise(a: &EdgeSet, b: &EdgeSet) -> bool {
    a.len() == b.len()
        && union_size(a) == union_size(b)
        && a.iter().zip(b).all(|(x, y)| x.len() <= y.len())
        && a.iter().zip(b).any(|(x, y)| x.len() < y.len())
}

/// Distinct random `size`-subsets of `0..universe`, jointly covering
/// every node. `None` when the draw got unlucky; the caller retries.
fn covering_subsets(
    rng: &mut ChaCha8Rng,
    universe: u32,
    size: usize,
    count: usize,
) -> Option<EdgeSet> {
    let mut nodes: Vec<NodeId> = (0..universe).collect();
    nodes.shuffle(rng);
    let mut edges: Vec<Vec<NodeId>> = Vec::with_capacity(count);
    let mut seen: HashSet<Vec<NodeId>> = HashSet::new();
    // Disjoint windows cover the shuffled order; the last window backs
    // up to stay in range.
    let mut start = 0;
    while start < nodes.len() {
        let lo = start.min(nodes.len() - size);
        let mut edge: Vec<NodeId> = nodes[lo..lo + size].to_vec();
        edge.sort_unstable();
        if seen.insert(edge.clone()) {
            edges.push(edge);
        }
        start += size;
    }
    if edges.len() > count {
        return None;
    }
    let mut attempts = 0;
    while edges.len() < count {
        attempts += 1;
        if attempts > 200 {
            return None;
        }
        nodes.shuffle(rng);
        let mut edge: Vec<NodeId> = nodes[..size].to_vec();
        edge.sort_unstable();
        if seen.insert(edge.clone()) {
            edges.push(edge);
        }
    }
    Some(edges)
}

/// Distinct edges with the given sizes whose union is exactly
/// `0..universe`: every node is dealt to some edge with free capacity,
/// then edges are topped up with random distinct members.
fn edges_with_sizes(rng: &mut ChaCha8Rng, universe: u32, sizes: &[usize]) -> Option<EdgeSet> {
    debug_assert!(sizes.iter().sum::<usize>() >= universe as usize);
    debug_assert!(sizes.iter().all(|&s| s <= universe as usize));
    let mut members: Vec<HashSet<NodeId>> = sizes.iter().map(|_| HashSet::new()).collect();
    let mut nodes: Vec<NodeId> = (0..universe).collect();
    nodes.shuffle(rng);
    for &v in &nodes {
        let open: Vec<usize> = (0..sizes.len())
            .filter(|&i| members[i].len() < sizes[i] && !members[i].contains(&v))
            .collect();
        let &slot = open.choose(rng)?;
        members[slot].insert(v);
    }
    for (i, &s) in sizes.iter().enumerate() {
        let mut attempts = 0;
        while members[i].len() < s {
            attempts += 1;
            if attempts > 500 {
                return None;
            }
            members[i].insert(rng.gen_range(0..universe));
        }
    }
    let edges: EdgeSet = members
        .into_iter()
        .map(|m| {
            let mut edge: Vec<NodeId> = m.into_iter().collect();
            edge.sort_unstable();
            edge
        })
        .collect();
    all_distinct(&edges).then_some(edges)
}

/// A premise-satisfying Axiom 1 pair.
pub fn axiom1_instance(rng: &mut ChaCha8Rng) -> (EdgeSet, EdgeSet) {
    loop {
        let size = rng.gen_range(2..=4usize);
        let universe = rng.gen_range(size as u32 + 1..=10);
        let floor = (universe as usize).div_ceil(size);
        let ceiling = distinct_subset_count(universe as usize, size).min(floor + 8);
        if ceiling < floor + 2 {
            continue;
        }
        let small = rng.gen_range(floor..ceiling);
        let large = rng.gen_range(small + 1..=ceiling);
        let a = covering_subsets(rng, universe, size, small);
        let b = covering_subsets(rng, universe, size, large);
        if let (Some(a), Some(b)) = (a, b) {
            debug_assert!(axiom1_premise(&a, &b));
            return (a, b);
        }
    }
}

fn distinct_subset_count(n: usize, k: usize) -> usize {
    let mut c = 1usize;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// A premise-satisfying Axiom 2 pair.
pub fn axiom2_instance(rng: &mut ChaCha8Rng) -> (EdgeSet, EdgeSet) {
    loop {
        let count = rng.gen_range(2..=6usize);
        let sizes: Vec<usize> = (0..count).map(|_| rng.gen_range(2..=5)).collect();
        let total: usize = sizes.iter().sum();
        let max_size = *sizes.iter().max().unwrap() as u32;
        if total < max_size as usize + 2 {
            continue;
        }
        let small_union = rng.gen_range(max_size..total as u32);
        let large_union = rng.gen_range(small_union + 1..=total as u32);
        let a = edges_with_sizes(rng, large_union, &sizes);
        let b = edges_with_sizes(rng, small_union, &sizes);
        if let (Some(a), Some(b)) = (a, b) {
            debug_assert!(axiom2_premise(&a, &b));
            return (a, b);
        }
    }
}

/// A premise-satisfying Axiom 3 pair: `a` is `b` with some members
/// deleted wherever coverage allows, keeping the union intact.
pub fn axiom3_instance(rng: &mut ChaCha8Rng) -> (EdgeSet, EdgeSet) {
    'outer: loop {
        let count = rng.gen_range(2..=6usize);
        let sizes: Vec<usize> = (0..count).map(|_| rng.gen_range(2..=5)).collect();
        let total: usize = sizes.iter().sum();
        let max_size = *sizes.iter().max().unwrap() as u32;
        if total < max_size as usize + 3 {
            continue;
        }
        let universe = rng.gen_range(max_size..=(total as u32 - 2).min(10));
        let Some(b) = edges_with_sizes(rng, universe, &sizes) else {
            continue;
        };
        let mut coverage = vec![0u32; universe as usize];
        for e in &b {
            for &v in e {
                coverage[v as usize] += 1;
            }
        }
        let mut a = b.clone();
        let deletions = rng.gen_range(1..=2usize);
        for _ in 0..deletions {
            let candidates: Vec<(usize, NodeId)> = a
                .iter()
                .enumerate()
                .flat_map(|(i, e)| {
                    e.iter()
                        .filter(|&&v| coverage[v as usize] >= 2)
                        .map(move |&v| (i, v))
                })
                .filter(|&(i, _)| a[i].len() >= 2)
                .collect();
            let Some(&(i, v)) = candidates.choose(rng) else {
                continue 'outer;
            };
            a[i].retain(|&x| x != v);
            coverage[v as usize] -= 1;
        }
        if a.iter().zip(&b).all(|(x, y)| x.len() == y.len()) || !all_distinct(&a) {
            continue;
        }
        debug_assert!(axiom3_premise(&a, &b));
        return (a, b);
    }
}
