//! Automatic level-weight selection.
//!
//! [`hyper_lap_plus`] fits a layered generator to a target hypergraph
//! without being given level weights: it starts from a flat generation
//! (everything at level 1) and, level by level, tries replacing a
//! fraction of the previous level's hyperedges with hyperedges placed
//! one level deeper. Candidate fractions are scanned at a fixed
//! resolution, scored by [`hhd`] (the KS distance between hyperedge
//! homogeneity distributions of target and candidate), and a level's
//! best fraction is kept only when it strictly decreases the score;
//! the first level that cannot improve stops the fit.
//!
//! All randomness is drawn from substreams keyed by the fit seed, the
//! level, and the replacement slot, so a fit is fully deterministic
//! and the nested candidates at fractions q < q' share their first
//! replacements (the scan compares prefixes of one plan, not 20
//! independent rewirings).

use crate::error::{Error, Result};
use crate::generators::{place_in_level, GeneratorConfig, LevelTables, WeightedSampler};
use crate::hypergraph::{build_incidence, Hypergraph, HyperedgeRecord, NodeId};
use crate::measures::{homogeneity, homogeneity_distribution, pair_degrees, PairDegreeTable};
use crate::partition::{make_partition, LevelPartition};
use crate::rng::{substream, Domain};
use crate::sample::DistributionSample;
use crate::tailstats::ks_distance;
use crate::Real;
use rand::seq::SliceRandom;
use serde::Serialize;

/// Hyperedge homogeneity distance: the KS distance between the two
/// hypergraphs' hyperedge-homogeneity distributions (raw values).
pub fn hhd(target: &Hypergraph, candidate: &Hypergraph) -> Result<Real> {
    let target_dist = homogeneity_sample(target)?;
    let candidate_dist = homogeneity_sample(candidate)?;
    Ok(ks_distance(&target_dist, &candidate_dist))
}

fn homogeneity_sample(g: &Hypergraph) -> Result<DistributionSample<Real>> {
    let pairs = pair_degrees(g, None)?;
    homogeneity_distribution(g, &pairs)
}

/// One scored candidate of a level sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CandidateScore {
    pub fraction: f64,
    pub hhd: f64,
}

/// One level sweep of a fit: every candidate scored, the fraction
/// chosen, and whether its strict-improvement test passed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitStep {
    pub level: u32,
    /// Best candidate fraction of the sweep (0 when the level had no
    /// replaceable hyperedges).
    pub fraction: f64,
    pub hhd_before: f64,
    pub hhd_after: f64,
    pub accepted: bool,
    pub candidates: Vec<CandidateScore>,
}

/// Fitting state: the target's cached homogeneity distribution, the
/// node partition, and the current generated hypergraph with per-edge
/// provenance levels and an incrementally maintained pair-degree table.
#[derive(Debug, Clone)]
pub struct FitState {
    target_homogeneity: DistributionSample<Real>,
    partition: LevelPartition,
    sampler: WeightedSampler,
    tables: LevelTables,
    edges: Vec<HyperedgeRecord>,
    pairs: PairDegreeTable,
    resolution: f64,
    seed: u64,
}

impl FitState {
    /// Builds the starting state: a flat (level-1) generation with the
    /// target's size and degree sequences, under a fresh partition
    /// with floor(log2 |V|) levels.
    pub fn new(target: &Hypergraph, resolution: f64, seed: u64) -> Result<FitState> {
        if !(resolution > 0.0 && resolution <= 1.0) {
            return Err(Error::ConfigMismatch {
                message: format!("update resolution must be in (0, 1], got {resolution}"),
            });
        }
        let target_homogeneity = homogeneity_sample(target)?;
        let num_nodes = target.num_nodes();
        let levels = if num_nodes < 2 {
            1
        } else {
            (num_nodes as u64).ilog2()
        };
        let partition = make_partition(num_nodes, levels, seed)?;
        let cfg = GeneratorConfig::from_hypergraph(target, vec![1.0], seed);
        let sampler = WeightedSampler::with_order(&cfg.degrees, partition.order())?;
        let tables = LevelTables::build(&partition, &sampler);
        let mut edges = Vec::with_capacity(cfg.sizes.len());
        for (i, &s) in cfg.sizes.iter().enumerate() {
            let mut rng = substream(seed, Domain::Edge, i as u64);
            let nodes = place_in_level(s, 1, &partition, &sampler, &tables, &mut rng)?;
            edges.push(HyperedgeRecord::with_level(nodes, 1));
        }
        let mut pairs = PairDegreeTable::default();
        for e in &edges {
            update_pairs(&mut pairs, &e.nodes, 1);
        }
        Ok(FitState {
            target_homogeneity,
            partition,
            sampler,
            tables,
            edges,
            pairs,
            resolution,
            seed,
        })
    }

    pub fn num_levels(&self) -> u32 {
        self.partition.num_levels()
    }

    pub fn resolution(&self) -> f64 {
        self.resolution
    }

    pub fn target_homogeneity(&self) -> &DistributionSample<Real> {
        &self.target_homogeneity
    }

    /// The current generated hypergraph (with provenance levels).
    pub fn current(&self) -> Result<Hypergraph> {
        build_incidence(self.partition.num_nodes(), self.edges.clone())
    }

    /// KS distance of the current homogeneity distribution from the
    /// target's.
    fn score(&self) -> Result<Real> {
        let values: Result<Vec<Real>> = self
            .edges
            .iter()
            .map(|e| homogeneity(e, &self.pairs))
            .collect();
        let dist = DistributionSample::new(values?)?;
        Ok(ks_distance(&self.target_homogeneity, &dist))
    }

    fn apply(&mut self, plan: &LevelPlan, slot: usize) {
        let idx = plan.slots[slot] as usize;
        update_pairs(&mut self.pairs, &self.edges[idx].nodes, -1);
        update_pairs(&mut self.pairs, &plan.replacements[slot], 1);
        self.edges[idx] =
            HyperedgeRecord::with_level(plan.replacements[slot].clone(), plan.level);
    }

    /// Per-level edge-count fractions of the current hypergraph.
    fn level_fractions(&self) -> Vec<f64> {
        let mut counts = vec![0usize; self.num_levels() as usize];
        for e in &self.edges {
            let level = e.level.expect("generated edges carry levels");
            counts[level as usize - 1] += 1;
        }
        counts
            .iter()
            .map(|&c| c as f64 / self.edges.len() as f64)
            .collect()
    }
}

fn update_pairs(pairs: &mut PairDegreeTable, nodes: &[NodeId], delta: i32) {
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            pairs.add(nodes[i], nodes[j], delta);
        }
    }
}

/// A level's replacement plan: the eligible edge slots in scan order
/// and a pre-generated replacement for each, so the candidate at
/// fraction q is exactly the first ceil(q * n) entries.
struct LevelPlan {
    level: u32,
    slots: Vec<u32>,
    replacements: Vec<Vec<NodeId>>,
}

fn build_plan(state: &FitState, level: u32) -> Result<LevelPlan> {
    let num_nodes = state.partition.num_nodes() as u64;
    let mut slots: Vec<u32> = state
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            e.level == Some(level - 1)
                && e.size() as u64 * (1u64 << (level - 1)) <= num_nodes
                && state.tables.level_feasible(level, e.size())
        })
        .map(|(i, _)| i as u32)
        .collect();
    let mut rng = substream(state.seed, Domain::EligibleShuffle, level as u64);
    slots.shuffle(&mut rng);
    let mut replacements = Vec::with_capacity(slots.len());
    for (k, &idx) in slots.iter().enumerate() {
        let mut rng = substream(
            state.seed,
            Domain::Replacement,
            ((level as u64) << 32) | k as u64,
        );
        replacements.push(place_in_level(
            state.edges[idx as usize].size(),
            level,
            &state.partition,
            &state.sampler,
            &state.tables,
            &mut rng,
        )?);
    }
    Ok(LevelPlan {
        level,
        slots,
        replacements,
    })
}

/// The candidate fractions {p, 2p, ..., 1}.
fn fraction_ladder(resolution: f64) -> Vec<f64> {
    let mut fractions = Vec::new();
    let mut i = 1u32;
    loop {
        let f = resolution * i as f64;
        if f >= 1.0 - 1e-9 {
            fractions.push(1.0);
            return fractions;
        }
        fractions.push(f);
        i += 1;
    }
}

/// One explicit update: replaces the ceil(q * n) first planned slots
/// of `level` (eligible = provenance level-1, small enough for the
/// level's groups) and returns the resulting hypergraph. With no
/// eligible hyperedges the current hypergraph is returned unchanged.
///
/// This is the same plan [`hyper_lap_plus`] scans internally, so the
/// returned hypergraph equals the internal candidate at fraction `q`.
pub fn update_step(state: &FitState, q: f64, level: u32) -> Result<Hypergraph> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::ConfigMismatch {
            message: format!("update fraction must be in (0, 1], got {q}"),
        });
    }
    if level < 2 || level > state.num_levels() {
        return Err(Error::ConfigMismatch {
            message: format!(
                "update level must be in 2..={}, got {level}",
                state.num_levels()
            ),
        });
    }
    let plan = build_plan(state, level)?;
    let cut = cut_for(q, plan.slots.len());
    let mut edges = state.edges.clone();
    for k in 0..cut {
        let idx = plan.slots[k] as usize;
        edges[idx] = HyperedgeRecord::with_level(plan.replacements[k].clone(), level);
    }
    build_incidence(state.partition.num_nodes(), edges)
}

fn cut_for(q: f64, n: usize) -> usize {
    ((q * n as f64).ceil() as usize).min(n)
}

/// Options for [`hyper_lap_plus`].
#[derive(Debug, Clone)]
pub struct PlusOptions {
    /// Fraction scan resolution p; candidates are {p, 2p, ..., 1}.
    pub resolution: f64,
    /// Number of independent fits; the one with the lowest final
    /// score is returned.
    pub repeats: usize,
    pub seed: u64,
}

impl Default for PlusOptions {
    fn default() -> Self {
        PlusOptions {
            resolution: 0.05,
            repeats: 1,
            seed: 0,
        }
    }
}

/// A fitted generation: the hypergraph, the level weights implied by
/// its provenance levels, the per-level acceptance history, and the
/// final homogeneity distance to the target.
#[derive(Debug, Clone)]
pub struct PlusResult {
    pub graph: Hypergraph,
    pub weights: Vec<f64>,
    pub history: Vec<FitStep>,
    /// Wall-clock seconds spent on each history entry's sweep.
    pub level_seconds: Vec<f64>,
    pub hhd: Real,
}

/// Fits level weights to `target` by greedy per-level replacement (see
/// the module docs). Runs `repeats` independent fits and keeps the
/// best final score.
pub fn hyper_lap_plus(target: &Hypergraph, options: &PlusOptions) -> Result<PlusResult> {
    if options.repeats < 1 {
        return Err(Error::ConfigMismatch {
            message: "repeats must be at least 1".into(),
        });
    }
    let mut best: Option<PlusResult> = None;
    for r in 0..options.repeats {
        let run = fit_once(
            target,
            options.resolution,
            options.seed.wrapping_add(r as u64),
        )?;
        if best.as_ref().map_or(true, |b| run.hhd < b.hhd) {
            best = Some(run);
        }
    }
    Ok(best.expect("at least one repeat"))
}

fn fit_once(target: &Hypergraph, resolution: f64, seed: u64) -> Result<PlusResult> {
    let mut state = FitState::new(target, resolution, seed)?;
    let mut history = Vec::new();
    let mut level_seconds = Vec::new();
    let mut current = state.score()?;
    for level in 2..=state.num_levels() {
        let started = std::time::Instant::now();
        let plan = build_plan(&state, level)?;
        if plan.slots.is_empty() {
            history.push(FitStep {
                level,
                fraction: 0.0,
                hhd_before: current,
                hhd_after: current,
                accepted: false,
                candidates: Vec::new(),
            });
            level_seconds.push(started.elapsed().as_secs_f64());
            break;
        }
        let saved_edges = state.edges.clone();
        let saved_pairs = state.pairs.clone();
        let mut walked = 0;
        let mut candidates = Vec::new();
        let mut best: Option<(Real, f64, usize)> = None;
        for q in fraction_ladder(resolution) {
            let cut = cut_for(q, plan.slots.len());
            for k in walked..cut {
                state.apply(&plan, k);
            }
            walked = cut;
            let score = state.score()?;
            candidates.push(CandidateScore {
                fraction: q,
                hhd: score,
            });
            if best.map_or(true, |(b, _, _)| score < b) {
                best = Some((score, q, cut));
            }
        }
        state.edges = saved_edges;
        state.pairs = saved_pairs;
        let (score, fraction, cut) = best.expect("non-empty ladder");
        let accepted = score < current;
        history.push(FitStep {
            level,
            fraction,
            hhd_before: current,
            hhd_after: if accepted { score } else { current },
            accepted,
            candidates,
        });
        level_seconds.push(started.elapsed().as_secs_f64());
        if !accepted {
            break;
        }
        for k in 0..cut {
            state.apply(&plan, k);
        }
        current = score;
    }
    Ok(PlusResult {
        graph: state.current()?,
        weights: state.level_fractions(),
        history,
        level_seconds,
        hhd: current,
    })
}
