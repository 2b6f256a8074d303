//! `stats` and `compare`: the five overlap distributions of a dataset,
//! and KS distances plus significance scores between two datasets.

use crate::report::{prep_config, report, write_json, write_sorted_values, write_value_counts};
use crate::{common, CompareArgs, StatsArgs};
use anyhow::{Context, Result};
use hyperlap_core::ingest::load_hypergraph;
use hyperlap_core::measures::{
    density, egonet_stats, homogeneity_distribution, overlapness, pair_degrees, significance,
    triple_degrees, EgonetMeasure, EgonetStat, TripleMode, TripleOptions,
};
use hyperlap_core::tailstats::ks_distance;
use hyperlap_core::{DistributionSample, Hypergraph, Real};
use serde_json::{json, Value};

/// The five distributions the toolkit compares between hypergraphs,
/// plus the raw egonet table they come from.
pub struct DistributionSet {
    pub egonets: Vec<EgonetStat>,
    pub egonet_density: DistributionSample<Real>,
    pub egonet_overlapness: DistributionSample<Real>,
    pub pair_degrees: DistributionSample<Real>,
    /// Absent when no hyperedge has three nodes.
    pub triple_degrees: Option<DistributionSample<Real>>,
    pub triple_mode: TripleMode,
    pub homogeneity: DistributionSample<Real>,
}

pub fn distribution_set(
    g: &Hypergraph,
    triples: TripleOptions,
    pair_capacity: Option<u64>,
) -> Result<DistributionSet> {
    let egonets = egonet_stats(g);
    let egonet_density = DistributionSample::new(egonets.iter().map(|s| s.density).collect())?;
    let egonet_overlapness =
        DistributionSample::new(egonets.iter().map(|s| s.overlapness).collect())?;
    let pairs = pair_degrees(g, pair_capacity)?;
    let pair_sample = DistributionSample::from_integers(pairs.values().map(u64::from))?;
    let homogeneity = homogeneity_distribution(g, &pairs)?;
    let triple_result = triple_degrees(g, triples)?;
    let triple_sample = if triple_result.values.is_empty() {
        None
    } else {
        Some(DistributionSample::from_integers(
            triple_result.values.iter().copied().map(u64::from),
        )?)
    };
    Ok(DistributionSet {
        egonets,
        egonet_density,
        egonet_overlapness,
        pair_degrees: pair_sample,
        triple_degrees: triple_sample,
        triple_mode: triple_result.mode,
        homogeneity,
    })
}

fn triple_mode_json(mode: TripleMode) -> Value {
    match mode {
        TripleMode::Exact => json!({ "mode": "exact" }),
        TripleMode::Sampled { attempts, accepted } => {
            json!({ "mode": "sampled", "attempts": attempts, "accepted": accepted })
        }
    }
}

fn mean(sample: &DistributionSample<Real>) -> f64 {
    sample.mean()
}

pub fn run_stats(args: &StatsArgs) -> Result<()> {
    common::init_threads(args.run.threads)?;
    common::ensure_out_dir(&args.run.out)?;
    let g = args.input.load()?;
    let triples = args.triples.to_options(args.run.seed);
    let set = distribution_set(&g, triples, args.triples.pair_capacity)?;

    let rows: Vec<String> = set
        .egonets
        .iter()
        .map(|s| {
            format!(
                "{},{},{},{},{},{}",
                s.node, s.num_edges, s.num_distinct_nodes, s.sum_sizes, s.density, s.overlapness
            )
        })
        .collect();
    crate::report::write_rows(
        &args.run.out.join("egonets.csv"),
        "node,num_edges,num_distinct_nodes,sum_sizes,density,overlapness",
        &rows,
    )?;
    write_value_counts(
        &args.run.out.join("pair-degrees.csv"),
        set.pair_degrees.values().iter().map(|&v| v as u64),
    )?;
    write_value_counts(
        &args.run.out.join("triple-degrees.csv"),
        set.triple_degrees
            .iter()
            .flat_map(|s| s.values().iter().map(|&v| v as u64)),
    )?;
    write_sorted_values(&args.run.out.join("homogeneity.csv"), set.homogeneity.values())?;

    let edge_slices = g.edges().iter().map(|e| e.nodes.as_slice());
    let whole_density: Real = density(edge_slices.clone())?;
    let whole_overlapness: Real = overlapness(edge_slices)?;
    let config = json!({
        "input": args.input.input.display().to_string(),
        "format": args.input.format.name(),
        "preprocessing": prep_config(!args.input.keep_dupes, !args.input.keep_singletons),
        "triples": triple_config(&triples),
        "pair_capacity": args.triples.pair_capacity,
        "threads": args.run.threads,
    });
    let data = json!({
        "num_nodes": g.num_nodes(),
        "num_edges": g.num_edges(),
        "sum_sizes": g.sum_sizes(),
        "density": whole_density,
        "overlapness": whole_overlapness,
        "mean_egonet_density": mean(&set.egonet_density),
        "mean_egonet_overlapness": mean(&set.egonet_overlapness),
        "mean_pair_degree": mean(&set.pair_degrees),
        "mean_triple_degree": set.triple_degrees.as_ref().map(mean),
        "mean_homogeneity": mean(&set.homogeneity),
        "triple_degrees": triple_mode_json(set.triple_mode),
        "files": ["egonets.csv", "pair-degrees.csv", "triple-degrees.csv", "homogeneity.csv"],
    });
    write_json(
        &args.run.out.join("summary.json"),
        &report("stats", args.run.seed, config, data),
    )
}

fn triple_config(options: &TripleOptions) -> Value {
    json!({
        "max_enum_size": if options.max_enum_size == usize::MAX { None } else { Some(options.max_enum_size) },
        "sample_budget": if options.sample_budget == u64::MAX { None } else { Some(options.sample_budget) },
    })
}

fn significance_json(
    real: &[EgonetStat],
    null: &[EgonetStat],
    measure: EgonetMeasure,
) -> Value {
    match significance(real, null, measure) {
        Ok(score) => json!(score),
        Err(err) => json!({ "undefined": err.to_string() }),
    }
}

pub fn run_compare(args: &CompareArgs) -> Result<()> {
    common::init_threads(args.run.threads)?;
    common::ensure_out_dir(&args.run.out)?;
    let left = args.input.load()?;
    let against_format = args.against_format.unwrap_or(args.input.format);
    let right = load_hypergraph(
        &args.against,
        against_format.to_core(),
        args.input.load_options(),
    )
    .with_context(|| format!("loading {}", args.against.display()))?;

    let triples = args.triples.to_options(args.run.seed);
    let a = distribution_set(&left, triples, args.triples.pair_capacity)?;
    let b = distribution_set(&right, triples, args.triples.pair_capacity)?;

    let triple_d = match (&a.triple_degrees, &b.triple_degrees) {
        (Some(x), Some(y)) => Some(ks_distance(x, y)),
        _ => None,
    };
    let config = json!({
        "input": args.input.input.display().to_string(),
        "format": args.input.format.name(),
        "against": args.against.display().to_string(),
        "against_format": against_format.name(),
        "preprocessing": prep_config(!args.input.keep_dupes, !args.input.keep_singletons),
        "triples": triple_config(&triples),
        "pair_capacity": args.triples.pair_capacity,
        "threads": args.run.threads,
    });
    let data = json!({
        "d_statistics": {
            "egonet_density": ks_distance(&a.egonet_density, &b.egonet_density),
            "egonet_overlapness": ks_distance(&a.egonet_overlapness, &b.egonet_overlapness),
            "pair_degrees": ks_distance(&a.pair_degrees, &b.pair_degrees),
            "triple_degrees": triple_d,
            "homogeneity": ks_distance(&a.homogeneity, &b.homogeneity),
        },
        "significance": {
            "density": significance_json(&a.egonets, &b.egonets, EgonetMeasure::Density),
            "overlapness": significance_json(&a.egonets, &b.egonets, EgonetMeasure::Overlapness),
        },
        "triple_degrees": {
            "input": triple_mode_json(a.triple_mode),
            "against": triple_mode_json(b.triple_mode),
        },
    });
    write_json(
        &args.run.out.join("compare.json"),
        &report("compare", args.run.seed, config, data),
    )
}
