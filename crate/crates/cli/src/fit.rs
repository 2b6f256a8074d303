//! `fit`: automatic level-weight selection against a target dataset.

use crate::report::{prep_config, report, to_value, write_json};
use crate::{common, FitArgs};
use anyhow::Result;
use hyperlap_core::fitting::{hyper_lap_plus, PlusOptions};
use hyperlap_core::ingest::{write_hypergraph, write_hypergraph_with_levels};
use serde_json::json;

pub fn run(args: &FitArgs) -> Result<()> {
    common::init_threads(args.run.threads)?;
    common::ensure_out_dir(&args.run.out)?;
    let target = args.input.load()?;
    let options = PlusOptions {
        resolution: args.resolution,
        repeats: args.repeats,
        seed: args.run.seed,
    };
    let result = hyper_lap_plus(&target, &options)?;

    let edges_path = args.run.out.join("fitted-edges.txt");
    let mut files = vec!["fitted-edges.txt".to_string()];
    if args.emit_levels {
        write_hypergraph_with_levels(&result.graph, &edges_path, args.run.out.join("fitted-edges.levels"))?;
        files.push("fitted-edges.levels".to_string());
    } else {
        write_hypergraph(&result.graph, &edges_path)?;
    }

    let initial_hhd = result
        .history
        .first()
        .map_or(result.hhd, |step| step.hhd_before);
    let levels = result
        .history
        .iter()
        .zip(&result.level_seconds)
        .map(|(step, &seconds)| {
            let mut value = to_value(step)?;
            value["seconds"] = json!(seconds);
            Ok(value)
        })
        .collect::<Result<Vec<_>>>()?;
    let config = json!({
        "input": args.input.input.display().to_string(),
        "format": args.input.format.name(),
        "preprocessing": prep_config(!args.input.keep_dupes, !args.input.keep_singletons),
        "resolution": args.resolution,
        "repeats": args.repeats,
        "emit_levels": args.emit_levels,
        "threads": args.run.threads,
    });
    let data = json!({
        "initial_hhd": initial_hhd,
        "final_hhd": result.hhd,
        "weights": result.weights,
        "levels": levels,
        "num_nodes": result.graph.num_nodes(),
        "num_edges": result.graph.num_edges(),
        "files": files,
    });
    write_json(
        &args.run.out.join("fit.json"),
        &report("fit", args.run.seed, config, data),
    )
}
