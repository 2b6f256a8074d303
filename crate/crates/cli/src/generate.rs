//! `generate`, `upscale`, and `bench`: synthetic hypergraph production.

use crate::report::{prep_config, report, write_json, write_rows};
use crate::{common, BenchArgs, GenerateArgs, GenerateCommand, UpscaleArgs};
use anyhow::{bail, Context, Result};
use hyperlap_core::generators::{hyper_cl, hyper_lap, upscale, GeneratorConfig};
use hyperlap_core::ingest::{load_hypergraph, write_hypergraph, write_hypergraph_with_levels};
use hyperlap_core::{make_partition, Hypergraph};
use serde_json::{json, Value};
use std::path::Path;
use std::time::Instant;

/// Resolved generation inputs and their config echo.
struct GenerationInputs {
    sizes: Vec<usize>,
    degrees: Vec<f64>,
    source: Value,
}

fn generation_inputs(args: &GenerateArgs) -> Result<GenerationInputs> {
    if let Some(input) = &args.input {
        let g = load_hypergraph(input, args.format.to_core(), args.load_options())
            .with_context(|| format!("loading {}", input.display()))?;
        Ok(GenerationInputs {
            sizes: g.size_sequence(),
            degrees: g.degrees().iter().map(|&d| d as f64).collect(),
            source: json!({
                "exemplar": input.display().to_string(),
                "format": args.format.name(),
                "preprocessing": prep_config(!args.keep_dupes, !args.keep_singletons),
            }),
        })
    } else {
        let sizes_file = args.sizes_file.as_ref().expect("clap enforces the pair");
        let degrees_file = args.degrees_file.as_ref().expect("clap enforces the pair");
        let sizes: Vec<usize> = common::read_number_file(sizes_file)?
            .into_iter()
            .map(|v| {
                if v.fract() != 0.0 || v < 1.0 {
                    bail!("hyperedge sizes must be positive integers, got {v}");
                }
                Ok(v as usize)
            })
            .collect::<Result<_>>()?;
        let degrees = common::read_number_file(degrees_file)?;
        Ok(GenerationInputs {
            sizes,
            degrees,
            source: json!({
                "sizes_file": sizes_file.display().to_string(),
                "degrees_file": degrees_file.display().to_string(),
            }),
        })
    }
}

fn write_generated(
    g: &Hypergraph,
    out_dir: &Path,
    stem: &str,
    emit_levels: bool,
) -> Result<Vec<String>> {
    let edges_name = format!("{stem}-edges.txt");
    let edges_path = out_dir.join(&edges_name);
    let mut files = vec![edges_name];
    if emit_levels {
        let levels_name = format!("{stem}-edges.levels");
        write_hypergraph_with_levels(g, &edges_path, out_dir.join(&levels_name))?;
        files.push(levels_name);
    } else {
        write_hypergraph(g, &edges_path)?;
    }
    Ok(files)
}

pub fn run_generate(cmd: &GenerateCommand) -> Result<()> {
    let (args, algorithm) = match cmd {
        GenerateCommand::Hypercl(args) => (args, "hypercl"),
        GenerateCommand::Hyperlap(args) => (args, "hyperlap"),
    };
    common::init_threads(args.run.threads)?;
    common::ensure_out_dir(&args.run.out)?;
    let inputs = generation_inputs(args)?;
    let seed = args.run.seed;

    let (g, weights) = match cmd {
        GenerateCommand::Hypercl(_) => {
            if args.levels.is_some() || args.weights.is_some() {
                bail!("--levels/--weights only apply to `generate hyperlap`");
            }
            let cfg = GeneratorConfig::flat(inputs.sizes, inputs.degrees, seed);
            (hyper_cl(&cfg)?, vec![1.0])
        }
        GenerateCommand::Hyperlap(_) => {
            let weights =
                common::resolve_level_weights(args.levels, args.weights.as_deref())?;
            let cfg = GeneratorConfig::layered(inputs.sizes, inputs.degrees, weights.clone(), seed);
            let partition = make_partition(cfg.degrees.len(), cfg.num_levels(), seed)?;
            (hyper_lap(&cfg, &partition)?, weights)
        }
    };

    let files = write_generated(&g, &args.run.out, "generated", args.emit_levels)?;
    let config = json!({
        "algorithm": algorithm,
        "source": inputs.source,
        "weights": weights,
        "emit_levels": args.emit_levels,
        "threads": args.run.threads,
    });
    let data = json!({
        "num_nodes": g.num_nodes(),
        "num_edges": g.num_edges(),
        "sum_sizes": g.sum_sizes(),
        "files": files,
    });
    write_json(
        &args.run.out.join("generate.json"),
        &report("generate", seed, config, data),
    )
}

pub fn run_upscale(args: &UpscaleArgs) -> Result<()> {
    common::init_threads(args.run.threads)?;
    common::ensure_out_dir(&args.run.out)?;
    let g = args.input.load()?;
    let weights = common::resolve_level_weights(args.levels, args.weights.as_deref())?;
    let scaled = upscale(&g, args.factor, &weights, args.run.seed)?;
    let files = write_generated(&scaled, &args.run.out, "upscaled", args.emit_levels)?;
    let config = json!({
        "input": args.input.input.display().to_string(),
        "format": args.input.format.name(),
        "preprocessing": prep_config(!args.input.keep_dupes, !args.input.keep_singletons),
        "factor": args.factor,
        "weights": weights,
        "emit_levels": args.emit_levels,
        "threads": args.run.threads,
    });
    let data = json!({
        "num_nodes": scaled.num_nodes(),
        "num_edges": scaled.num_edges(),
        "sum_sizes": scaled.sum_sizes(),
        "files": files,
    });
    write_json(
        &args.run.out.join("upscale.json"),
        &report("upscale", args.run.seed, config, data),
    )
}

/// Least-squares slope of ln(y) against ln(x).
fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

pub fn run_bench(args: &BenchArgs) -> Result<()> {
    common::init_threads(args.run.threads)?;
    common::ensure_out_dir(&args.run.out)?;
    if args.runs == 0 {
        bail!("--runs must be at least 1");
    }
    let g = args.input.load()?;
    let factors = common::parse_factors(&args.factors)?;
    let weights = match &args.weights {
        Some(list) => common::resolve_level_weights(Some(args.levels), Some(list))?,
        None => common::resolve_level_weights(Some(args.levels), None)?,
    };

    let mut rows = Vec::new();
    let mut points = Vec::new();
    for &factor in &factors {
        let mut best = f64::INFINITY;
        let mut scaled_sizes = 0u64;
        for _ in 0..args.runs {
            let start = Instant::now();
            let scaled = upscale(&g, factor, &weights, args.run.seed)?;
            best = best.min(start.elapsed().as_secs_f64());
            scaled_sizes = scaled.sum_sizes();
        }
        rows.push(format!("{factor},{scaled_sizes},{best}"));
        points.push((scaled_sizes as f64, best));
    }
    write_rows(&args.run.out.join("bench.csv"), "factor,sum_sizes,seconds", &rows)?;

    let slope = if points.len() >= 2 {
        Some(log_log_slope(&points))
    } else {
        None
    };
    let config = json!({
        "input": args.input.input.display().to_string(),
        "format": args.input.format.name(),
        "preprocessing": prep_config(!args.input.keep_dupes, !args.input.keep_singletons),
        "factors": factors,
        "weights": weights,
        "runs": args.runs,
        "threads": args.run.threads,
    });
    let data = json!({
        "rows": points.iter().zip(&factors).map(|(&(sum_sizes, seconds), &factor)| json!({
            "factor": factor,
            "sum_sizes": sum_sizes as u64,
            "seconds": seconds,
        })).collect::<Vec<_>>(),
        "log_log_slope": slope,
        "files": ["bench.csv"],
    });
    write_json(
        &args.run.out.join("bench.json"),
        &report("bench", args.run.seed, config, data),
    )
}
