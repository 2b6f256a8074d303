//! Shared plumbing: input loading, thread-pool setup, list parsing.

use crate::{Format, GenerateArgs, InputArgs, TriplesArgs, TriplesMode};
use anyhow::{bail, Context, Result};
use hyperlap_core::ingest::{load_hypergraph, InputFormat, LoadOptions};
use hyperlap_core::measures::TripleOptions;
use hyperlap_core::Hypergraph;
use std::path::Path;

impl Format {
    pub fn to_core(self) -> InputFormat {
        match self {
            Format::Edgelist => InputFormat::EdgeListLines,
            Format::Nverts => InputFormat::NVertsSimplices,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Edgelist => "edgelist",
            Format::Nverts => "nverts",
        }
    }
}

impl InputArgs {
    pub fn load_options(&self) -> LoadOptions {
        LoadOptions {
            dedupe: !self.keep_dupes,
            drop_singletons: !self.keep_singletons,
        }
    }

    pub fn load(&self) -> Result<Hypergraph> {
        load_hypergraph(&self.input, self.format.to_core(), self.load_options())
            .with_context(|| format!("loading {}", self.input.display()))
    }
}

impl GenerateArgs {
    pub fn load_options(&self) -> LoadOptions {
        LoadOptions {
            dedupe: !self.keep_dupes,
            drop_singletons: !self.keep_singletons,
        }
    }
}

impl TriplesArgs {
    pub fn to_options(&self, seed: u64) -> TripleOptions {
        let mut options = TripleOptions {
            seed,
            ..TripleOptions::default()
        };
        if let Some(budget) = self.budget {
            options.sample_budget = budget;
        }
        match self.triples {
            TriplesMode::Auto => {}
            TriplesMode::Exact => {
                options.max_enum_size = usize::MAX;
                if self.budget.is_none() {
                    options.sample_budget = u64::MAX;
                }
            }
            TriplesMode::Sampled => options.max_enum_size = 0,
        }
        options
    }
}

/// Builds the global worker pool; 0 keeps the default (one per core).
pub fn init_threads(threads: usize) -> Result<()> {
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("building thread pool")?;
    }
    Ok(())
}

pub fn ensure_out_dir(path: &Path) -> Result<()> {
    std::fs::create_dir_all(path)
        .with_context(|| format!("creating output directory {}", path.display()))
}

/// Parses `w1,...,wL` and checks against an optional explicit level
/// count; a bare level count yields uniform weights.
pub fn resolve_level_weights(levels: Option<u32>, weights: Option<&str>) -> Result<Vec<f64>> {
    match (levels, weights) {
        (_, Some(list)) => {
            let parsed: Vec<f64> = list
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<f64>()
                        .with_context(|| format!("bad weight {tok:?}"))
                })
                .collect::<Result<_>>()?;
            if let Some(l) = levels {
                if parsed.len() != l as usize {
                    bail!("--levels {l} disagrees with {} weights", parsed.len());
                }
            }
            Ok(parsed)
        }
        (Some(l), None) => {
            if l == 0 {
                bail!("--levels must be at least 1");
            }
            Ok(vec![1.0 / l as f64; l as usize])
        }
        (None, None) => bail!("give --levels or --weights"),
    }
}

/// Reads one number per line, ignoring blanks and `#` comments.
pub fn read_number_file(path: &Path) -> Result<Vec<f64>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: f64 = trimmed
            .parse()
            .with_context(|| format!("{}:{}: bad number {trimmed:?}", path.display(), i + 1))?;
        values.push(value);
    }
    if values.is_empty() {
        bail!("{} contains no numbers", path.display());
    }
    Ok(values)
}

pub fn parse_factors(list: &str) -> Result<Vec<usize>> {
    let factors: Vec<usize> = list
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .with_context(|| format!("bad factor {tok:?}"))
        })
        .collect::<Result<_>>()?;
    if factors.is_empty() {
        bail!("no upscale factors given");
    }
    Ok(factors)
}
