//! Report envelope and plot-ready CSV writers.
//!
//! JSON reports all share one envelope (tool version, command, seed,
//! resolved config) so any emitted file identifies the run that made
//! it. Distributions go to flat CSV, one distribution per file:
//! integer-valued ones as `value,count` rows, real-valued ones as one
//! sorted `value` per row.

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

#[derive(Serialize)]
pub struct Report {
    pub version: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub config: Value,
    pub data: Value,
}

pub fn report(command: &'static str, seed: u64, config: Value, data: Value) -> Report {
    Report {
        version: env!("CARGO_PKG_VERSION"),
        command,
        seed,
        config,
        data,
    }
}

pub fn write_json(path: &Path, report: &Report) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut out = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut out, report)
        .with_context(|| format!("writing {}", path.display()))?;
    out.write_all(b"\n")
        .and_then(|_| out.flush())
        .with_context(|| format!("writing {}", path.display()))
}

pub fn to_value<T: Serialize>(value: &T) -> Result<Value> {
    serde_json::to_value(value).context("serializing report data")
}

fn csv_writer(path: &Path, header: &str) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut out = BufWriter::new(file);
    writeln!(out, "{header}").with_context(|| format!("writing {}", path.display()))?;
    Ok(out)
}

/// `value,count` rows, ascending by value.
pub fn write_value_counts(
    path: &Path,
    values: impl IntoIterator<Item = u64>,
) -> Result<()> {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut out = csv_writer(path, "value,count")?;
    for (value, count) in counts {
        writeln!(out, "{value},{count}").with_context(|| format!("writing {}", path.display()))?;
    }
    out.flush().with_context(|| format!("writing {}", path.display()))
}

/// One sorted value per row.
pub fn write_sorted_values(path: &Path, values: &[f64]) -> Result<()> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut out = csv_writer(path, "value")?;
    for v in sorted {
        writeln!(out, "{v}").with_context(|| format!("writing {}", path.display()))?;
    }
    out.flush().with_context(|| format!("writing {}", path.display()))
}

/// Arbitrary pre-formatted rows under a header.
pub fn write_rows(path: &Path, header: &str, rows: &[String]) -> Result<()> {
    let mut out = csv_writer(path, header)?;
    for row in rows {
        writeln!(out, "{row}").with_context(|| format!("writing {}", path.display()))?;
    }
    out.flush().with_context(|| format!("writing {}", path.display()))
}

/// Config echo for the preprocessing switches.
pub fn prep_config(dedupe: bool, drop_singletons: bool) -> Value {
    json!({ "dedupe": dedupe, "drop_singletons": drop_singletons })
}
