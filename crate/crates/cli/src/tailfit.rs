//! `tailfit`: heavy-tail model comparison for one distribution of a
//! dataset.

use crate::report::{report, to_value, write_json};
use crate::{common, KindArg, TailTarget, TailfitArgs};
use anyhow::{Context, Result};
use hyperlap_core::measures::{pair_degrees, triple_degrees};
use hyperlap_core::tailstats::{
    evidence_summary, fit_tails, local_optimality_violations, DataKind, FitOptions, XminPolicy,
};
use hyperlap_core::{DistributionSample, Real};
use serde_json::json;

fn parse_xmin(text: &str) -> Result<XminPolicy> {
    match text {
        "min" => Ok(XminPolicy::MinObserved),
        "scan" => Ok(XminPolicy::KsScan),
        other => {
            let value: f64 = other
                .parse()
                .with_context(|| format!("--xmin must be `min`, `scan`, or a number, got {other:?}"))?;
            Ok(XminPolicy::Fixed(value))
        }
    }
}

impl TailTarget {
    fn name(self) -> &'static str {
        match self {
            TailTarget::PairDegrees => "pair-degrees",
            TailTarget::TripleDegrees => "triple-degrees",
            TailTarget::Degrees => "degrees",
            TailTarget::Sizes => "sizes",
        }
    }
}

pub fn run(args: &TailfitArgs) -> Result<()> {
    common::init_threads(args.run.threads)?;
    common::ensure_out_dir(&args.run.out)?;
    let g = args.input.load()?;

    let sample: DistributionSample<Real> = match args.what {
        TailTarget::PairDegrees => {
            let pairs = pair_degrees(&g, args.triples.pair_capacity)?;
            DistributionSample::from_integers(pairs.values().map(u64::from))?
        }
        TailTarget::TripleDegrees => {
            let triples = triple_degrees(&g, args.triples.to_options(args.run.seed))?;
            DistributionSample::from_integers(triples.values.iter().copied().map(u64::from))?
        }
        TailTarget::Degrees => {
            DistributionSample::from_integers(g.degrees().iter().map(|&d| d as u64))?
        }
        TailTarget::Sizes => {
            DistributionSample::from_integers(g.size_sequence().iter().map(|&s| s as u64))?
        }
    };

    let options = FitOptions {
        xmin: parse_xmin(&args.xmin)?,
        kind: match args.kind {
            KindArg::Auto => None,
            KindArg::Discrete => Some(DataKind::Discrete),
            KindArg::Continuous => Some(DataKind::Continuous),
        },
        min_tail: args.min_tail,
        ..FitOptions::default()
    };
    let result = fit_tails(&sample, &options)?;
    let evidence = evidence_summary(&result);
    let optimality = match local_optimality_violations(&sample, &options, &result) {
        Ok(violations) => json!({ "checked": true, "violations": violations }),
        Err(err) => json!({ "checked": false, "error": err.to_string() }),
    };

    let config = json!({
        "input": args.input.input.display().to_string(),
        "format": args.input.format.name(),
        "preprocessing": crate::report::prep_config(!args.input.keep_dupes, !args.input.keep_singletons),
        "what": args.what.name(),
        "xmin": args.xmin,
        "min_tail": args.min_tail,
        "threads": args.run.threads,
    });
    let data = json!({
        "sample_size": sample.len(),
        "fit": to_value(&result)?,
        "evidence": to_value(&evidence)?,
        "local_optimality": optimality,
    });
    write_json(
        &args.run.out.join("tailfit.json"),
        &report("tailfit", args.run.seed, config, data),
    )
}
