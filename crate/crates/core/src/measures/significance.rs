//! Significance of an egonet measure: how far a real hypergraph's mean
//! egonet measure sits from a null model's, normalized by the largest
//! possible cross difference between individual egonets.

use super::egonet::EgonetStat;
use crate::error::{Error, Result};
use crate::Real;

/// Which egonet measure a significance score is computed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgonetMeasure {
    Density,
    Overlapness,
}

impl EgonetMeasure {
    fn pick(self, stat: &EgonetStat) -> Real {
        match self {
            EgonetMeasure::Density => stat.density,
            EgonetMeasure::Overlapness => stat.overlapness,
        }
    }

    fn name(self) -> &'static str {
        match self {
            EgonetMeasure::Density => "density",
            EgonetMeasure::Overlapness => "overlapness",
        }
    }
}

/// Significance score `(mean_real - mean_null) / max_cross_difference`,
/// where the denominator is the largest `|x - y|` over real egonet
/// values `x` and null egonet values `y`.
pub fn significance(
    real: &[EgonetStat],
    null: &[EgonetStat],
    measure: EgonetMeasure,
) -> Result<Real> {
    if real.is_empty() || null.is_empty() {
        return Err(Error::EmptyInput {
            what: "egonet statistics",
        });
    }
    let mut real_min = Real::INFINITY;
    let mut real_max = Real::NEG_INFINITY;
    let mut real_sum = 0.0;
    for s in real {
        let x = measure.pick(s);
        real_min = real_min.min(x);
        real_max = real_max.max(x);
        real_sum += x;
    }
    let mut null_min = Real::INFINITY;
    let mut null_max = Real::NEG_INFINITY;
    let mut null_sum = 0.0;
    for s in null {
        let x = measure.pick(s);
        null_min = null_min.min(x);
        null_max = null_max.max(x);
        null_sum += x;
    }
    let denominator = (real_max - null_min).max(null_max - real_min);
    if denominator <= 0.0 {
        return Err(Error::DegenerateDenominator {
            measure: measure.name(),
        });
    }
    let mean_real = real_sum / real.len() as Real;
    let mean_null = null_sum / null.len() as Real;
    Ok((mean_real - mean_null) / denominator)
}
