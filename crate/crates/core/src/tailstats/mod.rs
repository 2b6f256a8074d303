//! Empirical-CDF comparison and heavy-tail model fitting.
//!
//! [`ks_distance`] computes the exact two-sample Kolmogorov-Smirnov
//! D-statistic. [`fit_tails`] fits four models (power law, truncated
//! power law, log-normal, exponential) to the tail `{x >= xmin}` of a
//! sample by maximum likelihood and reports each heavy-tailed model's
//! log-likelihood ratio against the exponential fit; a positive ratio
//! means the heavy-tailed model explains the tail better.

mod ks;
mod models;
mod optim;
mod special;

pub use ks::ks_distance;
pub use models::{FittedModel, ModelParams, TailModel};

use crate::error::{Error, Result};
use crate::sample::DistributionSample;
use crate::Real;
use models::{fit_model, log_likelihood, param_box, ContinuousTail, DiscreteTail, TailData};
use serde::Serialize;
use special::hurwitz_zeta;

/// How the lower cutoff `xmin` is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum XminPolicy {
    /// Use the smallest observed value (the whole sample is tail).
    MinObserved,
    /// Use the given cutoff as-is. Discrete fits round it up to the
    /// nearest integer.
    Fixed(f64),
    /// Scan candidate cutoffs (each distinct observed value) and keep
    /// the one minimizing the KS distance between the tail's empirical
    /// CDF and its fitted power law; ties prefer the smallest cutoff.
    KsScan,
}

/// Whether values are treated as integer counts or as reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DataKind {
    Discrete,
    Continuous,
}

/// Options for [`fit_tails`].
#[derive(Debug, Clone)]
pub struct FitOptions {
    pub xmin: XminPolicy,
    /// Force discrete or continuous likelihoods. Default: discrete
    /// when every value is an integer, continuous otherwise.
    pub kind: Option<DataKind>,
    /// Round every value to the nearest integer before fitting, for
    /// comparing real-valued statistics against integer-valued ones.
    pub bin_to_integers: bool,
    /// Minimum number of tail points required.
    pub min_tail: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            xmin: XminPolicy::MinObserved,
            kind: None,
            bin_to_integers: false,
            min_tail: 10,
        }
    }
}

/// One model's fit status.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FitOutcome {
    Fitted(FittedModel),
    Failed { reason: String },
}

impl FitOutcome {
    pub fn fitted(&self) -> Option<&FittedModel> {
        match self {
            FitOutcome::Fitted(f) => Some(f),
            FitOutcome::Failed { .. } => None,
        }
    }
}

/// Log-likelihood ratios of the heavy-tailed models against the
/// exponential fit on the same tail. `None` when either side failed.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct RatioSet {
    pub power_law: Option<f64>,
    pub truncated_power_law: Option<f64>,
    pub log_normal: Option<f64>,
}

impl RatioSet {
    pub fn get(&self, model: TailModel) -> Option<f64> {
        match model {
            TailModel::PowerLaw => self.power_law,
            TailModel::TruncatedPowerLaw => self.truncated_power_law,
            TailModel::LogNormal => self.log_normal,
            TailModel::Exponential => Some(0.0),
        }
    }
}

/// Result of fitting all four tail models at one cutoff.
#[derive(Debug, Clone, Serialize)]
pub struct TailFitResult {
    pub kind: DataKind,
    pub xmin: f64,
    pub n_tail: usize,
    pub power_law: FitOutcome,
    pub truncated_power_law: FitOutcome,
    pub log_normal: FitOutcome,
    pub exponential: FitOutcome,
    pub ratios: RatioSet,
}

impl TailFitResult {
    pub fn outcome(&self, model: TailModel) -> &FitOutcome {
        match model {
            TailModel::PowerLaw => &self.power_law,
            TailModel::TruncatedPowerLaw => &self.truncated_power_law,
            TailModel::LogNormal => &self.log_normal,
            TailModel::Exponential => &self.exponential,
        }
    }
}

const HEAVY_MODELS: [TailModel; 3] = [
    TailModel::PowerLaw,
    TailModel::TruncatedPowerLaw,
    TailModel::LogNormal,
];

/// Reading of a [`TailFitResult`]: is any heavy-tailed model better
/// than the exponential, and which model fits best.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EvidenceSummary {
    pub any_heavy_tail_positive: bool,
    /// Heavy-tailed model with the largest ratio; ties keep the first
    /// of (power law, truncated power law, log-normal). `None` when no
    /// heavy-tailed model was fitted.
    pub best_model: Option<TailModel>,
}

/// Summarizes the ratios of a fit result.
pub fn evidence_summary(fit: &TailFitResult) -> EvidenceSummary {
    let mut best: Option<(TailModel, f64)> = None;
    let mut any_positive = false;
    for model in HEAVY_MODELS {
        let Some(r) = fit.ratios.get(model) else {
            continue;
        };
        if r > 0.0 {
            any_positive = true;
        }
        if best.map_or(true, |(_, b)| r > b) {
            best = Some((model, r));
        }
    }
    EvidenceSummary {
        any_heavy_tail_positive: any_positive,
        best_model: best.map(|(m, _)| m),
    }
}

fn detect_kind(values: &[f64]) -> DataKind {
    if values.iter().all(|v| v.fract() == 0.0) {
        DataKind::Discrete
    } else {
        DataKind::Continuous
    }
}

/// Extracts the tail `{x >= cutoff}` and reduces it to the statistics
/// the likelihoods need. Returns the tail data and the effective
/// cutoff (rounded up to an integer for discrete data).
fn build_tail(sorted: &[f64], kind: DataKind, cutoff: f64, min_tail: usize) -> Result<TailData> {
    let effective = match kind {
        DataKind::Discrete => {
            if cutoff < 1.0 {
                return Err(Error::DegenerateData {
                    message: format!("discrete tails require xmin >= 1, got {cutoff}"),
                });
            }
            cutoff.ceil()
        }
        DataKind::Continuous => {
            if cutoff <= 0.0 {
                return Err(Error::DegenerateData {
                    message: format!("continuous tails require xmin > 0, got {cutoff}"),
                });
            }
            cutoff
        }
    };
    let start = sorted.partition_point(|&v| v < effective);
    let tail = &sorted[start..];
    if tail.len() < min_tail {
        return Err(Error::InsufficientTail {
            actual: tail.len(),
            required: min_tail,
            xmin: effective,
        });
    }
    if tail[0] == tail[tail.len() - 1] {
        return Err(Error::DegenerateData {
            message: format!("all {} tail values equal {}", tail.len(), tail[0]),
        });
    }
    Ok(match kind {
        DataKind::Discrete => {
            let mut hist: Vec<(u64, u64)> = Vec::new();
            for &v in tail {
                let x = v as u64;
                match hist.last_mut() {
                    Some((value, count)) if *value == x => *count += 1,
                    _ => hist.push((x, 1)),
                }
            }
            TailData::Discrete(DiscreteTail {
                xmin: effective as u64,
                n: tail.len() as f64,
                hist,
                sum_ln_x: tail.iter().map(|v| v.ln()).sum(),
                sum_x: tail.iter().sum(),
            })
        }
        DataKind::Continuous => TailData::Continuous(ContinuousTail {
            xmin: effective,
            n: tail.len() as f64,
            sum_ln_x: tail.iter().map(|v| v.ln()).sum(),
            sum_x: tail.iter().sum(),
            sum_ln_sq: tail.iter().map(|v| v.ln() * v.ln()).sum(),
        }),
    })
}

fn run_fit(data: &TailData, model: TailModel) -> FitOutcome {
    match fit_model(data, model) {
        Ok(f) if f.log_likelihood.is_finite() => FitOutcome::Fitted(f),
        Ok(_) => FitOutcome::Failed {
            reason: "no finite log-likelihood in the search region".into(),
        },
        Err(e) => FitOutcome::Failed {
            reason: e.to_string(),
        },
    }
}

/// Fits all four tail models to `{x >= xmin}` of `data` by maximum
/// likelihood. See [`FitOptions`] for cutoff, kind, and binning
/// controls.
pub fn fit_tails(data: &DistributionSample<Real>, options: &FitOptions) -> Result<TailFitResult> {
    let mut values: Vec<f64> = data.values().to_vec();
    if options.bin_to_integers {
        for v in &mut values {
            *v = v.round();
        }
    }
    let kind = options.kind.unwrap_or_else(|| detect_kind(&values));
    if kind == DataKind::Discrete {
        if let Some(bad) = values.iter().find(|v| v.fract() != 0.0) {
            return Err(Error::DegenerateData {
                message: format!(
                    "discrete fitting requires integer values, found {bad}; \
                     enable bin_to_integers or force continuous fitting"
                ),
            });
        }
    }
    let cutoff = match options.xmin {
        XminPolicy::MinObserved => values[0],
        XminPolicy::Fixed(c) => c,
        XminPolicy::KsScan => ks_scan_cutoff(&values, kind, options.min_tail)?,
    };
    let tail = build_tail(&values, kind, cutoff, options.min_tail)?;
    let (xmin, n_tail) = match &tail {
        TailData::Discrete(d) => (d.xmin as f64, d.n as usize),
        TailData::Continuous(c) => (c.xmin, c.n as usize),
    };

    let power_law = run_fit(&tail, TailModel::PowerLaw);
    let truncated_power_law = run_fit(&tail, TailModel::TruncatedPowerLaw);
    let log_normal = run_fit(&tail, TailModel::LogNormal);
    let exponential = run_fit(&tail, TailModel::Exponential);

    let mut ratios = RatioSet::default();
    if let Some(exp) = exponential.fitted() {
        let against = |outcome: &FitOutcome| {
            outcome
                .fitted()
                .map(|f| f.log_likelihood - exp.log_likelihood)
        };
        ratios.power_law = against(&power_law);
        ratios.truncated_power_law = against(&truncated_power_law);
        ratios.log_normal = against(&log_normal);
    }

    Ok(TailFitResult {
        kind,
        xmin,
        n_tail,
        power_law,
        truncated_power_law,
        log_normal,
        exponential,
        ratios,
    })
}

/// KS distance between a discrete tail's empirical CDF and a zeta
/// power law, evaluated just before and at every observed value (the
/// model CDF also moves between observations, so both sides of each
/// empirical jump matter).
fn discrete_power_law_ks(tail: &DiscreteTail, alpha: f64) -> f64 {
    let n = tail.n;
    let z0 = hurwitz_zeta(alpha, tail.xmin as f64);
    let mut d: f64 = 0.0;
    let mut below = 0.0;
    for &(v, c) in &tail.hist {
        let at = 1.0 - hurwitz_zeta(alpha, v as f64 + 1.0) / z0;
        let before = 1.0 - hurwitz_zeta(alpha, v as f64) / z0;
        d = d.max((before - below / n).abs());
        below += c as f64;
        d = d.max((at - below / n).abs());
    }
    d
}

fn continuous_power_law_ks(tail: &[f64], xmin: f64, alpha: f64) -> f64 {
    let n = tail.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in tail.iter().enumerate() {
        let f = 1.0 - (xmin / x).powf(alpha - 1.0);
        d = d.max((f - i as f64 / n).abs());
        d = d.max((f - (i + 1) as f64 / n).abs());
    }
    d
}

fn ks_scan_cutoff(sorted: &[f64], kind: DataKind, min_tail: usize) -> Result<f64> {
    if sorted.len() < min_tail {
        return Err(Error::InsufficientTail {
            actual: sorted.len(),
            required: min_tail,
            xmin: sorted[0],
        });
    }
    let mut best: Option<(f64, f64)> = None;
    let mut i = 0;
    while i < sorted.len() {
        let cutoff = sorted[i];
        let next = sorted.partition_point(|&v| v <= cutoff);
        // Tails only shrink from here on.
        if sorted.len() - i < min_tail {
            break;
        }
        if let Ok(tail) = build_tail(sorted, kind, cutoff, min_tail) {
            if let FitOutcome::Fitted(fit) = run_fit(&tail, TailModel::PowerLaw) {
                let ModelParams::PowerLaw { alpha } = fit.params else {
                    unreachable!()
                };
                let d = match &tail {
                    TailData::Discrete(dt) => discrete_power_law_ks(dt, alpha),
                    TailData::Continuous(c) => continuous_power_law_ks(&sorted[i..], c.xmin, alpha),
                };
                if best.map_or(true, |(b, _)| d < b) {
                    best = Some((d, cutoff));
                }
            }
        }
        i = next;
    }
    match best {
        Some((_, cutoff)) => Ok(cutoff),
        None => Err(Error::DegenerateData {
            message: "no cutoff candidate yields a fittable tail".into(),
        }),
    }
}

/// Checks local optimality of every fitted model in `result`: each
/// parameter is perturbed by plus or minus 1 percent, and any in-bounds
/// perturbation that raises the log-likelihood by more than 1e-6 is
/// reported. An empty return means every fit passed.
///
/// `data` and `options` must be the inputs `result` was fitted from.
pub fn local_optimality_violations(
    data: &DistributionSample<Real>,
    options: &FitOptions,
    result: &TailFitResult,
) -> Result<Vec<String>> {
    let mut values: Vec<f64> = data.values().to_vec();
    if options.bin_to_integers {
        for v in &mut values {
            *v = v.round();
        }
    }
    let tail = build_tail(&values, result.kind, result.xmin, 1)?;
    let mut violations = Vec::new();
    for model in [
        TailModel::PowerLaw,
        TailModel::TruncatedPowerLaw,
        TailModel::LogNormal,
        TailModel::Exponential,
    ] {
        let Some(fit) = result.outcome(model).fitted() else {
            continue;
        };
        let base = log_likelihood(&tail, &fit.params);
        for (name, value) in fit.params.entries() {
            for factor in [0.99, 1.01] {
                let perturbed = value * factor;
                if let Some([lo, hi]) = param_box(&tail, model, name) {
                    if perturbed < lo || perturbed > hi {
                        continue;
                    }
                }
                let ll = log_likelihood(&tail, &fit.params.with_entry(name, perturbed));
                if ll > base + 1e-6 {
                    violations.push(format!(
                        "{model:?} {name} perturbed x{factor} raises log-likelihood by {:.3e}",
                        ll - base
                    ));
                }
            }
        }
    }
    Ok(violations)
}
