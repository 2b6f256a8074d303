//! Maximum-likelihood tail models over discrete or continuous data
//! truncated at `xmin`.
//!
//! Discrete data uses discrete likelihoods: a zeta-normalized power
//! law, a numerically normalized damped power law, and log-normal /
//! exponential masses assigned over `[x - 0.5, x + 0.5)`. Continuous
//! data uses the corresponding densities truncated at `xmin`. All four
//! model families share a single evaluation entry point so fits and
//! perturbation checks use identical arithmetic.

use super::optim::{golden_max, maximize2};
use super::special::{
    hurwitz_zeta, ln_damped_power_integral, ln_z_damped_power_discrete, normal_mass, normal_sf,
};
use crate::error::{Error, Result};
use serde::Serialize;

/// The four tail model families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TailModel {
    PowerLaw,
    TruncatedPowerLaw,
    LogNormal,
    Exponential,
}

/// Fitted parameters of one tail model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum ModelParams {
    PowerLaw { alpha: f64 },
    TruncatedPowerLaw { alpha: f64, lambda: f64 },
    LogNormal { mu: f64, sigma: f64 },
    Exponential { lambda: f64 },
}

impl ModelParams {
    pub fn model(&self) -> TailModel {
        match self {
            ModelParams::PowerLaw { .. } => TailModel::PowerLaw,
            ModelParams::TruncatedPowerLaw { .. } => TailModel::TruncatedPowerLaw,
            ModelParams::LogNormal { .. } => TailModel::LogNormal,
            ModelParams::Exponential { .. } => TailModel::Exponential,
        }
    }

    /// Parameter (name, value) pairs in declaration order.
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        match *self {
            ModelParams::PowerLaw { alpha } => vec![("alpha", alpha)],
            ModelParams::TruncatedPowerLaw { alpha, lambda } => {
                vec![("alpha", alpha), ("lambda", lambda)]
            }
            ModelParams::LogNormal { mu, sigma } => vec![("mu", mu), ("sigma", sigma)],
            ModelParams::Exponential { lambda } => vec![("lambda", lambda)],
        }
    }

    /// Rebuilds the params with one named entry replaced.
    pub fn with_entry(&self, name: &str, value: f64) -> ModelParams {
        let mut out = *self;
        match &mut out {
            ModelParams::PowerLaw { alpha } => {
                if name == "alpha" {
                    *alpha = value;
                }
            }
            ModelParams::TruncatedPowerLaw { alpha, lambda } => match name {
                "alpha" => *alpha = value,
                "lambda" => *lambda = value,
                _ => {}
            },
            ModelParams::LogNormal { mu, sigma } => match name {
                "mu" => *mu = value,
                "sigma" => *sigma = value,
                _ => {}
            },
            ModelParams::Exponential { lambda } => {
                if name == "lambda" {
                    *lambda = value;
                }
            }
        }
        out
    }
}

/// Tail data above `xmin`, reduced to the sufficient statistics (and,
/// for discrete data, the value histogram) the likelihoods need.
#[derive(Debug, Clone)]
pub(crate) enum TailData {
    Discrete(DiscreteTail),
    Continuous(ContinuousTail),
}

#[derive(Debug, Clone)]
pub(crate) struct DiscreteTail {
    pub xmin: u64,
    pub n: f64,
    /// (value, count), ascending values.
    pub hist: Vec<(u64, u64)>,
    pub sum_ln_x: f64,
    pub sum_x: f64,
}

#[derive(Debug, Clone)]
pub(crate) struct ContinuousTail {
    pub xmin: f64,
    pub n: f64,
    pub sum_ln_x: f64,
    pub sum_x: f64,
    pub sum_ln_sq: f64,
}

const ALPHA_PW_MAX: f64 = 50.0;
const ALPHA_TPW_RANGE: [f64; 2] = [-10.0, 30.0];
const LN_SIGMA_RANGE: [f64; 2] = [-7.0, 6.0]; // sigma in [~9e-4, ~400]

fn lambda_range(data: &TailData) -> [f64; 2] {
    match data {
        TailData::Discrete(_) => [1e-8, 50.0],
        TailData::Continuous(_) => [1e-9, 1e6],
    }
}

fn guard(v: f64) -> f64 {
    if v.is_nan() {
        f64::NEG_INFINITY
    } else {
        v
    }
}

/// Log-likelihood of `params` on `data`. Invalid parameter regions
/// evaluate to negative infinity.
pub(crate) fn log_likelihood(data: &TailData, params: &ModelParams) -> f64 {
    match data {
        TailData::Discrete(d) => guard(discrete_ll(d, params)),
        TailData::Continuous(c) => guard(continuous_ll(c, params)),
    }
}

fn discrete_ll(d: &DiscreteTail, params: &ModelParams) -> f64 {
    let xmin = d.xmin as f64;
    match *params {
        ModelParams::PowerLaw { alpha } => {
            if alpha <= 1.0 {
                return f64::NEG_INFINITY;
            }
            -alpha * d.sum_ln_x - d.n * hurwitz_zeta(alpha, xmin).ln()
        }
        ModelParams::TruncatedPowerLaw { alpha, lambda } => {
            if lambda <= 0.0 {
                return f64::NEG_INFINITY;
            }
            -alpha * d.sum_ln_x - lambda * d.sum_x
                - d.n * ln_z_damped_power_discrete(alpha, lambda, d.xmin)
        }
        ModelParams::LogNormal { mu, sigma } => {
            if sigma <= 0.0 {
                return f64::NEG_INFINITY;
            }
            let z = |a: f64| (a.ln() - mu) / sigma;
            let denom = normal_sf(z(xmin - 0.5));
            if denom <= 0.0 {
                return f64::NEG_INFINITY;
            }
            let mut ll = -d.n * denom.ln();
            for &(x, c) in &d.hist {
                let xf = x as f64;
                let mass = normal_mass(z(xf - 0.5), z(xf + 0.5)).max(1e-320);
                ll += c as f64 * mass.ln();
            }
            ll
        }
        ModelParams::Exponential { lambda } => {
            if lambda <= 0.0 {
                return f64::NEG_INFINITY;
            }
            // Geometric over x = xmin, xmin+1, ...: the [x-.5, x+.5)
            // discretization of the exponential reduces to this.
            let ln_one_minus = (-(-lambda).exp_m1()).ln();
            d.n * ln_one_minus - lambda * (d.sum_x - d.n * xmin)
        }
    }
}

fn continuous_ll(c: &ContinuousTail, params: &ModelParams) -> f64 {
    let ln_xmin = c.xmin.ln();
    match *params {
        ModelParams::PowerLaw { alpha } => {
            if alpha <= 1.0 {
                return f64::NEG_INFINITY;
            }
            c.n * (alpha - 1.0).ln() + c.n * (alpha - 1.0) * ln_xmin - alpha * c.sum_ln_x
        }
        ModelParams::TruncatedPowerLaw { alpha, lambda } => {
            if lambda <= 0.0 {
                return f64::NEG_INFINITY;
            }
            let ln_norm =
                (1.0 - alpha) * ln_xmin + ln_damped_power_integral(alpha, lambda * c.xmin);
            -alpha * c.sum_ln_x - lambda * c.sum_x - c.n * ln_norm
        }
        ModelParams::LogNormal { mu, sigma } => {
            if sigma <= 0.0 {
                return f64::NEG_INFINITY;
            }
            let q = normal_sf((ln_xmin - mu) / sigma);
            if q <= 0.0 {
                return f64::NEG_INFINITY;
            }
            let quad = c.sum_ln_sq - 2.0 * mu * c.sum_ln_x + c.n * mu * mu;
            -c.sum_ln_x
                - c.n * sigma.ln()
                - 0.5 * c.n * (2.0 * std::f64::consts::PI).ln()
                - quad / (2.0 * sigma * sigma)
                - c.n * q.ln()
        }
        ModelParams::Exponential { lambda } => {
            if lambda <= 0.0 {
                return f64::NEG_INFINITY;
            }
            c.n * lambda.ln() - lambda * (c.sum_x - c.n * c.xmin)
        }
    }
}

/// A fitted model: parameters, attained log-likelihood, and which
/// parameters sit on a search bound (their outward perturbations are
/// not expected to lower the likelihood).
#[derive(Debug, Clone, Serialize)]
pub struct FittedModel {
    #[serde(flatten)]
    pub params: ModelParams,
    pub log_likelihood: f64,
    pub at_boundary: Vec<&'static str>,
}

fn near(a: f64, bound: f64) -> bool {
    (a - bound).abs() <= 1e-7 * (1.0 + bound.abs())
}

pub(crate) fn fit_exponential(data: &TailData) -> Result<FittedModel> {
    let lambda = match data {
        TailData::Discrete(d) => {
            let m = (d.sum_x - d.n * d.xmin as f64) / d.n;
            if m <= 0.0 {
                return Err(Error::DegenerateData {
                    message: "all tail values equal xmin".into(),
                });
            }
            (1.0 / m).ln_1p()
        }
        TailData::Continuous(c) => {
            let m = (c.sum_x - c.n * c.xmin) / c.n;
            if m <= 0.0 {
                return Err(Error::DegenerateData {
                    message: "all tail values equal xmin".into(),
                });
            }
            1.0 / m
        }
    };
    let params = ModelParams::Exponential { lambda };
    Ok(FittedModel {
        params,
        log_likelihood: log_likelihood(data, &params),
        at_boundary: vec![],
    })
}

pub(crate) fn fit_power_law(data: &TailData) -> Result<FittedModel> {
    match data {
        TailData::Continuous(c) => {
            let s = c.sum_ln_x - c.n * c.xmin.ln();
            if s <= 0.0 {
                return Err(Error::DegenerateData {
                    message: "all tail values equal xmin".into(),
                });
            }
            let alpha = 1.0 + c.n / s;
            let params = ModelParams::PowerLaw { alpha };
            Ok(FittedModel {
                params,
                log_likelihood: log_likelihood(data, &params),
                at_boundary: vec![],
            })
        }
        TailData::Discrete(_) => {
            let f = |alpha: f64| log_likelihood(data, &ModelParams::PowerLaw { alpha });
            let (alpha, ll) = golden_max(f, 1.0 + 1e-8, ALPHA_PW_MAX, 1e-13);
            let mut at_boundary = vec![];
            if near(alpha, ALPHA_PW_MAX) {
                at_boundary.push("alpha");
            }
            Ok(FittedModel {
                params: ModelParams::PowerLaw { alpha },
                log_likelihood: ll,
                at_boundary,
            })
        }
    }
}

pub(crate) fn fit_truncated_power_law(data: &TailData) -> Result<FittedModel> {
    let [lambda_lo, lambda_hi] = lambda_range(data);
    let bounds = [ALPHA_TPW_RANGE, [lambda_lo.ln(), lambda_hi.ln()]];
    let (n, sum_x, sum_ln_x, ln_xmin) = match data {
        TailData::Discrete(d) => (d.n, d.sum_x, d.sum_ln_x, (d.xmin as f64).ln()),
        TailData::Continuous(c) => (c.n, c.sum_x, c.sum_ln_x, c.xmin.ln()),
    };
    let mean = sum_x / n;
    let lambda0 = (1.0 / mean).clamp(lambda_lo * 10.0, lambda_hi / 10.0);
    let hill = {
        let s = sum_ln_x - n * ln_xmin;
        if s > 0.0 {
            (1.0 + n / s).clamp(0.0, 20.0)
        } else {
            1.5
        }
    };
    let starts = [
        [hill, lambda0.ln()],
        [hill, (lambda0 / 100.0).max(lambda_lo * 2.0).ln()],
        [0.2, lambda0.ln()],
        [2.5, (lambda0 / 10.0).max(lambda_lo * 2.0).ln()],
    ];
    let f = |p: [f64; 2]| {
        log_likelihood(
            data,
            &ModelParams::TruncatedPowerLaw {
                alpha: p[0],
                lambda: p[1].exp(),
            },
        )
    };
    let (p, ll) = maximize2(f, &starts, bounds);
    let (alpha, lambda) = (p[0], p[1].exp());
    let mut at_boundary = vec![];
    if near(alpha, ALPHA_TPW_RANGE[0]) || near(alpha, ALPHA_TPW_RANGE[1]) {
        at_boundary.push("alpha");
    }
    if near(p[1], bounds[1][0]) || near(p[1], bounds[1][1]) {
        at_boundary.push("lambda");
    }
    Ok(FittedModel {
        params: ModelParams::TruncatedPowerLaw { alpha, lambda },
        log_likelihood: ll,
        at_boundary,
    })
}

pub(crate) fn fit_log_normal(data: &TailData) -> Result<FittedModel> {
    let (n, sum_ln_x, sum_ln_sq) = match data {
        TailData::Discrete(d) => {
            let sq: f64 = d
                .hist
                .iter()
                .map(|&(x, c)| {
                    let l = (x as f64).ln();
                    c as f64 * l * l
                })
                .sum();
            (d.n, d.sum_ln_x, sq)
        }
        TailData::Continuous(c) => (c.n, c.sum_ln_x, c.sum_ln_sq),
    };
    let m0 = sum_ln_x / n;
    let var0 = (sum_ln_sq / n - m0 * m0).max(1e-6);
    let s0 = var0.sqrt();
    let bounds = [[m0 - 300.0, m0 + 50.0], LN_SIGMA_RANGE];
    let starts = [
        [m0, s0.ln().clamp(LN_SIGMA_RANGE[0], LN_SIGMA_RANGE[1])],
        [m0 - 2.0 * s0, (2.0 * s0).ln().clamp(-6.9, 5.9)],
        [m0 - 10.0, (3.0 * s0).ln().clamp(-6.9, 5.9)],
        [m0 + s0, (0.5 * s0).ln().clamp(-6.9, 5.9)],
    ];
    let f = |p: [f64; 2]| {
        log_likelihood(
            data,
            &ModelParams::LogNormal {
                mu: p[0],
                sigma: p[1].exp(),
            },
        )
    };
    let (p, ll) = maximize2(f, &starts, bounds);
    let mut at_boundary = vec![];
    if near(p[0], bounds[0][0]) || near(p[0], bounds[0][1]) {
        at_boundary.push("mu");
    }
    if near(p[1], LN_SIGMA_RANGE[0]) || near(p[1], LN_SIGMA_RANGE[1]) {
        at_boundary.push("sigma");
    }
    Ok(FittedModel {
        params: ModelParams::LogNormal {
            mu: p[0],
            sigma: p[1].exp(),
        },
        log_likelihood: ll,
        at_boundary,
    })
}

/// The parameter search interval the fitters used, for boundary-aware
/// perturbation checks. `None` means the parameter was solved in
/// closed form and its likelihood enforces validity by itself.
pub(crate) fn param_box(data: &TailData, model: TailModel, name: &str) -> Option<[f64; 2]> {
    match (model, name) {
        (TailModel::PowerLaw, "alpha") => match data {
            TailData::Discrete(_) => Some([1.0 + 1e-8, ALPHA_PW_MAX]),
            TailData::Continuous(_) => None,
        },
        (TailModel::TruncatedPowerLaw, "alpha") => Some(ALPHA_TPW_RANGE),
        (TailModel::TruncatedPowerLaw, "lambda") => Some(lambda_range(data)),
        (TailModel::LogNormal, "mu") => {
            let (n, sum_ln_x) = match data {
                TailData::Discrete(d) => (d.n, d.sum_ln_x),
                TailData::Continuous(c) => (c.n, c.sum_ln_x),
            };
            let m0 = sum_ln_x / n;
            Some([m0 - 300.0, m0 + 50.0])
        }
        (TailModel::LogNormal, "sigma") => {
            Some([LN_SIGMA_RANGE[0].exp(), LN_SIGMA_RANGE[1].exp()])
        }
        _ => None,
    }
}

pub(crate) fn fit_model(data: &TailData, model: TailModel) -> Result<FittedModel> {
    match model {
        TailModel::PowerLaw => fit_power_law(data),
        TailModel::TruncatedPowerLaw => fit_truncated_power_law(data),
        TailModel::LogNormal => fit_log_normal(data),
        TailModel::Exponential => fit_exponential(data),
    }
}
