//! Sorted samples of scalar values with ECDF queries.

use crate::error::{Error, Result};
use num_traits::Float;

/// A non-empty sample of finite values, stored sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSample<F = crate::Real> {
    values: Vec<F>,
}

impl<F: Float> DistributionSample<F> {
    /// Sorts and validates the sample. Errors on empty input or any
    /// non-finite value.
    pub fn new(mut values: Vec<F>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput {
                what: "distribution sample",
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "distribution sample",
            });
        }
        values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(DistributionSample { values })
    }

    /// Builds a sample from unsigned integer observations (e.g. degrees).
    pub fn from_integers<I: IntoIterator<Item = u64>>(values: I) -> Result<Self> {
        let converted: Vec<F> = values
            .into_iter()
            .map(|v| F::from(v).expect("count representable as float"))
            .collect();
        Self::new(converted)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Values sorted ascending.
    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn min(&self) -> F {
        self.values[0]
    }

    pub fn max(&self) -> F {
        *self.values.last().unwrap()
    }

    pub fn mean(&self) -> F {
        let sum = self
            .values
            .iter()
            .fold(F::zero(), |acc, &v| acc + v);
        sum / F::from(self.values.len()).unwrap()
    }

    /// Empirical CDF: fraction of sample values `<= x`.
    pub fn ecdf(&self, x: F) -> F {
        let count = self.values.partition_point(|&v| v <= x);
        F::from(count).unwrap() / F::from(self.values.len()).unwrap()
    }
}
