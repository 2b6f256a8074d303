//! Scalar abstraction for overlap measures.
//!
//! Every overlap measure in this crate is a ratio of two integer counts
//! (hyperedge counts, node counts, size sums, pair-degree sums). The
//! kernels are therefore generic over the scalar the ratio is realized
//! in: any float for fast approximate work, or an exact rational when
//! bit-for-bit equalities matter. Concrete aliases live at the crate
//! root ([`crate::Real`], [`crate::Exact`]).

use num_rational::Ratio;

/// A scalar that can represent a ratio of two unsigned counts.
pub trait MeasureScalar: Clone + PartialOrd {
    /// Builds `numerator / denominator`. The denominator is nonzero;
    /// callers guard that before constructing.
    fn from_count_ratio(numerator: u64, denominator: u64) -> Self;
}

impl MeasureScalar for f64 {
    fn from_count_ratio(numerator: u64, denominator: u64) -> Self {
        debug_assert!(denominator != 0);
        numerator as f64 / denominator as f64
    }
}

impl MeasureScalar for f32 {
    fn from_count_ratio(numerator: u64, denominator: u64) -> Self {
        debug_assert!(denominator != 0);
        numerator as f32 / denominator as f32
    }
}

impl MeasureScalar for Ratio<u64> {
    fn from_count_ratio(numerator: u64, denominator: u64) -> Self {
        debug_assert!(denominator != 0);
        Ratio::new(numerator, denominator)
    }
}
