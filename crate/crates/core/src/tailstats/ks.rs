//! Exact two-sample Kolmogorov-Smirnov distance.

use crate::sample::DistributionSample;
use num_traits::Float;

/// Largest absolute difference between the two empirical CDFs,
/// `sup_x |F_a(x) - F_b(x)|`.
///
/// Both samples are already sorted, so a single merge walk visits every
/// distinct value. The supremum is attained at sample values, and the
/// comparison runs on the exact integer numerator `|i*m - j*n|` (with
/// `i`, `j` the counts consumed so far), so the result is exact up to
/// one final division.
pub fn ks_distance<F: Float>(a: &DistributionSample<F>, b: &DistributionSample<F>) -> F {
    let (xs, ys) = (a.values(), b.values());
    let (n, m) = (xs.len() as u128, ys.len() as u128);
    let (mut i, mut j) = (0usize, 0usize);
    let mut best: u128 = 0;
    while i < xs.len() || j < ys.len() {
        let v = match (xs.get(i), ys.get(j)) {
            (Some(&x), Some(&y)) => {
                if x < y {
                    x
                } else {
                    y
                }
            }
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => unreachable!(),
        };
        while i < xs.len() && xs[i] == v {
            i += 1;
        }
        while j < ys.len() && ys[j] == v {
            j += 1;
        }
        best = best.max((i as u128 * m).abs_diff(j as u128 * n));
    }
    F::from(best).unwrap() / F::from(n * m).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample(values: &[f64]) -> DistributionSample<f64> {
        DistributionSample::new(values.to_vec()).unwrap()
    }

    #[test]
    fn identical_samples_are_at_distance_zero() {
        let a = sample(&[3.0, 1.0, 4.0, 1.0, 5.0]);
        assert_eq!(ks_distance(&a, &a), 0.0);
    }

    #[test]
    fn disjoint_singletons_are_at_distance_one() {
        assert_eq!(ks_distance(&sample(&[1.0]), &sample(&[2.0])), 1.0);
    }

    #[test]
    fn shifted_multiset_is_at_exactly_one_third() {
        let a = sample(&[1.0, 1.0, 2.0]);
        let b = sample(&[1.0, 2.0, 2.0]);
        assert_eq!(ks_distance(&a, &b), 1.0 / 3.0);
    }

    #[test]
    fn matches_ecdf_scan_and_is_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=12);
            let m = rng.gen_range(1..=12);
            // Small integer values force plenty of ties.
            let a: Vec<f64> = (0..n).map(|_| rng.gen_range(0..6) as f64).collect();
            let b: Vec<f64> = (0..m).map(|_| rng.gen_range(0..6) as f64).collect();
            let (a, b) = (sample(&a), sample(&b));
            let d = ks_distance(&a, &b);
            assert_eq!(d, ks_distance(&b, &a));
            // Oracle: evaluate both ECDFs at every observed value.
            let mut oracle: f64 = 0.0;
            for &v in a.values().iter().chain(b.values()) {
                oracle = oracle.max((a.ecdf(v) - b.ecdf(v)).abs());
            }
            assert!((d - oracle).abs() < 1e-12, "{d} vs {oracle}");
        }
    }

    #[test]
    fn works_for_f32_samples() {
        let a = DistributionSample::<f32>::new(vec![1.0, 1.0, 2.0]).unwrap();
        let b = DistributionSample::<f32>::new(vec![1.0, 2.0, 2.0]).unwrap();
        assert!((ks_distance(&a, &b) - 1.0 / 3.0).abs() < 1e-7);
    }
}
