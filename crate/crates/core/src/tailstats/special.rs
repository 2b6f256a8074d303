//! Special functions backing the tail fits: Hurwitz zeta, stable normal
//! tail masses, and the exponentially damped power integral.

/// Hurwitz zeta `sum_{k>=0} (q+k)^(-alpha)` for `alpha > 1`, `q > 0`,
/// via Euler-Maclaurin: explicit head, integral tail, and Bernoulli
/// corrections.
pub(crate) fn hurwitz_zeta(alpha: f64, q: f64) -> f64 {
    debug_assert!(alpha > 1.0 && q > 0.0);
    const HEAD: usize = 16;
    // B_{2j} / (2j)! for j = 1..=6.
    const BERN: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
    ];
    let mut sum = 0.0;
    for k in 0..HEAD {
        sum += (q + k as f64).powf(-alpha);
    }
    let a = q + HEAD as f64;
    sum += a.powf(1.0 - alpha) / (alpha - 1.0);
    sum += 0.5 * a.powf(-alpha);
    // Correction terms: B_{2j}/(2j)! * (alpha)_(2j-1) * a^(-alpha-2j+1).
    let mut rising = alpha;
    let mut power = a.powf(-alpha - 1.0);
    for (j, b) in BERN.iter().enumerate() {
        sum += b * rising * power;
        let k = 2 * (j + 1);
        rising *= (alpha + k as f64 - 1.0) * (alpha + k as f64);
        power /= a * a;
    }
    sum
}

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Standard normal CDF.
pub(crate) fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / SQRT_2)
}

/// Standard normal survival function `1 - CDF`, accurate in the far
/// upper tail.
pub(crate) fn normal_sf(z: f64) -> f64 {
    0.5 * libm::erfc(z / SQRT_2)
}

/// `P(z_lo < Z <= z_hi)` for a standard normal, organized to avoid
/// cancellation in either tail.
pub(crate) fn normal_mass(z_lo: f64, z_hi: f64) -> f64 {
    debug_assert!(z_lo <= z_hi);
    if z_lo >= 0.0 {
        (libm::erfc(z_lo / SQRT_2) - libm::erfc(z_hi / SQRT_2)) * 0.5
    } else if z_hi <= 0.0 {
        (libm::erfc(-z_hi / SQRT_2) - libm::erfc(-z_lo / SQRT_2)) * 0.5
    } else {
        normal_cdf(z_hi) - normal_cdf(z_lo)
    }
}

/// `ln J(alpha, c)` where `J = integral_1^inf t^(-alpha) e^(-c t) dt`,
/// `c > 0`. Computed as `integral_0^inf exp((1-alpha) u - c e^u) du`
/// (substituting `t = e^u`) with composite Simpson on the finite range
/// where the integrand is non-negligible.
pub(crate) fn ln_damped_power_integral(alpha: f64, c: f64) -> f64 {
    debug_assert!(c > 0.0);
    let h = |u: f64| (1.0 - alpha) * u - c * u.exp();
    // Peak of h over u >= 0.
    let u_star = if alpha < 1.0 {
        ((1.0 - alpha) / c).ln().max(0.0)
    } else {
        0.0
    };
    let h_max = h(u_star);
    let floor = h_max - 46.0; // ~1e-20 of the peak

    // Right support edge: expand then bisect onto the floor.
    let mut hi = u_star + 1.0;
    while h(hi) > floor {
        hi += 1.0 + (hi - u_star);
    }
    let mut lo_edge = u_star;
    for _ in 0..60 {
        let mid = 0.5 * (lo_edge + hi);
        if h(mid) > floor {
            lo_edge = mid;
        } else {
            hi = mid;
        }
    }
    // Left support edge within [0, u_star].
    let mut lo = 0.0;
    if u_star > 0.0 && h(0.0) < floor {
        let mut hi_edge = u_star;
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi_edge);
            if h(mid) < floor {
                lo = mid;
            } else {
                hi_edge = mid;
            }
        }
    }

    const STEPS: usize = 8192; // even
    let dx = (hi - lo) / STEPS as f64;
    let mut acc = (h(lo) - h_max).exp() + (h(hi) - h_max).exp();
    for i in 1..STEPS {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * (h(lo + i as f64 * dx) - h_max).exp();
    }
    h_max + (acc * dx / 3.0).ln()
}

/// `ln Z` for the discrete damped power law:
/// `Z = sum_{x>=xmin} x^(-alpha) e^(-lambda x)`, `lambda > 0`.
///
/// Head terms are summed explicitly; the remainder is bridged with
/// Euler-Maclaurin around the damped power integral.
pub(crate) fn ln_z_damped_power_discrete(alpha: f64, lambda: f64, xmin: u64) -> f64 {
    debug_assert!(lambda > 0.0 && xmin >= 1);
    let term_ln = |x: f64| -alpha * x.ln() - lambda * x;
    const HEAD: u64 = 4096;
    let cut = xmin + HEAD;
    // Log-sum-exp over the head terms.
    let mut max_ln = f64::NEG_INFINITY;
    let mut lns = Vec::with_capacity(HEAD as usize);
    for x in xmin..cut {
        let t = term_ln(x as f64);
        max_ln = max_ln.max(t);
        lns.push(t);
    }
    let head_sum: f64 = lns.iter().map(|&t| (t - max_ln).exp()).sum();
    let ln_head = max_ln + head_sum.ln();

    // Tail: sum_{x>=cut} f(x) ~= integral_cut^inf f + f(cut)/2 - f'(cut)/12
    // with f(x) = x^(-alpha) e^(-lambda x). The integral reduces to the
    // damped power integral by x = cut * t.
    let cutf = cut as f64;
    let ln_integral =
        (1.0 - alpha) * cutf.ln() + ln_damped_power_integral(alpha, lambda * cutf);
    let ln_f_cut = term_ln(cutf);
    // f'(x) = -(alpha/x + lambda) f(x).
    let fprime_scale = -(alpha / cutf + lambda);
    // Assemble in linear space relative to the larger exponent.
    let base = ln_integral.max(ln_f_cut);
    let tail = (ln_integral - base).exp() + 0.5 * (ln_f_cut - base).exp()
        - (fprime_scale / 12.0) * (ln_f_cut - base).exp();
    let ln_tail = base + tail.ln();

    let m = ln_head.max(ln_tail);
    m + ((ln_head - m).exp() + (ln_tail - m).exp()).ln()
}
