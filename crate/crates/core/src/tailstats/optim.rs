//! Small maximizers for the likelihood fits: golden-section search in
//! one dimension and a Nelder-Mead simplex with restarts plus
//! coordinate polish in two.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section maximization of a unimodal function on `[lo, hi]`.
pub(crate) fn golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, rel_tol: f64) -> (f64, f64) {
    let mut a = lo;
    let mut b = hi;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a) > rel_tol * (a.abs() + b.abs() + 1e-12) {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// One Nelder-Mead run maximizing `f` from a starting point, bounded by
/// clamping evaluations into `bounds`.
fn nelder_mead_once(
    f: &impl Fn([f64; 2]) -> f64,
    start: [f64; 2],
    scale: [f64; 2],
    bounds: [[f64; 2]; 2],
    tol: f64,
    max_iter: usize,
) -> ([f64; 2], f64) {
    let clamp = |p: [f64; 2]| {
        [
            p[0].clamp(bounds[0][0], bounds[0][1]),
            p[1].clamp(bounds[1][0], bounds[1][1]),
        ]
    };
    let eval = |p: [f64; 2]| f(clamp(p));

    let mut pts = [
        start,
        [start[0] + scale[0], start[1]],
        [start[0], start[1] + scale[1]],
    ];
    let mut vals = [eval(pts[0]), eval(pts[1]), eval(pts[2])];

    for _ in 0..max_iter {
        // Order descending by value (pts[0] best).
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());
        pts = [pts[idx[0]], pts[idx[1]], pts[idx[2]]];
        vals = [vals[idx[0]], vals[idx[1]], vals[idx[2]]];

        if vals[0] - vals[2] < tol {
            break;
        }

        let centroid = [
            0.5 * (pts[0][0] + pts[1][0]),
            0.5 * (pts[0][1] + pts[1][1]),
        ];
        let worst = pts[2];
        let reflect = [
            centroid[0] + (centroid[0] - worst[0]),
            centroid[1] + (centroid[1] - worst[1]),
        ];
        let fr = eval(reflect);
        if fr > vals[0] {
            let expand = [
                centroid[0] + 2.0 * (centroid[0] - worst[0]),
                centroid[1] + 2.0 * (centroid[1] - worst[1]),
            ];
            let fe = eval(expand);
            if fe > fr {
                pts[2] = expand;
                vals[2] = fe;
            } else {
                pts[2] = reflect;
                vals[2] = fr;
            }
        } else if fr > vals[1] {
            pts[2] = reflect;
            vals[2] = fr;
        } else {
            let contract = [
                centroid[0] + 0.5 * (worst[0] - centroid[0]),
                centroid[1] + 0.5 * (worst[1] - centroid[1]),
            ];
            let fc = eval(contract);
            if fc > vals[2] {
                pts[2] = contract;
                vals[2] = fc;
            } else {
                // Shrink toward the best point.
                for k in 1..3 {
                    pts[k] = [
                        pts[0][0] + 0.5 * (pts[k][0] - pts[0][0]),
                        pts[0][1] + 0.5 * (pts[k][1] - pts[0][1]),
                    ];
                    vals[k] = eval(pts[k]);
                }
            }
        }
    }
    let best = clamp(pts[0]);
    (best, f(best))
}

/// Coordinate-wise golden-section refinement within bounds. Iterates
/// until neither axis moves, leaving each axis locally optimal at the
/// returned point.
fn polish(
    f: &impl Fn([f64; 2]) -> f64,
    mut x: [f64; 2],
    bounds: [[f64; 2]; 2],
) -> ([f64; 2], f64) {
    let mut fx = f(x);
    let mut radius = [
        0.1 * (bounds[0][1] - bounds[0][0]),
        0.1 * (bounds[1][1] - bounds[1][0]),
    ];
    for _ in 0..30 {
        let mut moved = 0.0f64;
        for axis in 0..2 {
            let lo = (x[axis] - radius[axis]).max(bounds[axis][0]);
            let hi = (x[axis] + radius[axis]).min(bounds[axis][1]);
            let g = |t: f64| {
                let mut p = x;
                p[axis] = t;
                f(p)
            };
            let (t, ft) = golden_max(g, lo, hi, 1e-13);
            if ft > fx {
                moved = moved.max((t - x[axis]).abs());
                x[axis] = t;
                fx = ft;
            }
            radius[axis] = (radius[axis] * 0.5).max(1e-9 * (1.0 + x[axis].abs()));
        }
        if moved < 1e-12 * (1.0 + x[0].abs() + x[1].abs()) {
            break;
        }
    }
    (x, fx)
}

/// Maximizes `f` over a box: Nelder-Mead from every start, then
/// coordinate polish on the best candidate.
pub(crate) fn maximize2(
    f: impl Fn([f64; 2]) -> f64,
    starts: &[[f64; 2]],
    bounds: [[f64; 2]; 2],
) -> ([f64; 2], f64) {
    let mut best: Option<([f64; 2], f64)> = None;
    for &start in starts {
        let scale = [
            0.05 * (bounds[0][1] - bounds[0][0]),
            0.05 * (bounds[1][1] - bounds[1][0]),
        ];
        let (x, fx) = nelder_mead_once(&f, start, scale, bounds, 1e-9, 150);
        if best.is_none() || fx > best.unwrap().1 {
            best = Some((x, fx));
        }
    }
    let (x, _) = best.expect("at least one start");
    polish(&f, x, bounds)
}
