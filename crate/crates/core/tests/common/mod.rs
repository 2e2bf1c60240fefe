#![allow(dead_code)]

use dnum_core::oracle::SampleRng;
use dnum_core::Membership;
use rand::Rng;

/// Linear interpolation over raw vertices, zero off the support.
pub fn interp(vertices: &[(f64, f64)], x: f64) -> f64 {
    for w in vertices.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        if x >= x0 && x <= x1 {
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    0.0
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        return left + right + (left + right - whole) / 15.0;
    }
    adaptive(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// Adaptive Simpson quadrature of `min(f, g)` over the union of supports,
/// split at every input vertex.
pub fn quadrature_min_area(f: &[(f64, f64)], g: &[(f64, f64)]) -> f64 {
    let mut xs: Vec<f64> = f.iter().chain(g).map(|v| v.0).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let h = |x: f64| interp(f, x).min(interp(g, x));
    xs.windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let (fa, fm, fb) = (h(a), h(0.5 * (a + b)), h(b));
            let whole = simpson(a, b, fa, fm, fb);
            adaptive(&h, a, b, fa, fm, fb, whole, 1e-14, 48)
        })
        .sum()
}

/// Random piecewise-linear membership curve with 1 to 4 interior vertices.
pub fn random_curve(rng: &mut SampleRng, offset: f64) -> Membership {
    let interior = rng.random_range(1..=4);
    let mut x = offset + rng.random_range(0.0..2.0);
    let mut v = vec![(x, 0.0)];
    for _ in 0..interior {
        x += rng.random_range(0.1..1.5);
        v.push((x, rng.random_range(0.05..=1.0)));
    }
    x += rng.random_range(0.1..1.5);
    v.push((x, 0.0));
    Membership::new(v).unwrap()
}
