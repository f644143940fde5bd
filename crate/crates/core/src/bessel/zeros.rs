//! Root finding for J0 and for the J0/Y0 cross product.
//!
//! Every root is located inside a verified sign-change bracket and refined
//! by safeguarded Newton iteration that falls back to bisection whenever a
//! step would leave the bracket or stall.

use std::f64::consts::PI;

use super::{j0, j1, y0, y1};
use crate::error::{Error, Result};

/// Argument tolerance for root refinement: never coarser than 1e-13, relaxed
/// to a few ulps once the root itself is large.
fn xacc(scale: f64) -> f64 {
    (4.0 * f64::EPSILON * scale.abs()).max(1e-13)
}

/// Safeguarded Newton inside a sign-change bracket [x1, x2].
///
/// `fdf` returns (f, f'). `f1`, `f2` are the already-known endpoint values;
/// `x0` seeds the iteration and is clamped into the bracket. A zero endpoint
/// is accepted as the root outright.
fn rtsafe<F>(mut fdf: F, x1: f64, x2: f64, f1: f64, f2: f64, x0: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> (f64, f64),
{
    if f1 == 0.0 {
        return Ok(x1);
    }
    if f2 == 0.0 {
        return Ok(x2);
    }
    if (f1 > 0.0) == (f2 > 0.0) {
        return Err(Error::Convergence(
            "root is not bracketed by a sign change".into(),
        ));
    }
    // Orient so that f(xl) < 0 < f(xh).
    let (mut xl, mut xh) = if f1 < 0.0 { (x1, x2) } else { (x2, x1) };
    let mut rt = x0.clamp(x1.min(x2), x1.max(x2));
    let mut dx_old = (x2 - x1).abs();
    let mut dx = dx_old;
    let (mut f, mut df) = fdf(rt);
    for _ in 0..100 {
        let newton_in_bracket = ((rt - xh) * df - f) * ((rt - xl) * df - f) < 0.0;
        let newton_fast_enough = 2.0 * f.abs() < (dx_old * df).abs();
        if newton_in_bracket && newton_fast_enough {
            dx_old = dx;
            dx = f / df;
            let prev = rt;
            rt -= dx;
            if prev == rt {
                return Ok(rt);
            }
        } else {
            dx_old = dx;
            dx = 0.5 * (xh - xl);
            rt = xl + dx;
            if rt == xl {
                return Ok(rt);
            }
        }
        if dx.abs() < tol {
            return Ok(rt);
        }
        let (fv, dfv) = fdf(rt);
        f = fv;
        df = dfv;
        if f < 0.0 {
            xl = rt;
        } else {
            xh = rt;
        }
    }
    Err(Error::Convergence(
        "safeguarded Newton exhausted its iteration budget".into(),
    ))
}

/// McMahon's expansion for the l-th zero of J0, truncated adaptively: terms
/// are added while they still shrink, which is the usable prefix of an
/// asymptotic series. Worst case (l = 1) is off by ~2e-3, well inside the
/// refinement bracket.
fn mcmahon_guess(l: u32) -> f64 {
    let beta = (f64::from(l) - 0.25) * PI;
    let beta_sq = beta * beta;
    let coeffs = [
        1.0 / 8.0,
        -31.0 / 384.0,
        3779.0 / 15360.0,
        -6_277_237.0 / 3_440_640.0,
    ];
    let mut x = beta;
    let mut pow = beta;
    let mut prev = f64::INFINITY;
    for c in coeffs {
        let term = c / pow;
        if term.abs() >= prev {
            break;
        }
        x += term;
        prev = term.abs();
        pow *= beta_sq;
    }
    x
}

pub(crate) fn j0_zero_impl(l: u32) -> Result<f64> {
    if l == 0 {
        return Err(Error::Domain("Bessel zero index l is 1-based".into()));
    }
    // Classical enclosure beta < zeta_l < beta + 1/(8 beta) with
    // beta = (l - 1/4) pi; verified below by the actual endpoint signs.
    let beta = (f64::from(l) - 0.25) * PI;
    let mut lo = beta;
    let mut hi = beta + 1.0 / (8.0 * beta);
    let mut flo = j0(lo);
    let mut fhi = j0(hi);
    let mut widen = 0;
    while (flo > 0.0) == (fhi > 0.0) && widen < 8 {
        // Rounding can nudge an endpoint over for very large l; the next
        // zeros are ~pi away, so a 0.05 pad cannot capture a neighbor.
        lo -= 0.05;
        hi += 0.05;
        flo = j0(lo);
        fhi = j0(hi);
        widen += 1;
    }
    rtsafe(
        |x| (j0(x), -j1(x)),
        lo,
        hi,
        flo,
        fhi,
        mcmahon_guess(l),
        xacc(hi),
    )
}

/// Dirichlet cross product f(e) = J0(e mu_in) Y0(e mu_out) - J0(e mu_out) Y0(e mu_in)
/// and its derivative in e.
fn cross(e: f64, mu_in: f64, mu_out: f64) -> (f64, f64) {
    let (ji, yi) = (j0(e * mu_in), y0(e * mu_in));
    let (jo, yo) = (j0(e * mu_out), y0(e * mu_out));
    let f = ji * yo - jo * yi;
    let df = mu_out * (j1(e * mu_out) * yi - ji * y1(e * mu_out))
        + mu_in * (jo * y1(e * mu_in) - j1(e * mu_in) * yo);
    (f, df)
}

pub(crate) fn cross_product_zero_impl(mu_in: f64, mu_out: f64, k: u32) -> Result<f64> {
    if !(mu_in > 0.0 && mu_out > mu_in && mu_out.is_finite()) {
        return Err(Error::Domain(format!(
            "cross-product zeros need 0 < mu_in < mu_out, got ({mu_in}, {mu_out})"
        )));
    }
    if k == 0 {
        return Err(Error::Domain(
            "cross-product zero index k is 1-based".into(),
        ));
    }
    let dmu = mu_out - mu_in;
    // Roots are spaced asymptotically pi/dmu apart (and never tighter than
    // their first appearance near that scale), so an eighth of the smaller
    // of pi/dmu and pi cannot step over a sign change.
    let step = (PI / dmu).min(PI) / 8.0;
    // Generous ceiling: the k-th root sits near k pi/dmu.
    let e_max = 2.0 * (f64::from(k) + 8.0) * PI / dmu + 16.0;
    let tol = xacc(f64::from(k) * PI / dmu);

    let mut count = 0u32;
    let mut x0 = step;
    let mut f0 = cross(x0, mu_in, mu_out).0;
    while x0 < e_max {
        if f0 == 0.0 {
            // Landed exactly on a root; simple zeros let us step off it.
            count += 1;
            if count == k {
                return Ok(x0);
            }
            x0 += 1e-3 * step;
            f0 = cross(x0, mu_in, mu_out).0;
            continue;
        }
        let x1 = x0 + step;
        let f1 = cross(x1, mu_in, mu_out).0;
        if f1 == 0.0 || (f0 > 0.0) != (f1 > 0.0) {
            count += 1;
            if count == k {
                return rtsafe(
                    |e| cross(e, mu_in, mu_out),
                    x0,
                    x1,
                    f0,
                    f1,
                    0.5 * (x0 + x1),
                    tol,
                );
            }
        }
        x0 = x1;
        f0 = f1;
    }
    Err(Error::Convergence(format!(
        "no bracket for cross-product zero k = {k} below e = {e_max:.3}"
    )))
}
