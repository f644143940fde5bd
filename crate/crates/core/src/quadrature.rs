//! Adaptive Gauss-Kronrod quadrature for the normalization integrals.
//!
//! A 15-point Kronrod rule with its embedded 7-point Gauss rule gives a
//! per-interval error estimate; intervals that miss their share of the
//! tolerance are bisected. The integrands here (squared cylinder-function
//! profiles) are smooth, so a modest recursion depth is plenty.

use crate::error::{Error, Result};

/// Abscissae of the 15-point Kronrod rule on [-1, 1], nonnegative half.
/// Odd entries (indices 1, 3, 5) plus the center are the embedded Gauss
/// nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_813,
    0.949_107_912_342_759,
    0.864_864_423_359_769,
    0.741_531_185_599_394,
    0.586_087_235_467_691,
    0.405_845_151_377_397,
    0.207_784_955_007_898,
    0.0,
];

/// Kronrod weights matching [`XGK`].
const WGK: [f64; 8] = [
    0.022_935_322_010_529,
    0.063_092_092_629_979,
    0.104_790_010_322_250,
    0.140_653_259_715_525,
    0.169_004_726_639_267,
    0.190_350_578_064_785,
    0.204_432_940_075_298,
    0.209_482_141_084_728,
];

/// Gauss weights for nodes XGK[1], XGK[3], XGK[5] and the center.
const WG: [f64; 4] = [
    0.129_484_966_168_870,
    0.279_705_391_489_277,
    0.381_830_050_505_119,
    0.417_959_183_673_469,
];

const MAX_DEPTH: u32 = 40;

/// One Kronrod/Gauss pass over [a, b]; returns (kronrod, gauss).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let offset = half * XGK[i];
        let pair = f(center - offset) + f(center + offset);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * half, gauss * half)
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<f64> {
    let (kronrod, gauss) = gk15(f, a, b);
    if !kronrod.is_finite() {
        return Err(Error::Numerical(format!(
            "integrand is not finite on [{a}, {b}]"
        )));
    }
    let err = (kronrod - gauss).abs();
    if err <= tol {
        return Ok(kronrod);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Numerical(format!(
            "quadrature stalled on [{a}, {b}] with error estimate {err:e}"
        )));
    }
    let mid = 0.5 * (a + b);
    let half_tol = 0.5 * tol;
    Ok(adapt(f, a, mid, half_tol, depth + 1)? + adapt(f, mid, b, half_tol, depth + 1)?)
}

/// Integrates `f` over [a, b] to the requested relative tolerance.
///
/// The absolute budget is `rel_tol` times the first whole-interval estimate
/// (with a tiny floor so an integral that is genuinely zero still
/// terminates).
///
/// # Errors
/// `Domain` on a reversed or non-finite interval; `Numerical` if the
/// integrand is non-finite or the tolerance cannot be met.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::Domain(format!(
            "integration interval [{a}, {b}] must be finite and increasing"
        )));
    }
    if rel_tol <= 0.0 || rel_tol.is_nan() {
        return Err(Error::Domain(format!(
            "relative tolerance must be positive, got {rel_tol}"
        )));
    }
    let (first, _) = gk15(&f, a, b);
    if !first.is_finite() {
        return Err(Error::Numerical("integrand is not finite".into()));
    }
    let tol = rel_tol * first.abs().max(f64::MIN_POSITIVE.sqrt());
    adapt(&f, a, b, tol, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn weights_integrate_the_constant_exactly() {
        // Both embedded rules must reproduce integral of 1 over [-1, 1].
        let kron: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        let gauss: f64 = 2.0 * WG[..3].iter().sum::<f64>() + WG[3];
        assert!((kron - 2.0).abs() < 1e-14, "kronrod weight sum {kron}");
        assert!((gauss - 2.0).abs() < 1e-14, "gauss weight sum {gauss}");
    }

    #[test]
    fn polynomials_inside_the_exactness_degree_need_one_panel() {
        // Kronrod-15 is exact through degree 22.
        let exact = 2.0_f64.powi(11) / 11.0;
        let got = integrate(|x| x.powi(10), 0.0, 2.0, 1e-12).unwrap();
        assert!((got - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn oscillatory_integrand_meets_tolerance() {
        let got = integrate(f64::sin, 0.0, PI, 1e-12).unwrap();
        assert!((got - 2.0).abs() < 1e-11);
    }

    #[test]
    fn zero_integral_terminates() {
        let got = integrate(|x: f64| x, -1.0, 1.0, 1e-10).unwrap();
        assert!(got.abs() < 1e-15);
    }

    #[test]
    fn bad_intervals_are_rejected() {
        assert!(integrate(|x| x, 1.0, 0.0, 1e-10).is_err());
        assert!(integrate(|x| x, 0.0, f64::INFINITY, 1e-10).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn non_finite_integrands_error_out() {
        assert!(integrate(|x| 1.0 / x, -1.0, 1.0, 1e-10).is_err());
    }
}
