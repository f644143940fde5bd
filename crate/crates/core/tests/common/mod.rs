//! Slow, independent reference evaluations used only by tests.
//!
//! These deliberately share nothing with the crate's own kernels: J0 comes
//! from its cosine integral representation by trapezoid (spectrally accurate
//! for this periodic-extendable integrand), Y0 from its log-weighted cosine
//! integral by tanh-sinh quadrature (which swallows the endpoint
//! singularity), and plain Simpson is used for norm recomputation.

// Each test binary pulls this module in whole; not all of them use every
// oracle.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

/// Euler's constant to f64 precision.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// J0(x) = (1/pi) integral of cos(x sin t) over [0, pi], composite
/// trapezoid. The integrand's odd derivatives vanish at both endpoints, so
/// the error decays faster than any power of 1/n.
pub fn j0_reference(x: f64) -> f64 {
    let n = 4000;
    let h = PI / n as f64;
    let mut sum = 0.5 * ((x * (0.0_f64).sin()).cos() + (x * PI.sin()).cos());
    for i in 1..n {
        sum += (x * (h * i as f64).sin()).cos();
    }
    sum * h / PI
}

/// Y0(x) = (4/pi^2) integral over [0, pi/2] of
/// cos(x cos t) (gamma + ln(2 x sin^2 t)) dt, evaluated by tanh-sinh
/// quadrature so the logarithmic endpoint singularity at t = 0 costs
/// nothing.
pub fn y0_reference(x: f64) -> f64 {
    let f = |t: f64| (x * t.cos()).cos() * (EULER_GAMMA + (2.0 * x * t.sin() * t.sin()).ln());
    tanh_sinh(f, 0.0, FRAC_PI_2) * 4.0 / (PI * PI)
}

/// Tanh-sinh quadrature over [a, b] with fixed step; handles integrable
/// endpoint singularities. Plenty for reference accuracy around 1e-14.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let center = 0.5 * (a + b);
    let radius = 0.5 * (b - a);
    let h = 1.0 / 64.0;
    let mut total = FRAC_PI_2 * f(center);
    let mut k = 1;
    loop {
        let u = h * k as f64;
        let s = FRAC_PI_2 * u.sinh();
        let t = s.tanh();
        let w = FRAC_PI_2 * u.cosh() / (s.cosh() * s.cosh());
        let gap = radius * (1.0 - t);
        if w < 1e-290 || gap == 0.0 {
            break;
        }
        total += w * (f(center + radius * t) + f(center - radius * t));
        k += 1;
    }
    total * radius * h
}

/// Composite Simpson with `n` panels (n even).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    assert!(
        n >= 2 && n.is_multiple_of(2),
        "Simpson needs an even panel count"
    );
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + h * i as f64);
    }
    sum * h / 3.0
}
