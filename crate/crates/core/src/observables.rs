//! Derived physical quantities: the Bohm potential of the closed-form mode,
//! interference momentum/phase shifts, and the anticentrifugal force.
//!
//! The first-order momentum shift is kept in two flavors on purpose. The
//! source derivation of this system carries delta_p = Q0 / sqrt(E), twice
//! the Taylor value; `Paper` reproduces that literal prefactor so the
//! published numbers can be checked, `Corrected` applies the standard
//! factor 1/2, and `Exact` skips the expansion entirely. The two
//! first-order flavors differ by exactly 2 for every input.

use std::f64::consts::PI;

use crate::bessel::j0_zero;
use crate::error::{Error, Result};
use crate::geometry::{xi_grid, ModeIndex, PotentialProfile, ProfileKind, WaveguideGeometry};

/// Numerator coefficients of the Bohm potential
/// Q(xi) = kappa^2 (a2 xi^2 + a1 xi + a3) / (4 xi_0^2 (1 - kappa xi)^2).
///
/// With dz = zeta_{l+w} - zeta_l:
/// a1 = -2 dz^2 / kappa, a2 = dz^2, a3 = dz^2 / kappa^2 + xi_0^2,
/// which obey a1^2 = 4 a2 (a3 - xi_0^2) identically.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BohmCoefficients {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

/// Which momentum-shift formula to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftVariant {
    /// Literal published prefactor: delta_p = Q0 / sqrt(E).
    Paper,
    /// First-order Taylor value: delta_p = Q0 / (2 sqrt(E)).
    Corrected,
    /// No expansion: delta_p = sqrt(E) - sqrt(E - Q0).
    Exact,
}

impl ShiftVariant {
    #[must_use]
    pub fn label(&self) -> &'static str {
        match self {
            ShiftVariant::Paper => "paper",
            ShiftVariant::Corrected => "corrected",
            ShiftVariant::Exact => "exact",
        }
    }
}

/// Momentum and phase shift for one variant, spectral units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseShiftResult {
    pub delta_p: f64,
    pub delta_phi: f64,
    pub variant: ShiftVariant,
}

/// Bohm numerator coefficients for the closed-form mode `mode`.
///
/// # Errors
/// `Domain` for a straight guide (a1 and a3 diverge as kappa -> 0; the
/// barrier itself stays finite and is available through [`bohm_barrier`]).
pub fn bohm_coefficients(geom: &WaveguideGeometry, mode: ModeIndex) -> Result<BohmCoefficients> {
    let kappa = geom.curvature();
    if kappa == 0.0 {
        return Err(Error::Domain(
            "Bohm coefficients need a bent guide (kappa > 0)".into(),
        ));
    }
    let dz = j0_zero(mode.l() + mode.w())? - j0_zero(mode.l())?;
    let dz2 = dz * dz;
    let xi0 = geom.half_width();
    Ok(BohmCoefficients {
        a1: -2.0 * dz2 / kappa,
        a2: dz2,
        a3: dz2 / (kappa * kappa) + xi0 * xi0,
    })
}

/// Bohm potential Q(xi) of the closed-form mode, in spectral units.
///
/// # Errors
/// `Domain` for a straight guide or `|xi| > a/2`.
pub fn bohm_potential(geom: &WaveguideGeometry, mode: ModeIndex, xi: f64) -> Result<f64> {
    let c = bohm_coefficients(geom, mode)?;
    let mu = geom.to_mu(xi)?;
    let kappa = geom.curvature();
    let xi0 = geom.half_width();
    Ok(kappa * kappa * (c.a2 * xi * xi + c.a1 * xi + c.a3) / (4.0 * xi0 * xi0 * mu * mu))
}

/// Total Bohm barrier height
/// Q0 = (zeta_{l+w} - zeta_l)^2 / (4 xi_0^2) + kappa^2/4 + n^2 pi^2 / a^2.
/// Well-defined for every curvature including zero.
///
/// # Errors
/// Propagates zero-finding failures.
pub fn bohm_barrier(geom: &WaveguideGeometry, mode: ModeIndex) -> Result<f64> {
    let dz = j0_zero(mode.l() + mode.w())? - j0_zero(mode.l())?;
    let xi0 = geom.half_width();
    let kappa = geom.curvature();
    Ok(dz * dz / (4.0 * xi0 * xi0) + kappa * kappa / 4.0 + geom.confinement_energy(mode.n()))
}

/// Samples the Bohm potential on a uniform grid across the width.
///
/// # Errors
/// Propagates domain checks from the coefficients and the grid.
pub fn bohm_profile(
    geom: &WaveguideGeometry,
    mode: ModeIndex,
    count: usize,
) -> Result<PotentialProfile> {
    let grid = xi_grid(geom, count)?;
    let values = grid
        .iter()
        .map(|&xi| bohm_potential(geom, mode, xi))
        .collect::<Result<Vec<f64>>>()?;
    PotentialProfile::new(grid, values, ProfileKind::Bohm)
}

/// Momentum shift of a wave of energy `e` crossing a barrier `q0`, spectral
/// momentum units (p = sqrt(E)).
///
/// # Errors
/// `Domain` when `e <= 0`, when `q0 < 0`, or when `e <= q0` in the exact
/// variant (the comparison wave would not propagate).
pub fn momentum_shift(e: f64, q0: f64, variant: ShiftVariant) -> Result<f64> {
    if e <= 0.0 || !e.is_finite() {
        return Err(Error::Domain(format!("energy must be positive, got {e}")));
    }
    if q0 < 0.0 || !q0.is_finite() {
        return Err(Error::Domain(format!(
            "barrier height must be nonnegative, got {q0}"
        )));
    }
    match variant {
        ShiftVariant::Paper => Ok(q0 / e.sqrt()),
        ShiftVariant::Corrected => Ok(q0 / (2.0 * e.sqrt())),
        ShiftVariant::Exact => {
            if e <= q0 {
                return Err(Error::Domain(format!(
                    "energy {e} does not clear the barrier {q0}; no propagating comparison"
                )));
            }
            Ok(e.sqrt() - (e - q0).sqrt())
        }
    }
}

/// Phase shift accumulated over the half-turn arc: delta_phi =
/// (pi/kappa) delta_p, i.e. path length pi R times the momentum shift
/// (hbar = 1 in spectral units, for every variant).
///
/// # Errors
/// `Domain` for a straight guide (unbounded path) or negative `delta_p`.
pub fn phase_shift(geom: &WaveguideGeometry, delta_p: f64, _variant: ShiftVariant) -> Result<f64> {
    if geom.curvature() == 0.0 {
        return Err(Error::Domain(
            "phase accumulates over an unbounded path in a straight guide".into(),
        ));
    }
    if delta_p < 0.0 || !delta_p.is_finite() {
        return Err(Error::Domain(format!(
            "momentum shift must be nonnegative, got {delta_p}"
        )));
    }
    Ok(PI / geom.curvature() * delta_p)
}

/// Smallest possible interference phase shift for de Broglie wavelength
/// `lambda` on curvature `kappa`: the n = 0 barrier floor kappa^2/4 fed
/// through the chosen variant.
///
/// Paper: lambda kappa / 8. Corrected: lambda kappa / 16 radians.
/// Exact: (pi/kappa)(sqrt(E) - sqrt(E - kappa^2/4)) with E = (2 pi/lambda)^2.
/// The paper/corrected ratio is exactly 2 (both scale one product by a
/// power of two). kappa = 0 returns 0, the continuous straight-guide limit.
///
/// # Errors
/// `Domain` on nonpositive `lambda`, negative `kappa`, or an exact-variant
/// barrier at or above the wave energy.
pub fn min_phase_shift(lambda: f64, kappa: f64, variant: ShiftVariant) -> Result<f64> {
    if lambda <= 0.0 || !lambda.is_finite() {
        return Err(Error::Domain(format!(
            "wavelength must be positive, got {lambda}"
        )));
    }
    if kappa < 0.0 || !kappa.is_finite() {
        return Err(Error::Domain(format!(
            "curvature must be nonnegative, got {kappa}"
        )));
    }
    if kappa == 0.0 {
        return Ok(0.0);
    }
    let t = lambda * kappa;
    match variant {
        ShiftVariant::Paper => Ok(t / 8.0),
        ShiftVariant::Corrected => Ok(t / 16.0),
        ShiftVariant::Exact => {
            let p = 2.0 * PI / lambda;
            let e = p * p;
            let dp = momentum_shift(e, kappa * kappa / 4.0, ShiftVariant::Exact)?;
            Ok(PI / kappa * dp)
        }
    }
}

/// Mean anticentrifugal force kappa^3 / 2, spectral units (1/length^3).
/// Equals the gradient -dV_eff/dxi at the guide center; positive, pointing
/// toward the inner wall.
#[must_use]
pub fn anticentrifugal_force(geom: &WaveguideGeometry) -> f64 {
    let kappa = geom.curvature();
    kappa * kappa * kappa / 2.0
}
