//! Bound-mode energies and radial wavefunctions, computed two ways.
//!
//! The closed form places J0 zeros at both walls simultaneously, which a
//! single J0 profile only satisfies approximately; its energy
//! (zeta_{l+w} - zeta_l)^2 / (4 xi_0^2) + n^2 pi^2 / a^2 is exact only in
//! the thin-guide limit. The exact spectrum instead quantizes through the
//! J0/Y0 cross product, whose k-th zero epsilon_k makes the full two-wall
//! Dirichlet condition hold identically. Both are first-class citizens
//! here, tagged by [`SolutionMethod`], so they can be compared at will.

use std::f64::consts::PI;

use crate::bessel::{self, cross_product_zero, j0_zero};
use crate::error::{Error, Result};
use crate::geometry::{ModeIndex, WaveguideGeometry};
use crate::quadrature;

/// How a radial solution was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionMethod {
    /// Single-J0 profile with the zeta-difference energy; thin-guide
    /// approximation.
    ClosedForm,
    /// Full J0/Y0 combination with cross-product quantization; exact for
    /// every curvature.
    ExactCrossProduct,
}

impl SolutionMethod {
    #[must_use]
    pub fn label(&self) -> &'static str {
        match self {
            SolutionMethod::ClosedForm => "closed_form",
            SolutionMethod::ExactCrossProduct => "exact",
        }
    }
}

/// One bound transverse mode.
///
/// The radial profile is
/// Phi0(xi) = sqrt(eps mu) [coeff_j J0(eps mu) + coeff_y Y0(eps mu)]
/// with mu = 1 - kappa xi, and the total energy in spectral units is
/// eps^2 kappa^2 + n^2 pi^2 / a^2.
#[derive(Clone, Copy, Debug)]
pub struct RadialSolution {
    pub epsilon: f64,
    pub energy: f64,
    pub coeff_j: f64,
    pub coeff_y: f64,
    /// Set by [`normalize`]: the squared norm the raw coefficients had.
    pub norm_c: Option<f64>,
    pub mode: ModeIndex,
    pub method: SolutionMethod,
}

impl RadialSolution {
    /// Transverse profile Phi0 at offset `xi`.
    ///
    /// # Errors
    /// `Domain` when `|xi| > a/2`.
    pub fn evaluate(&self, geom: &WaveguideGeometry, xi: f64) -> Result<f64> {
        let mu = geom.to_mu(xi)?;
        let arg = self.epsilon * mu;
        let mut radial = self.coeff_j * bessel::bessel_j(0, arg)?;
        if self.coeff_y != 0.0 {
            radial += self.coeff_y * bessel::bessel_y(0, arg)?;
        }
        Ok(arg.sqrt() * radial)
    }
}

/// Closed-form energy (zeta_{l+w} - zeta_l)^2 / (4 xi_0^2) + n^2 pi^2 / a^2.
///
/// # Errors
/// Propagates zero-finding failures.
pub fn energy_closed_form(geom: &WaveguideGeometry, mode: ModeIndex) -> Result<f64> {
    let lower = j0_zero(mode.l())?;
    let upper = j0_zero(mode.l() + mode.w())?;
    let dz = upper - lower;
    let xi0 = geom.half_width();
    Ok(dz * dz / (4.0 * xi0 * xi0) + geom.confinement_energy(mode.n()))
}

/// Single-J0 radial profile sqrt(eps mu) J0(eps mu) for a given total
/// energy, with eps = sqrt(energy - n^2 pi^2/a^2) / kappa.
///
/// # Errors
/// `Domain` for a straight guide, for energies at or below the
/// z-confinement threshold (no oscillatory radial content), or `|xi| > a/2`.
pub fn radial_wavefunction_closed_form(
    geom: &WaveguideGeometry,
    energy: f64,
    n: u32,
    xi: f64,
) -> Result<f64> {
    let kappa = geom.curvature();
    if kappa == 0.0 {
        return Err(Error::Domain(
            "the J0 radial profile needs a bent guide (kappa > 0)".into(),
        ));
    }
    let gap = energy - geom.confinement_energy(n);
    if gap <= 0.0 || gap.is_nan() {
        return Err(Error::Domain(format!(
            "energy {energy} does not exceed the z-confinement; no radial mode"
        )));
    }
    let eps = gap.sqrt() / kappa;
    let arg = eps * geom.to_mu(xi)?;
    Ok(arg.sqrt() * bessel::bessel_j(0, arg)?)
}

/// Builds the closed-form [`RadialSolution`] record for one mode.
///
/// # Errors
/// `Domain` for a straight guide (epsilon is undefined there).
pub fn closed_form_solution(geom: &WaveguideGeometry, mode: ModeIndex) -> Result<RadialSolution> {
    let kappa = geom.curvature();
    if kappa == 0.0 {
        return Err(Error::Domain(
            "closed-form solutions need a bent guide (kappa > 0)".into(),
        ));
    }
    let energy = energy_closed_form(geom, mode)?;
    let eps = (energy - geom.confinement_energy(mode.n())).sqrt() / kappa;
    Ok(RadialSolution {
        epsilon: eps,
        energy,
        coeff_j: 1.0,
        coeff_y: 0.0,
        norm_c: None,
        mode,
        method: SolutionMethod::ClosedForm,
    })
}

/// The `count` lowest exact radial modes for z-index `n`, by cross-product
/// quantization. The wall condition is satisfied identically at the outer
/// wall through the coefficient choice (coeff_j, coeff_y) =
/// (Y0(eps mu_out), -J0(eps mu_out)) and at the inner wall by the root
/// condition itself. Modes are labeled (n, l = 1, w = k).
///
/// # Errors
/// `Domain` for a straight guide or zero indices; propagates root-finding
/// failures.
pub fn solve_exact_modes(
    geom: &WaveguideGeometry,
    n: u32,
    count: u32,
) -> Result<Vec<RadialSolution>> {
    if n == 0 || count == 0 {
        return Err(Error::Domain(
            "mode enumeration needs n >= 1 and count >= 1".into(),
        ));
    }
    let kappa = geom.curvature();
    if kappa == 0.0 {
        return Err(Error::Domain(
            "exact annular modes need a bent guide (kappa > 0)".into(),
        ));
    }
    let mu_in = geom.mu_inner();
    let mu_out = geom.mu_outer();
    let shift = geom.confinement_energy(n);
    let mut out = Vec::with_capacity(count as usize);
    for k in 1..=count {
        let eps = cross_product_zero(mu_in, mu_out, k)?;
        let arg_out = eps * mu_out;
        out.push(RadialSolution {
            epsilon: eps,
            energy: eps * eps * kappa * kappa + shift,
            coeff_j: bessel::bessel_y(0, arg_out)?,
            coeff_y: -bessel::bessel_j(0, arg_out)?,
            norm_c: None,
            mode: ModeIndex::new(n, 1, k)?,
            method: SolutionMethod::ExactCrossProduct,
        });
    }
    Ok(out)
}

/// Normalizes a mode so the full wavefunction
/// Psi(s, xi, z) = Phi0(xi) sin(n pi z / a) / sqrt(1 - kappa xi)
/// has unit norm under the curved measure (1 - kappa xi) dxi ds dz over a
/// half-turn arc. The flat-measure integral of |Phi|^2 over the parameter
/// box (length pi R, width a, height a) is stored as `norm_c`; dividing the
/// coefficients by its square root makes both norms equal one.
///
/// # Errors
/// `Domain` for a straight guide (the arc length is unbounded);
/// `Numerical` if the quadrature cannot converge.
pub fn normalize(solution: &RadialSolution, geom: &WaveguideGeometry) -> Result<RadialSolution> {
    if !geom.bend_radius().is_finite() {
        return Err(Error::Domain(
            "normalization over a half-turn needs a finite bend radius".into(),
        ));
    }
    let xi0 = geom.half_width();
    let sol = *solution;
    let g = *geom;
    let radial = quadrature::integrate(
        move |xi| {
            let v = sol.evaluate(&g, xi).unwrap_or(f64::NAN);
            v * v
        },
        -xi0,
        xi0,
        1e-10,
    )?;
    let c = PI * geom.bend_radius() * (0.5 * geom.height()) * radial;
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::Numerical(format!("degenerate mode norm {c}")));
    }
    let scale = 1.0 / c.sqrt();
    Ok(RadialSolution {
        coeff_j: solution.coeff_j * scale,
        coeff_y: solution.coeff_y * scale,
        norm_c: Some(c),
        ..*solution
    })
}

/// w pi - (zeta_{l+w} - zeta_l): how far a J0 zero gap falls short of the
/// straight-guide spacing. Strictly positive and shrinking in l; this is
/// the zero-distribution fingerprint of the curvature attraction.
///
/// # Errors
/// `Domain` on zero indices.
pub fn zero_spacing_deficit(l: u32, w: u32) -> Result<f64> {
    if l == 0 || w == 0 {
        return Err(Error::Domain("deficit indices are 1-based".into()));
    }
    Ok(f64::from(w) * PI - (j0_zero(l + w)? - j0_zero(l)?))
}

/// A batch of modes for one geometry, sorted by energy.
#[derive(Clone, Debug)]
pub struct SpectrumResult {
    pub geometry: WaveguideGeometry,
    pub modes: Vec<RadialSolution>,
    pub n_max: u32,
    pub radial_count: u32,
}

impl SpectrumResult {
    /// Exact modes for all n in 1..=n_max, k in 1..=radial_count.
    ///
    /// # Errors
    /// Propagates enumeration failures.
    pub fn exact(geom: &WaveguideGeometry, n_max: u32, radial_count: u32) -> Result<Self> {
        Self::build(geom, n_max, radial_count, |n| {
            solve_exact_modes(geom, n, radial_count)
        })
    }

    /// Closed-form modes (l = 1, w = k) on the same index lattice.
    ///
    /// # Errors
    /// Propagates enumeration failures.
    pub fn closed_form(geom: &WaveguideGeometry, n_max: u32, radial_count: u32) -> Result<Self> {
        Self::build(geom, n_max, radial_count, |n| {
            (1..=radial_count)
                .map(|k| closed_form_solution(geom, ModeIndex::new(n, 1, k)?))
                .collect()
        })
    }

    fn build<F>(
        geom: &WaveguideGeometry,
        n_max: u32,
        radial_count: u32,
        mut per_n: F,
    ) -> Result<Self>
    where
        F: FnMut(u32) -> Result<Vec<RadialSolution>>,
    {
        if n_max == 0 || radial_count == 0 {
            return Err(Error::Domain(
                "spectrum bounds n_max and radial_count are 1-based".into(),
            ));
        }
        let mut modes = Vec::with_capacity((n_max * radial_count) as usize);
        for n in 1..=n_max {
            modes.extend(per_n(n)?);
        }
        modes.sort_by(|a, b| a.energy.total_cmp(&b.energy));
        Ok(Self {
            geometry: *geom,
            modes,
            n_max,
            radial_count,
        })
    }
}
