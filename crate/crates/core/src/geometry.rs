//! Geometry of the bent guide, mode labels, units, and potential profiles.
//!
//! The guide is a rectangular tube of square cross-section (side `a`) whose
//! axis follows a circular arc of radius `R`. Coordinates are arc length s
//! along the axis, transverse offset xi in the bend plane, and z across it;
//! the metric is flat except for the Lame coefficient h_s = 1 - kappa xi
//! with kappa = 1/R. The physical radius of a point is R (1 - kappa xi), so
//! xi = +a/2 is the inner wall and xi = -a/2 the outer wall.
//!
//! Internally everything runs in spectral units hbar^2/(2M) = 1: energies
//! carry dimension 1/length^2 and momenta 1/length. [`UnitSystem`] converts
//! at the presentation boundary only.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Circularly bent rectangular waveguide.
///
/// Construction enforces `0 < a < 2R`, which keeps the inner wall at a
/// strictly positive physical radius and the Lame coefficient positive
/// across the whole cross-section.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveguideGeometry {
    bend_radius: f64,
    width: f64,
    height: f64,
    curvature: f64,
    half_width: f64,
}

impl WaveguideGeometry {
    /// Geometry with bend radius `radius` and square cross-section side
    /// `width`.
    ///
    /// # Errors
    /// `Domain` unless `radius` and `width` are finite, positive, and
    /// `width < 2 radius`.
    pub fn new(radius: f64, width: f64) -> Result<Self> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::Domain(format!(
                "bend radius must be finite and positive, got {radius}"
            )));
        }
        Self::build(radius, 1.0 / radius, width)
    }

    /// Degenerate straight guide: infinite bend radius, zero curvature.
    /// Useful as the exact kappa = 0 reference.
    ///
    /// # Errors
    /// `Domain` unless `width` is finite and positive.
    pub fn straight(width: f64) -> Result<Self> {
        Self::build(f64::INFINITY, 0.0, width)
    }

    fn build(radius: f64, curvature: f64, width: f64) -> Result<Self> {
        if !width.is_finite() || width <= 0.0 {
            return Err(Error::Domain(format!(
                "width must be finite and positive, got {width}"
            )));
        }
        let half_width = 0.5 * width;
        if curvature * half_width >= 1.0 {
            return Err(Error::Domain(format!(
                "width {width} reaches the bend center: need a < 2R, R = {radius}"
            )));
        }
        Ok(Self {
            bend_radius: radius,
            width,
            height: width,
            curvature,
            half_width,
        })
    }

    #[must_use]
    pub fn bend_radius(&self) -> f64 {
        self.bend_radius
    }

    #[must_use]
    pub fn width(&self) -> f64 {
        self.width
    }

    /// z-extent; equals the width for the square cross-section.
    #[must_use]
    pub fn height(&self) -> f64 {
        self.height
    }

    /// kappa = 1/R.
    #[must_use]
    pub fn curvature(&self) -> f64 {
        self.curvature
    }

    /// xi_0 = a/2; walls sit at xi = +-xi_0.
    #[must_use]
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    fn check_xi(&self, xi: f64) -> Result<()> {
        if !xi.is_finite() || xi.abs() > self.half_width {
            return Err(Error::Domain(format!(
                "xi = {xi} outside the guide width [-{0}, {0}]",
                self.half_width
            )));
        }
        Ok(())
    }

    /// Lame coefficients (h_xi, h_z, h_s) = (1, 1, 1 - kappa xi).
    ///
    /// # Errors
    /// `Domain` when `|xi| > a/2`.
    pub fn lame_coefficients(&self, xi: f64) -> Result<(f64, f64, f64)> {
        self.check_xi(xi)?;
        Ok((1.0, 1.0, 1.0 - self.curvature * xi))
    }

    /// mu = 1 - kappa xi, the scaled physical radius r/R. Affine and
    /// order-reversing in xi; ranges over [1 - kappa xi_0, 1 + kappa xi_0].
    ///
    /// # Errors
    /// `Domain` when `|xi| > a/2`.
    pub fn to_mu(&self, xi: f64) -> Result<f64> {
        self.check_xi(xi)?;
        Ok(1.0 - self.curvature * xi)
    }

    /// Inverse of [`Self::to_mu`].
    ///
    /// # Errors
    /// `Domain` for a straight guide (mu is constant there) or when `mu`
    /// maps outside the width.
    pub fn from_mu(&self, mu: f64) -> Result<f64> {
        if self.curvature == 0.0 {
            return Err(Error::Domain(
                "mu does not parameterize a straight guide".into(),
            ));
        }
        let xi = (1.0 - mu) / self.curvature;
        self.check_xi(xi)?;
        Ok(xi)
    }

    /// mu at the inner wall (xi = +xi_0), the smaller value.
    #[must_use]
    pub fn mu_inner(&self) -> f64 {
        1.0 - self.curvature * self.half_width
    }

    /// mu at the outer wall (xi = -xi_0), the larger value.
    #[must_use]
    pub fn mu_outer(&self) -> f64 {
        1.0 + self.curvature * self.half_width
    }

    /// z-confinement energy n^2 pi^2 / a^2 in spectral units.
    #[must_use]
    pub fn confinement_energy(&self, n: u32) -> f64 {
        let fnum = f64::from(n) * PI / self.height;
        fnum * fnum
    }

    /// The curvature-induced attractive term -kappa^2 / (4 (1 - kappa xi)^2),
    /// in spectral units. Strictly negative for kappa > 0, zero for a
    /// straight guide.
    ///
    /// # Errors
    /// `Domain` when `|xi| > a/2`.
    pub fn anticentrifugal_potential(&self, xi: f64) -> Result<f64> {
        self.check_xi(xi)?;
        if self.curvature == 0.0 {
            return Ok(0.0);
        }
        let mu = 1.0 - self.curvature * xi;
        Ok(-self.curvature * self.curvature / (4.0 * mu * mu))
    }

    /// Effective transverse potential
    /// V_eff(xi) = n^2 pi^2 / a^2 - kappa^2 / (4 (1 - kappa xi)^2)
    /// in spectral units; always strictly below the confinement energy for
    /// kappa > 0.
    ///
    /// # Errors
    /// `Domain` when `n = 0` or `|xi| > a/2`.
    pub fn effective_potential(&self, n: u32, xi: f64) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("z quantum number n is 1-based".into()));
        }
        Ok(self.confinement_energy(n) + self.anticentrifugal_potential(xi)?)
    }
}

/// Quantum numbers of a bound mode: z-index `n`, lower Bessel-zero index
/// `l`, and zero count `w` across the width. The angular index m is fixed
/// to zero (no motion along the bend).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModeIndex {
    n: u32,
    l: u32,
    w: u32,
}

impl ModeIndex {
    /// # Errors
    /// `Domain` unless all three indices are >= 1.
    pub fn new(n: u32, l: u32, w: u32) -> Result<Self> {
        if n == 0 || l == 0 || w == 0 {
            return Err(Error::Domain(format!(
                "mode indices are 1-based, got (n, l, w) = ({n}, {l}, {w})"
            )));
        }
        Ok(Self { n, l, w })
    }

    #[must_use]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[must_use]
    pub fn l(&self) -> u32 {
        self.l
    }

    #[must_use]
    pub fn w(&self) -> u32 {
        self.w
    }

    /// Angular quantum number; identically zero in this model.
    #[must_use]
    pub fn m(&self) -> i32 {
        0
    }
}

/// Scale factor between spectral units (hbar^2/2M = 1) and the caller's
/// energy units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitSystem {
    energy_scale: f64,
}

impl UnitSystem {
    /// Spectral units: energies in 1/length^2.
    #[must_use]
    pub fn spectral() -> Self {
        Self { energy_scale: 1.0 }
    }

    /// # Errors
    /// `Domain` unless the scale is finite and positive.
    pub fn new(energy_scale: f64) -> Result<Self> {
        if !energy_scale.is_finite() || energy_scale <= 0.0 {
            return Err(Error::Domain(format!(
                "energy scale must be finite and positive, got {energy_scale}"
            )));
        }
        Ok(Self { energy_scale })
    }

    /// Scale hbar^2/(2 mass) from explicit constants.
    ///
    /// # Errors
    /// `Domain` unless both are finite and positive.
    pub fn from_hbar_mass(hbar: f64, mass: f64) -> Result<Self> {
        if !hbar.is_finite() || hbar <= 0.0 || !mass.is_finite() || mass <= 0.0 {
            return Err(Error::Domain(format!(
                "hbar and mass must be finite and positive, got ({hbar}, {mass})"
            )));
        }
        Self::new(hbar * hbar / (2.0 * mass))
    }

    #[must_use]
    pub fn energy_scale(&self) -> f64 {
        self.energy_scale
    }

    /// Converts a spectral energy (1/length^2) to the caller's units.
    #[must_use]
    pub fn to_physical_energy(&self, spectral: f64) -> f64 {
        spectral * self.energy_scale
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::spectral()
    }
}

/// Which potential a sampled profile describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    Effective,
    Bohm,
}

impl ProfileKind {
    #[must_use]
    pub fn label(&self) -> &'static str {
        match self {
            ProfileKind::Effective => "effective",
            ProfileKind::Bohm => "bohm",
        }
    }
}

/// A potential sampled across the guide width, ready for plotting.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialProfile {
    xi_samples: Vec<f64>,
    values: Vec<f64>,
    kind: ProfileKind,
}

impl PotentialProfile {
    /// # Errors
    /// `Domain` if the sample lists disagree in length, are empty, are not
    /// strictly increasing in xi, or contain non-finite values.
    pub fn new(xi_samples: Vec<f64>, values: Vec<f64>, kind: ProfileKind) -> Result<Self> {
        if xi_samples.is_empty() || xi_samples.len() != values.len() {
            return Err(Error::Domain(
                "profile needs equal, nonzero sample and value counts".into(),
            ));
        }
        if !xi_samples.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Domain(
                "profile samples must be strictly increasing in xi".into(),
            ));
        }
        if xi_samples
            .iter()
            .chain(values.iter())
            .any(|v| !v.is_finite())
        {
            return Err(Error::Numerical(
                "profile contains non-finite entries".into(),
            ));
        }
        Ok(Self {
            xi_samples,
            values,
            kind,
        })
    }

    #[must_use]
    pub fn xi_samples(&self) -> &[f64] {
        &self.xi_samples
    }

    #[must_use]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[must_use]
    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.xi_samples.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.xi_samples.is_empty()
    }
}

/// `count` evenly spaced xi values spanning [-xi_0, +xi_0] inclusive.
///
/// # Errors
/// `Domain` when `count < 2`.
pub fn xi_grid(geom: &WaveguideGeometry, count: usize) -> Result<Vec<f64>> {
    if count < 2 {
        return Err(Error::Domain(format!(
            "a profile needs at least 2 samples, got {count}"
        )));
    }
    let x0 = geom.half_width();
    let step = geom.width() / (count - 1) as f64;
    let mut grid: Vec<f64> = (0..count).map(|i| -x0 + step * i as f64).collect();
    // Pin the endpoints so accumulated rounding cannot push them outside.
    grid[0] = -x0;
    grid[count - 1] = x0;
    Ok(grid)
}

/// Samples the effective potential for the z-mode `n` on a uniform grid.
///
/// # Errors
/// Propagates domain checks from the geometry and grid.
pub fn effective_profile(
    geom: &WaveguideGeometry,
    n: u32,
    count: usize,
) -> Result<PotentialProfile> {
    let grid = xi_grid(geom, count)?;
    let values = grid
        .iter()
        .map(|&xi| geom.effective_potential(n, xi))
        .collect::<Result<Vec<f64>>>()?;
    PotentialProfile::new(grid, values, ProfileKind::Effective)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_enforces_the_width_bound() {
        assert!(WaveguideGeometry::new(2.0, 1.0).is_ok());
        // a = 2R puts the inner wall on the bend axis.
        assert!(WaveguideGeometry::new(1.0, 2.0).is_err());
        assert!(WaveguideGeometry::new(-1.0, 0.5).is_err());
        assert!(WaveguideGeometry::new(1.0, 0.0).is_err());
        assert!(WaveguideGeometry::new(f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn derived_fields_are_exact() {
        let g = WaveguideGeometry::new(2.0, 1.0).unwrap();
        assert_eq!(g.curvature(), 0.5);
        assert_eq!(g.half_width(), 0.5);
        assert_eq!(g.height(), 1.0);
    }

    #[test]
    fn lame_coefficient_tracks_the_physical_radius() {
        let g = WaveguideGeometry::new(2.0, 1.0).unwrap();
        assert_eq!(g.lame_coefficients(0.0).unwrap(), (1.0, 1.0, 1.0));
        assert_eq!(g.lame_coefficients(0.5).unwrap().2, 0.75);
        assert_eq!(g.lame_coefficients(-0.5).unwrap().2, 1.25);
        assert!(g.lame_coefficients(0.6).is_err());
    }

    #[test]
    fn straight_guide_has_no_curvature_term() {
        let g = WaveguideGeometry::straight(1.0).unwrap();
        assert_eq!(g.curvature(), 0.0);
        assert_eq!(g.to_mu(0.3).unwrap(), 1.0);
        assert_eq!(g.anticentrifugal_potential(0.2).unwrap(), 0.0);
        let v = g.effective_potential(1, 0.4).unwrap();
        assert_eq!(v, g.confinement_energy(1));
    }

    #[test]
    fn effective_potential_sits_below_confinement_for_bent_guides() {
        let g = WaveguideGeometry::new(2.0, 1.0).unwrap();
        let e1 = g.confinement_energy(1);
        for i in 0..=20 {
            let xi = -0.5 + 0.05 * f64::from(i);
            assert!(g.effective_potential(1, xi).unwrap() < e1);
        }
        assert!(g.effective_potential(0, 0.0).is_err());
    }

    #[test]
    fn mu_mapping_is_order_reversing_and_invertible() {
        let g = WaveguideGeometry::new(2.0, 1.0).unwrap();
        assert_eq!(g.to_mu(0.5).unwrap(), g.mu_inner());
        assert_eq!(g.to_mu(-0.5).unwrap(), g.mu_outer());
        assert!(g.mu_inner() < g.mu_outer());
        let xi = 0.37;
        let back = g.from_mu(g.to_mu(xi).unwrap()).unwrap();
        assert!((back - xi).abs() <= 4.0 * f64::EPSILON * xi.abs());
    }

    #[test]
    fn mode_index_rejects_zero_entries() {
        assert!(ModeIndex::new(1, 1, 1).is_ok());
        assert!(ModeIndex::new(0, 1, 1).is_err());
        assert!(ModeIndex::new(1, 0, 1).is_err());
        assert!(ModeIndex::new(1, 1, 0).is_err());
        assert_eq!(ModeIndex::new(2, 3, 4).unwrap().m(), 0);
    }

    #[test]
    fn unit_system_scales_energies() {
        let u = UnitSystem::from_hbar_mass(2.0, 1.0).unwrap();
        assert_eq!(u.energy_scale(), 2.0);
        assert_eq!(u.to_physical_energy(3.0), 6.0);
        assert!(UnitSystem::new(0.0).is_err());
        assert_eq!(UnitSystem::default().energy_scale(), 1.0);
    }

    #[test]
    fn profiles_validate_their_samples() {
        let g = WaveguideGeometry::new(2.0, 1.0).unwrap();
        let p = effective_profile(&g, 1, 11).unwrap();
        assert_eq!(p.len(), 11);
        assert_eq!(p.xi_samples()[0], -0.5);
        assert_eq!(p.xi_samples()[10], 0.5);
        assert_eq!(p.kind().label(), "effective");
        assert!(PotentialProfile::new(vec![0.0, 0.0], vec![1.0, 2.0], ProfileKind::Bohm).is_err());
        assert!(PotentialProfile::new(vec![], vec![], ProfileKind::Bohm).is_err());
        assert!(xi_grid(&g, 1).is_err());
    }
}
